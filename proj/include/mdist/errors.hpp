#pragma once

#include <stdexcept>
#include <string>

namespace mdist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// polynomial / root finding
struct NonFiniteCoefficient : Error { using Error::Error; };
struct ToleranceNotReached : Error { using Error::Error; };
struct NotReciprocal : Error { using Error::Error; };
struct OddDegree : Error { using Error::Error; };

// exact algebra
struct DivisionByZeroFunction : Error { using Error::Error; };
struct NonIntegerPole : Error { using Error::Error; };
struct RepeatedPole : Error { using Error::Error; };
struct OddSize : Error { using Error::Error; };
struct NotAntisymmetric : Error { using Error::Error; };
struct PatternViolation : Error { using Error::Error; };

// bilinear forms / quadrature
struct DegenerateForm : Error { using Error::Error; };
struct ConvergenceViolation : Error { using Error::Error; };
struct SymmetryViolation : Error { using Error::Error; };

// budgets
struct BudgetExceeded : Error { using Error::Error; };
struct ZeroNotBracketed : Error { using Error::Error; };

} // namespace mdist
