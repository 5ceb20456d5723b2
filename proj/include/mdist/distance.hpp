#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "polyroots.hpp"
#include "rational.hpp"

namespace mdist {

enum class KindTag { mahler, reciprocal, t_reciprocal, custom };

// A root function: continuous positive map on the complex plane growing like
// |gamma| at infinity. The induced distance on polynomials is
// |leading| * prod root_value(root).
struct RootFunctionKind {
    KindTag tag = KindTag::mahler;
    double t = 0.0;                // pullback parameter, 0 = mahler, 1 = reciprocal
    BigRational t_exact = 0;       // exact form of t where one was supplied
    std::function<double(cdouble)> fn; // custom root function
    double kappa = 1.0;            // growth certificate: value >= kappa*|gamma| ...
    double R0 = 1.0;               // ... once |gamma| >= R0

    static RootFunctionKind mahler() { return RootFunctionKind{}; }

    static RootFunctionKind reciprocal() {
        RootFunctionKind k;
        k.tag = KindTag::reciprocal;
        k.t = 1.0;
        k.t_exact = 1;
        k.kappa = 0.5;
        k.R0 = 2.0;
        return k;
    }

    static RootFunctionKind t_reciprocal(const BigRational& t) {
        if (t < 0 || t > 1) throw Error("t_reciprocal: t must lie in [0,1]");
        if (t == 0) return mahler();
        if (t == 1) return reciprocal();
        RootFunctionKind k;
        k.tag = KindTag::t_reciprocal;
        k.t = to_double(t);
        k.t_exact = t;
        k.kappa = 0.5;
        k.R0 = 2.0;
        return k;
    }

    static RootFunctionKind custom(std::function<double(cdouble)> fn, double kappa, double R0) {
        RootFunctionKind k;
        k.tag = KindTag::custom;
        k.fn = std::move(fn);
        k.kappa = kappa;
        k.R0 = R0;
        return k;
    }

    bool symmetric() const { return tag != KindTag::custom; } // value(-g) == value(g)
};

// value of the root function at gamma
inline double root_value(const RootFunctionKind& kind, const cdouble& gamma) {
    switch (kind.tag) {
        case KindTag::mahler:
            return std::max(1.0, std::abs(gamma));
        case KindTag::reciprocal:
        case KindTag::t_reciprocal: {
            // roots of x^2 - gamma x + t, multiplied after clamping at 1;
            // branch-independent, so either square root works
            cdouble disc = std::sqrt(gamma * gamma - 4.0 * kind.t);
            cdouble r1 = (std::abs(gamma + disc) >= std::abs(gamma - disc)) ? (gamma + disc) / 2.0
                                                                            : (gamma - disc) / 2.0;
            double a1 = std::abs(r1);
            double a2 = (a1 == 0.0) ? 0.0 : kind.t / a1;
            return std::max(1.0, a1) * std::max(1.0, a2);
        }
        case KindTag::custom:
            return kind.fn(gamma);
    }
    return 1.0;
}

// multiplicative distance of a polynomial: |a| prod root_value(root);
// the zero polynomial maps to 0.
inline double distance(const RootFunctionKind& kind, const Polynomial& f, double tol = 1e-13) {
    if (f.is_zero()) return 0.0;
    RootSet rs = roots(f, tol);
    double acc = std::abs(rs.leading);
    for (const auto& r : rs.roots) acc *= root_value(kind, r);
    return acc;
}

// distance of the monic polynomial x^N + b_1 x^{N-1} + ... + b_N
inline double monic_restriction(const RootFunctionKind& kind, const std::vector<double>& b,
                                double tol = 1e-13) {
    std::vector<cdouble> c;
    c.reserve(b.size() + 1);
    c.emplace_back(1.0, 0.0);
    for (double v : b) c.emplace_back(v, 0.0);
    return distance(kind, Polynomial(std::move(c)), tol);
}

// max over sampled gamma on |gamma| = radius of |root_value/|gamma| - 1|
inline double asymptotic_check(const RootFunctionKind& kind, double radius, int samples = 64) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double th = 2.0 * std::numbers::pi * (i + 0.5) / samples;
        cdouble g = std::polar(radius, th);
        worst = std::max(worst, std::abs(root_value(kind, g) / radius - 1.0));
    }
    return worst;
}

// |gamma| bound given root_value(gamma) <= xi
inline double root_bound(const RootFunctionKind& kind, double xi) {
    switch (kind.tag) {
        case KindTag::mahler: return xi;
        case KindTag::reciprocal: return xi + 1.0;
        case KindTag::t_reciprocal: return xi + kind.t;
        case KindTag::custom: return std::max(kind.R0, xi / kind.kappa);
    }
    return xi;
}

} // namespace mdist
