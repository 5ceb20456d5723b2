#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "quadrature.hpp"
#include "ratfun.hpp"
#include "rational.hpp"

namespace mdist {

// [M m] = C(M,m) - C(M,m-1); out-of-range binomials are zero.
inline BigInt bracket(long M, long m) { return binomial(M, m) - binomial(M, m - 1); }

// The four expansion identities behind the x + 1/x change of variables,
// each verified by direct exact arithmetic.
struct BracketIdentityReport {
    bool laurent_expansion = false;   // (x+1/x)^{j-1}(x-1/x) = sum [j-1 m] x^{j-2m}
    bool derivative_at_one = false;   // 2^k = sum [k-1 n](k-2n)
    bool odd_reciprocal_sum = false;  // j odd: 2^j/j = sum [j-1 m]/(j-2m)
    bool odd_even_double_sum = false; // j odd, k even: 2^{j+k}/(j(j+k)) = double sum
    bool all() const {
        return laurent_expansion && derivative_at_one && odd_reciprocal_sum &&
               odd_even_double_sum;
    }
};

inline BracketIdentityReport bracket_identities_hold(long j, long k) {
    BracketIdentityReport rep;

    // (x^2+1)^{j-1}(x^2-1) written in x^2 has coefficient [j-1 m] at x^{2(j-m)}.
    {
        IntPoly lhs({BigInt(1)});
        IntPoly quad({BigInt(1), BigInt(0), BigInt(1)});
        for (long i = 0; i + 1 < j; ++i) lhs = lhs * quad;
        lhs = lhs * IntPoly({BigInt(1), BigInt(0), BigInt(-1)});
        std::vector<BigInt> rhs(static_cast<size_t>(2 * j + 1), BigInt(0));
        for (long m = 0; m <= j; ++m) rhs[static_cast<size_t>(2 * (j - m))] = bracket(j - 1, m);
        bool ok = true;
        for (long e = 0; e <= 2 * j; ++e)
            if (lhs.coeff(e) != rhs[static_cast<size_t>(e)]) ok = false;
        rep.laurent_expansion = ok;
    }

    {
        BigInt sum = 0;
        for (long n = 0; n <= k; ++n) sum += bracket(k - 1, n) * BigInt(k - 2 * n);
        rep.derivative_at_one = (sum == int_pow(BigInt(2), k));
    }

    if (j % 2 == 1) {
        BigRational sum = 0;
        for (long m = 0; m <= j; ++m)
            sum += make_rational(bracket(j - 1, m), BigInt(j - 2 * m));
        rep.odd_reciprocal_sum = (sum == BigRational(int_pow(BigInt(2), j), BigInt(j)));
    }

    if (j % 2 == 1 && k % 2 == 0) {
        BigRational sum = 0;
        for (long m = 0; m <= j; ++m)
            for (long n = 0; n <= k; ++n) {
                BigInt num = bracket(j - 1, m) * bracket(k - 1, n);
                BigInt den = BigInt(j - 2 * m) * BigInt(j - 2 * m + k - 2 * n);
                sum += make_rational(num, den);
            }
        rep.odd_even_double_sum =
            (sum == BigRational(int_pow(BigInt(2), j + k), BigInt(j) * BigInt(j + k)));
    }

    return rep;
}

// Complete set of monic polynomials, one per degree 0..N-1.
class MonicFamily {
  public:
    explicit MonicFamily(std::vector<RealPoly> polys) : polys_(std::move(polys)) {
        for (size_t n = 0; n < polys_.size(); ++n) {
            if (polys_[n].degree() != static_cast<long>(n))
                throw PatternViolation("family member " + std::to_string(n) +
                                       " does not have degree " + std::to_string(n));
            if (std::abs(polys_[n].leading() - 1.0) > 1e-12)
                throw PatternViolation("family member " + std::to_string(n) + " is not monic");
        }
    }

    static MonicFamily monomials(int N) {
        std::vector<RealPoly> p;
        for (int n = 0; n < N; ++n) p.push_back(RealPoly::monomial(n, 1.0));
        return MonicFamily(std::move(p));
    }

    // (x - 1)^n
    static MonicFamily shifted_monomials(int N) {
        std::vector<RealPoly> p;
        RealPoly cur({1.0});
        RealPoly lin({1.0, -1.0});
        for (int n = 0; n < N; ++n) {
            p.push_back(cur);
            cur = cur * lin;
        }
        return MonicFamily(std::move(p));
    }

    // monic Chebyshev polynomials (alternating parity)
    static MonicFamily chebyshev(int N) {
        std::vector<RealPoly> p;
        for (int n = 0; n < N; ++n) {
            if (n == 0)
                p.push_back(RealPoly({1.0}));
            else if (n == 1)
                p.push_back(RealPoly({1.0, 0.0}));
            else {
                double c = (n == 2) ? 0.5 : 0.25;
                RealPoly x({1.0, 0.0});
                p.push_back(p[static_cast<size_t>(n - 1)] * x -
                            c * p[static_cast<size_t>(n - 2)]);
            }
        }
        return MonicFamily(std::move(p));
    }

    int size() const { return static_cast<int>(polys_.size()); }
    const RealPoly& operator[](int n) const { return polys_.at(static_cast<size_t>(n)); }

    bool parity_alternating(double tol = 0.0) const {
        for (size_t n = 0; n < polys_.size(); ++n)
            for (long e = 0; e <= polys_[n].degree(); ++e)
                if ((static_cast<long>(n) - e) % 2 != 0 &&
                    std::abs(polys_[n].coeff(e)) > tol)
                    return false;
        return true;
    }

  private:
    std::vector<RealPoly> polys_;
};

namespace detail {

// The root-function kink locus is the ellipse |r_+| = 1 with semi-axes
// (outer, inner) = (1+t, 1-t); circle for Mahler, the segment [-2,2] for the
// reciprocal measure. Custom kinds declare no locus.
struct KinkGeometry {
    double outer = 1.0;
    double inner = 1.0;
    bool known = true;
};

inline KinkGeometry kink_geometry(const RootFunctionKind& kind) {
    switch (kind.tag) {
        case KindTag::mahler: return {1.0, 1.0, true};
        case KindTag::reciprocal: return {2.0, 0.0, true};
        case KindTag::t_reciprocal: return {1.0 + kind.t, 1.0 - kind.t, true};
        case KindTag::custom: return {kind.R0, kind.R0, false};
    }
    return {1.0, 1.0, false};
}

inline std::vector<double> angular_kinks(const KinkGeometry& g, double r) {
    if (!g.known || r >= g.outer || r <= g.inner) return {};
    double a2 = g.outer * g.outer, b2 = g.inner * g.inner;
    if (a2 == b2) return {};
    double c2 = a2 * (r * r - b2) / (r * r * (a2 - b2));
    c2 = std::clamp(c2, 0.0, 1.0);
    double th = std::acos(std::sqrt(c2));
    const double pi = std::numbers::pi;
    return {th, pi - th, pi + th, 2.0 * pi - th};
}

inline std::vector<double> radial_breaks(const KinkGeometry& g) {
    return {g.inner, g.outer};
}

inline std::vector<double> real_line_kinks(const KinkGeometry& g) {
    return {-g.outer, -g.inner, 0.0, g.inner, g.outer};
}

// For the reciprocal measure the root of x^2 - gamma x + 1 has square-root
// branch points at gamma = +-2, right on the real-axis kinks.
inline std::vector<double> sqrt_branch_points(const RootFunctionKind& kind,
                                              const KinkGeometry& g) {
    if (kind.tag == KindTag::reciprocal) return {-g.outer, g.outer};
    return {};
}

inline std::vector<double> radial_sqrt_points(const RootFunctionKind& kind,
                                              const KinkGeometry& g) {
    if (kind.tag == KindTag::reciprocal) return {g.outer};
    return {};
}

// Near the branch radius the angular integrand develops a boundary layer of
// width sqrt(r - 2) at theta = 0 and pi; hand those panels to the
// double-exponential rule as well.
inline auto angular_sqrt_points(const RootFunctionKind& kind, const KinkGeometry& g) {
    bool active = (kind.tag == KindTag::reciprocal);
    double outer = g.outer;
    return [active, outer](double r) -> std::vector<double> {
        if (!active || std::abs(r - outer) > 0.5) return {};
        const double pi = std::numbers::pi;
        return {0.0, pi, 2.0 * pi};
    };
}

inline double coeff_l1(const RealPoly& p) {
    double s = 0.0;
    for (long e = 0; e <= p.degree(); ++e) s += std::abs(p.coeff(e));
    return s;
}

// beyond this radius the growth certificate phi >= kappa|gamma| applies and
// the integrand is smooth
inline double smooth_radius(const RootFunctionKind& kind, const KinkGeometry& g) {
    return std::max({kind.R0, g.outer, 1.0}) * 1.125;
}

} // namespace detail

// 1-D moment of the root function against P over the real line:
// integral of phi(x)^{-s} P(x) dx, with certified truncation.
inline double border_integral_numeric(const RootFunctionKind& kind, double s, const RealPoly& P,
                                      const QuadratureSpec& spec) {
    if (P.is_zero()) return 0.0;
    int d = static_cast<int>(P.degree());
    if (!(s > d + 1))
        throw ConvergenceViolation("border integral requires s > deg P + 1");
    auto geom = detail::kink_geometry(kind);
    double Rmin = detail::smooth_radius(kind, geom);
    double c = detail::coeff_l1(P) * std::pow(kind.kappa, -s);
    double R = quad::truncation_radius_1d(c, s, d, Rmin, spec);
    auto f = [&kind, &P, s](double x) {
        return std::pow(root_value(kind, cdouble(x, 0.0)), -s) * P.eval(x);
    };
    double core = quad::segment(f, -Rmin, Rmin, spec, detail::real_line_kinks(geom),
                                detail::sqrt_branch_points(kind, geom));
    double right = quad::tail_inverted(f, Rmin, R, spec);
    double left = quad::tail_inverted([&f](double x) { return f(-x); }, Rmin, R, spec);
    return core + right + left;
}

// Hermitian pairing: integral over the complex plane of
// phi(gamma)^{-2s} P(gamma) conj(Q(gamma)).
inline std::complex<double> hermitian_form_numeric(const RootFunctionKind& kind, double s,
                                                   const RealPoly& P, const RealPoly& Q,
                                                   const QuadratureSpec& spec) {
    if (P.is_zero() || Q.is_zero()) return {0.0, 0.0};
    int d = static_cast<int>(P.degree() + Q.degree());
    if (!(2.0 * s > d + 2))
        throw ConvergenceViolation("hermitian form requires 2s > deg P + deg Q + 2");
    auto geom = detail::kink_geometry(kind);
    double Rmin = detail::smooth_radius(kind, geom);
    double c = detail::coeff_l1(P) * detail::coeff_l1(Q) * std::pow(kind.kappa, -2.0 * s);
    double Rt = quad::truncation_radius_2d(c, 2.0 * s, d, Rmin, spec);
    Polynomial Pc = to_complex_poly(P), Qc = to_complex_poly(Q);
    auto ang = [&geom](double r) { return detail::angular_kinks(geom, r); };
    auto value = [&](bool real_part) {
        auto g = [&, real_part](double r, double th) {
            cdouble gamma = std::polar(r, th);
            double w = std::pow(root_value(kind, gamma), -2.0 * s);
            cdouble v = Pc.eval(gamma) * std::conj(Qc.eval(gamma));
            return w * (real_part ? v.real() : v.imag());
        };
        return quad::polar(g, 0.0, 2.0 * std::numbers::pi, detail::radial_breaks(geom), Rmin,
                           Rt, ang, spec, detail::radial_sqrt_points(kind, geom),
                           detail::angular_sqrt_points(kind, geom));
    };
    return {value(true), value(false)};
}

// Real skew pairing: integral over R^2 of P(x)Q(y) sgn(y-x) with weight
// phi^{-s} in each variable, computed through the partial integral
// F_P(y) = int_{-inf}^y phi^{-s} P as  int Q(y) phi(y)^{-s} (2 F_P(y) - I_P) dy.
inline double skew_form_real_numeric(const RootFunctionKind& kind, double s, const RealPoly& P,
                                     const RealPoly& Q, const QuadratureSpec& spec) {
    if (P.is_zero() || Q.is_zero()) return 0.0;
    int dP = static_cast<int>(P.degree()), dQ = static_cast<int>(Q.degree());
    // Absolute convergence of the iterated integral needs each variable to
    // decay on its own, i.e. s > max(deg) + 1; the pairwise sum bound is
    // stricter than necessary and would reject convergent matrix entries.
    if (!(s > std::max(dP, dQ) + 1))
        throw ConvergenceViolation("real skew form requires s > max(deg P, deg Q) + 1");
    auto geom = detail::kink_geometry(kind);
    double Rmin = detail::smooth_radius(kind, geom);
    auto kinks = detail::real_line_kinks(geom);
    auto sq = detail::sqrt_branch_points(kind, geom);
    QuadratureSpec inner = spec.tightened(0.1);

    auto fP = [&kind, &P, s](double x) {
        return std::pow(root_value(kind, cdouble(x, 0.0)), -s) * P.eval(x);
    };
    auto fPneg = [&fP](double x) { return fP(-x); };
    double cP = detail::coeff_l1(P) * std::pow(kind.kappa, -s);
    double RP = quad::truncation_radius_1d(cP, s, dP, Rmin, inner);

    double left_tail = quad::tail_inverted(fPneg, Rmin, RP, inner);
    double core_full = quad::segment(fP, -Rmin, Rmin, inner, kinks, sq);
    double IP = left_tail + core_full + quad::tail_inverted(fP, Rmin, RP, inner);

    auto FP = [&](double y) {
        if (y <= -Rmin) return quad::tail_inverted(fPneg, -y, RP, inner);
        if (y <= Rmin) return left_tail + quad::segment(fP, -Rmin, y, inner, kinks, sq);
        return left_tail + core_full + quad::tail_inverted(fP, Rmin, y, inner);
    };

    // magnitude bound on F_P for the outer truncation radius
    auto fPabs = [&fP](double x) { return std::abs(fP(x)); };
    double Iabs = quad::segment(fPabs, -Rmin, Rmin, inner, kinks, sq) +
                  quad::tail_inverted(fPabs, Rmin, RP, inner) +
                  quad::tail_inverted([&fPabs](double x) { return fPabs(-x); }, Rmin, RP, inner);

    auto h = [&](double y) {
        double wq = std::pow(root_value(kind, cdouble(y, 0.0)), -s) * Q.eval(y);
        return wq * (2.0 * FP(y) - IP);
    };
    double cQ = 3.0 * (Iabs + spec.abs_tol) * detail::coeff_l1(Q) * std::pow(kind.kappa, -s);
    double RQ = quad::truncation_radius_1d(cQ, s, dQ, Rmin, spec);

    return quad::segment(h, -Rmin, Rmin, spec, kinks, sq) +
           quad::tail_inverted(h, Rmin, RQ, spec) +
           quad::tail_inverted([&h](double y) { return h(-y); }, Rmin, RQ, spec);
}

// Complex skew pairing: 4 * integral over the upper half plane of
// phi(beta)^{-s} phi(conj beta)^{-s} Im(P(conj beta) Q(beta)).
inline double skew_form_complex_numeric(const RootFunctionKind& kind, double s, const RealPoly& P,
                                        const RealPoly& Q, const QuadratureSpec& spec) {
    if (P.is_zero() || Q.is_zero()) return 0.0;
    int d = static_cast<int>(P.degree() + Q.degree());
    if (!(2.0 * s > d + 2))
        throw ConvergenceViolation("complex skew form requires 2s > deg P + deg Q + 2");
    auto geom = detail::kink_geometry(kind);
    double Rmin = detail::smooth_radius(kind, geom);
    double c = detail::coeff_l1(P) * detail::coeff_l1(Q) * std::pow(kind.kappa, -2.0 * s);
    double Rt = quad::truncation_radius_2d(c, 2.0 * s, d, Rmin, spec);
    Polynomial Pc = to_complex_poly(P), Qc = to_complex_poly(Q);
    auto ang = [&geom](double r) { return detail::angular_kinks(geom, r); };
    auto g = [&](double r, double th) {
        cdouble beta = std::polar(r, th);
        double w = std::pow(root_value(kind, beta), -s) *
                   std::pow(root_value(kind, std::conj(beta)), -s);
        return w * std::imag(Pc.eval(std::conj(beta)) * Qc.eval(beta));
    };
    return 4.0 * quad::polar(g, 0.0, std::numbers::pi, detail::radial_breaks(geom), Rmin, Rt,
                             ang, spec, detail::radial_sqrt_points(kind, geom),
                             detail::angular_sqrt_points(kind, geom));
}

// Combined skew pairing entering the bordered matrix.
inline double skew_pair_numeric(const RootFunctionKind& kind, double s, const RealPoly& P,
                                const RealPoly& Q, const QuadratureSpec& spec) {
    return skew_form_real_numeric(kind, s, P, Q, spec) +
           skew_form_complex_numeric(kind, s, P, Q, spec);
}

// Gram matrix of the Hermitian form over the family.
inline Matrix<std::complex<double>> gram_matrix_numeric(const RootFunctionKind& kind, double s,
                                                        const MonicFamily& family,
                                                        const QuadratureSpec& spec) {
    int N = family.size();
    Matrix<std::complex<double>> W(static_cast<size_t>(N), static_cast<size_t>(N));
    for (int j = 0; j < N; ++j)
        for (int k = j; k < N; ++k) {
            auto v = hermitian_form_numeric(kind, s, family[j], family[k], spec);
            W.at(static_cast<size_t>(j), static_cast<size_t>(k)) = v;
            W.at(static_cast<size_t>(k), static_cast<size_t>(j)) = std::conj(v);
        }
    return W;
}

// Bordered antisymmetric matrix of the combined skew form: size 2J with
// J = floor((N+1)/2); for odd N the extra row/column holds sgn(k-j) times
// the 1-D border integral of the lower-indexed member.
inline SkewMatrix<double> skew_matrix_numeric(const RootFunctionKind& kind, double s,
                                              const MonicFamily& family,
                                              const QuadratureSpec& spec) {
    int N = family.size();
    int dim = 2 * ((N + 1) / 2);
    Matrix<double> U(static_cast<size_t>(dim), static_cast<size_t>(dim), 0.0);
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) {
            double v = skew_pair_numeric(kind, s, family[j], family[k], spec);
            U.at(static_cast<size_t>(j), static_cast<size_t>(k)) = v;
            U.at(static_cast<size_t>(k), static_cast<size_t>(j)) = -v;
        }
    if (dim > N) {
        for (int j = 0; j < N; ++j) {
            double v = border_integral_numeric(kind, s, family[j], spec);
            U.at(static_cast<size_t>(j), static_cast<size_t>(N)) = v;
            U.at(static_cast<size_t>(N), static_cast<size_t>(j)) = -v;
        }
    }
    return SkewMatrix<double>(std::move(U));
}

// Exact J x J matrix whose determinant is the F-moment for the Mahler
// measure over the monomial family.
inline Matrix<RationalFunction> mahler_A_matrix_exact(int N) {
    if (N < 1) throw Error("mahler_A_matrix_exact: N must be >= 1");
    int J = (N + 1) / 2;
    bool odd = (N % 2 == 1);
    Matrix<RationalFunction> A(static_cast<size_t>(J), static_cast<size_t>(J));
    for (int j = 1; j <= J; ++j)
        for (int k = 1; k <= J; ++k) {
            RationalFunction entry;
            if (odd && k == J) {
                // border column: 2/(2j-1) * s/(s-(2j-1))
                RationalFunction frac(IntPoly({BigInt(1), BigInt(0)}),
                                      IntPoly({BigInt(1), BigInt(-(2 * j - 1))}));
                entry = RationalFunction(BigRational(2, 2 * j - 1)) * frac;
            } else {
                RationalFunction frac(IntPoly({BigInt(1), BigInt(0)}),
                                      IntPoly({BigInt(1), BigInt(-2 * k)}));
                entry = RationalFunction(make_rational(
                            BigInt(4), BigInt(2 * k - 2 * j + 1) * BigInt(2 * j - 1))) *
                        frac;
            }
            A.at(static_cast<size_t>(j - 1), static_cast<size_t>(k - 1)) = entry;
        }
    return A;
}

struct RhoFactors {
    Matrix<RationalFunction> A; // the assembled matrix
    Matrix<RationalFunction> B; // Cauchy-like block (s-dependent last column when N odd)
    Matrix<RationalFunction> C; // unit lower-triangular bracket block
    Matrix<RationalFunction> D; // row-scaled bracket block; A = C * B * D^T
};

// Exact J x J matrix (plus its triangular/Cauchy factorization) whose
// determinant is the F-moment for the reciprocal measure.
inline RhoFactors rho_A_matrix_exact(int N) {
    if (N < 1) throw Error("rho_A_matrix_exact: N must be >= 1");
    int J = (N + 1) / 2;
    bool odd = (N % 2 == 1);
    size_t Js = static_cast<size_t>(J);
    Matrix<RationalFunction> A(Js, Js), B(Js, Js), C(Js, Js), D(Js, Js);

    for (int j = 1; j <= J; ++j)
        for (int m = 1; m <= J; ++m)
            C.at(static_cast<size_t>(j - 1), static_cast<size_t>(m - 1)) =
                RationalFunction(bracket(2 * j - 2, j - m));

    for (int m = 1; m <= J; ++m)
        for (int n = 1; n <= J; ++n) {
            RationalFunction entry;
            if (odd && n == J) {
                // 4 s^2 / ((2m-1)(s^2 - (2m-1)^2))
                BigInt q(2 * m - 1);
                entry = RationalFunction(IntPoly({BigInt(4), BigInt(0), BigInt(0)}),
                                         q * IntPoly({BigInt(1), BigInt(0), -q * q}));
            } else {
                BigInt den = BigInt(2 * m - 1) *
                             (BigInt(4 * n * n) - BigInt((2 * m - 1) * (2 * m - 1)));
                entry = RationalFunction(make_rational(BigInt(2 * n), den));
            }
            B.at(static_cast<size_t>(m - 1), static_cast<size_t>(n - 1)) = entry;
        }

    for (int k = 1; k <= J; ++k)
        for (int n = 1; n <= J; ++n) {
            RationalFunction entry;
            if (odd && k == J) {
                entry = RationalFunction(BigInt(n == J ? 1 : 0));
            } else {
                BigInt br = bracket(2 * k - 1, k - n);
                entry = RationalFunction(IntPoly({BigInt(16) * br, BigInt(0), BigInt(0)}),
                                         IntPoly({BigInt(1), BigInt(0), BigInt(-4 * n * n)}));
            }
            D.at(static_cast<size_t>(k - 1), static_cast<size_t>(n - 1)) = entry;
        }

    for (size_t j = 0; j < Js; ++j)
        for (size_t k = 0; k < Js; ++k) {
            RationalFunction acc;
            for (size_t m = 0; m < Js; ++m)
                for (size_t n = 0; n < Js; ++n)
                    acc = acc + C.at(j, m) * B.at(m, n) * D.at(k, n);
            A.at(j, k) = acc;
        }

    return {std::move(A), std::move(B), std::move(C), std::move(D)};
}

// Closed product form for det of the Cauchy-type matrix 1/(2k-2j+1).
inline BigRational cauchy_determinant_closed(int J) {
    BigRational num(1), den(1);
    for (int j = 1; j <= J; ++j)
        for (int k = 1; k <= J; ++k) {
            if (j < k) num *= BigRational(BigInt(2 * k - 2 * j) * BigInt(2 * k - 2 * j));
            den *= BigRational(BigInt(2 * k - 2 * j + 1));
        }
    BigRational r = num / den;
    long half = static_cast<long>(J) * (J - 1) / 2;
    if (half % 2 == 1) r = -r;
    return r;
}

// Exact Hermitian monomial pairing for the Mahler measure:
// <gamma^{j-1} | gamma^{k-1}> = 0 off-diagonal, pi s/(n(s-n)) on the diagonal.
inline ScaledRationalFunction mahler_hermitian_monomial_exact(int j, int k) {
    if (j != k) return ScaledRationalFunction{1, RationalFunction(0)};
    RationalFunction frac(IntPoly({BigInt(1), BigInt(0)}),
                          BigInt(j) * IntPoly({BigInt(1), BigInt(-j)}));
    return ScaledRationalFunction{1, frac};
}

struct HermitianOrthogonalization {
    MonicFamily family;
    std::vector<double> norms; // diagonal Hermitian norms
};

// Monic Gram-Schmidt against the Hermitian form (real-coefficient path; the
// built-in kinds give real pairings for real inputs).
inline HermitianOrthogonalization orthogonalize_hermitian(const RootFunctionKind& kind, double s,
                                                          int N, const QuadratureSpec& spec) {
    std::vector<RealPoly> Q;
    std::vector<double> norms;
    double scale =
        std::abs(hermitian_form_numeric(kind, s, RealPoly({1.0}), RealPoly({1.0}), spec).real());
    for (int n = 0; n < N; ++n) {
        RealPoly cur = RealPoly::monomial(n, 1.0);
        for (int k = 0; k < n; ++k) {
            double proj =
                hermitian_form_numeric(kind, s, cur, Q[static_cast<size_t>(k)], spec).real();
            cur = cur - (proj / norms[static_cast<size_t>(k)]) * Q[static_cast<size_t>(k)];
        }
        double nn = hermitian_form_numeric(kind, s, cur, cur, spec).real();
        if (!(nn > 1e-10 * scale))
            throw DegenerateForm("hermitian norm vanished at degree " + std::to_string(n));
        Q.push_back(cur);
        norms.push_back(nn);
    }
    return {MonicFamily(std::move(Q)), std::move(norms)};
}

struct SkewOrthogonalization {
    MonicFamily family;
    std::vector<double> normalizations; // one per 2x2 block
};

// Skew Gram-Schmidt in 2x2 blocks; the even member of each block is kept
// free of any correction along its odd partner (fixed pivot convention).
inline SkewOrthogonalization skew_orthogonalize(const RootFunctionKind& kind, double s, int N,
                                                const QuadratureSpec& spec) {
    if (N % 2 != 0) throw OddSize("skew_orthogonalize requires even N");
    int J = N / 2;
    std::vector<RealPoly> Q;
    std::vector<double> m;
    double scale =
        std::abs(skew_pair_numeric(kind, s, RealPoly({1.0}), RealPoly({1.0, 0.0}), spec)) +
        1e-300;
    auto project = [&](RealPoly u) {
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            const RealPoly& e = Q[static_cast<size_t>(2 * i)];
            const RealPoly& f = Q[static_cast<size_t>(2 * i + 1)];
            double uf = skew_pair_numeric(kind, s, u, f, spec);
            double ue = skew_pair_numeric(kind, s, u, e, spec);
            double mi = m[static_cast<size_t>(i)];
            u = u - (uf / mi) * e + (ue / mi) * f;
        }
        return u;
    };
    for (int j = 0; j < J; ++j) {
        RealPoly e = project(RealPoly::monomial(2 * j, 1.0));
        RealPoly f = project(RealPoly::monomial(2 * j + 1, 1.0));
        double mj = skew_pair_numeric(kind, s, e, f, spec);
        if (!(std::abs(mj) > 1e-9 * scale))
            throw DegenerateForm("skew normalization vanished at block " + std::to_string(j));
        Q.push_back(e);
        Q.push_back(f);
        m.push_back(mj);
    }
    return {MonicFamily(std::move(Q)), std::move(m)};
}

} // namespace mdist
