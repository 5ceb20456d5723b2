#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "forms.hpp"
#include "linalg.hpp"
#include "quadrature.hpp"
#include "ratfun.hpp"
#include "rational.hpp"

namespace mdist {

// ---------------------------------------------------------------------------
// Closed-form moment functions.
//
// For a root function phi and the associated coefficient-space measure, two
// moment integrals are tracked as rational functions of the exponent s:
//   H_N(s): complex-coefficient moment, carries an overall factor pi^N
//   F_N(s): real-coefficient moment, purely rational
// Each closed form is stored twice: as a canonical rational function (for
// evaluation) and as a factored view (constant times integer-polynomial
// factors) that makes the pole/zero structure explicit.
// ---------------------------------------------------------------------------

enum class MomentType { H, F };

struct FactorPower {
    IntPoly factor;
    int multiplicity = 1;
};

struct MomentClosedForm {
    MomentType type = MomentType::H;
    int N = 0;
    ScaledRationalFunction scaled; // pi^pi_power * body, canonical form

    // factored view: constant * prod(numerator) / prod(denominator)
    BigRational constant;
    std::vector<FactorPower> numerator;
    std::vector<FactorPower> denominator;

    RationalFunction expanded() const {
        RationalFunction acc{constant};
        for (const auto& f : numerator)
            acc = acc * RationalFunction(f.factor, IntPoly({BigInt(1)})).pow(f.multiplicity);
        for (const auto& f : denominator)
            acc = acc / RationalFunction(f.factor, IntPoly({BigInt(1)})).pow(f.multiplicity);
        return acc;
    }

    bool factored_matches() const { return expanded() == scaled.body; }

    double value(double s) const { return scaled.value(s); }
    BigRational body_value(const BigRational& s) const { return scaled.body_value(s); }

    std::string to_string() const {
        std::ostringstream os;
        os << (type == MomentType::H ? "H_" : "F_") << N << "(s) = ";
        if (scaled.pi_power != 0) os << "pi^" << scaled.pi_power << " * ";
        os << scaled.body.to_string();
        return os.str();
    }
};

namespace detail {

inline IntPoly s_poly() { return IntPoly({BigInt(1), BigInt(0)}); }
inline IntPoly s_minus(const BigInt& a) { return IntPoly({BigInt(1), -a}); }
inline IntPoly s2_minus(const BigInt& a2) { return IntPoly({BigInt(1), BigInt(0), -a2}); }

inline MomentClosedForm assemble(MomentType type, int N, int pi_power, BigRational constant,
                                 std::vector<FactorPower> num, std::vector<FactorPower> den) {
    MomentClosedForm out;
    out.type = type;
    out.N = N;
    out.constant = std::move(constant);
    out.numerator = std::move(num);
    out.denominator = std::move(den);
    out.scaled.pi_power = pi_power;
    out.scaled.body = out.expanded();
    return out;
}

inline void check_moment_degree(int N) {
    if (N < 1) throw Error("closed-form moments need N >= 1");
    if (N > 24) throw BudgetExceeded("closed-form moments capped at N = 24");
}

} // namespace detail

// H_N for the Mahler measure: (pi^N / N!) * prod_{n=1}^{N} s/(s-n).
inline MomentClosedForm H_closed_mahler(int N) {
    detail::check_moment_degree(N);
    std::vector<FactorPower> num{{detail::s_poly(), N}};
    std::vector<FactorPower> den;
    for (int n = 1; n <= N; ++n) den.push_back({detail::s_minus(BigInt(n)), 1});
    return detail::assemble(MomentType::H, N, N, make_rational(1, factorial(N)),
                            std::move(num), std::move(den));
}

// F_N for the Mahler measure: C_N * prod_{m=0}^{M} s/(s-(N-2m)), M = floor((N-1)/2),
// C_N = 2^N * prod_{m=1}^{M} (2m/(2m+1))^{N-2m}.
inline MomentClosedForm F_closed_mahler(int N) {
    detail::check_moment_degree(N);
    int M = (N - 1) / 2;
    BigRational c{int_pow(2, N)};
    for (int m = 1; m <= M; ++m) c *= rat_pow(make_rational(2 * m, 2 * m + 1), N - 2 * m);
    std::vector<FactorPower> num{{detail::s_poly(), M + 1}};
    std::vector<FactorPower> den;
    for (int m = 0; m <= M; ++m) den.push_back({detail::s_minus(BigInt(N - 2 * m)), 1});
    return detail::assemble(MomentType::F, N, 0, std::move(c), std::move(num), std::move(den));
}

// H_N for the reciprocal measure: 2^N pi^N * prod_{n=1}^{N} s/(s^2-n^2).
inline MomentClosedForm H_closed_reciprocal(int N) {
    detail::check_moment_degree(N);
    std::vector<FactorPower> num{{detail::s_poly(), N}};
    std::vector<FactorPower> den;
    for (int n = 1; n <= N; ++n) den.push_back({detail::s2_minus(BigInt(n) * n), 1});
    return detail::assemble(MomentType::H, N, N, BigRational(int_pow(2, N)),
                            std::move(num), std::move(den));
}

// F_N for the reciprocal measure: v_N * prod_{j=0}^{J} s^2/(s^2-(N-2j)^2),
// J = floor((N-1)/2), v_N = (2^N / N!) * prod_{n=1}^{N} (2n/(2n-1))^{N+1-n}.
inline MomentClosedForm F_closed_reciprocal(int N) {
    detail::check_moment_degree(N);
    int J = (N - 1) / 2;
    BigRational v = make_rational(int_pow(2, N), factorial(N));
    for (int n = 1; n <= N; ++n) v *= rat_pow(make_rational(2 * n, 2 * n - 1), N + 1 - n);
    std::vector<FactorPower> num{{detail::s_poly(), 2 * (J + 1)}};
    std::vector<FactorPower> den;
    for (int j = 0; j <= J; ++j) {
        BigInt p = N - 2 * j;
        den.push_back({detail::s2_minus(p * p), 1});
    }
    return detail::assemble(MomentType::F, N, 0, std::move(v), std::move(num), std::move(den));
}

// H_N for the t-reciprocal measure with rational t = p/q in [0,1]:
//   (pi^N s^N / N!) * prod_{n=1}^{N} ((1-t^{2n}) s + (1+t^{2n}) n) / (s^2-n^2),
// with each factor cleared to integer coefficients by q^{2n}.
inline MomentClosedForm H_closed_treciprocal(int N, const BigRational& t) {
    detail::check_moment_degree(N);
    if (t < 0 || t > 1) throw Error("t-reciprocal moments need t in [0,1]");
    BigInt p = numerator(t), q = denominator(t);
    BigRational c = make_rational(1, factorial(N));
    std::vector<FactorPower> num{{detail::s_poly(), N}};
    std::vector<FactorPower> den;
    for (int n = 1; n <= N; ++n) {
        BigInt p2n = int_pow(p, 2 * n), q2n = int_pow(q, 2 * n);
        num.push_back({IntPoly({q2n - p2n, (q2n + p2n) * n}), 1});
        c /= BigRational(q2n);
        den.push_back({detail::s2_minus(BigInt(n) * n), 1});
    }
    return detail::assemble(MomentType::H, N, N, std::move(c), std::move(num), std::move(den));
}

// Dispatch helpers over the built-in root-function kinds.
inline MomentClosedForm H_closed(const RootFunctionKind& kind, int N) {
    switch (kind.tag) {
        case KindTag::mahler: return H_closed_mahler(N);
        case KindTag::reciprocal: return H_closed_reciprocal(N);
        case KindTag::t_reciprocal: return H_closed_treciprocal(N, kind.t_exact);
        default: throw Error("no closed-form H for custom root functions");
    }
}

inline MomentClosedForm F_closed(const RootFunctionKind& kind, int N) {
    switch (kind.tag) {
        case KindTag::mahler: return F_closed_mahler(N);
        case KindTag::reciprocal: return F_closed_reciprocal(N);
        default: throw Error("no closed-form F for this root function");
    }
}

// Leading-order constant: lim_{s->inf} of the rational body (the pi^N factor
// for H-type forms is carried separately by the caller).
inline BigRational moment_limit(const MomentClosedForm& m) {
    const IntPoly& n = m.scaled.body.num();
    const IntPoly& d = m.scaled.body.den();
    if (n.degree() < d.degree()) return BigRational(0);
    if (n.degree() > d.degree()) throw Error("moment_limit: rational function unbounded at infinity");
    return make_rational(n.leading(), d.leading());
}

// ---------------------------------------------------------------------------
// Numeric moment routes via the bilinear-form machinery.
// ---------------------------------------------------------------------------

// H_N(s) as det of the Hermitian Gram matrix of a degree-(N-1) monic family.
inline double H_numeric(const RootFunctionKind& kind, double s, int N,
                        const MonicFamily& family, const QuadratureSpec& spec = {}) {
    if (N < 1) throw Error("H_numeric needs N >= 1");
    if (!(s > N)) throw ConvergenceViolation("H_numeric requires s > N");
    if (family.size() != N) throw PatternViolation("H_numeric: family size must equal N");
    Matrix<std::complex<double>> g = gram_matrix_numeric(kind, s, family, spec);
    std::complex<double> det = determinant(g);
    double scale = std::abs(det) + 1e-300;
    if (std::abs(det.imag()) > 1e-7 * scale)
        throw ConvergenceViolation("H_numeric: Gram determinant has a non-real part");
    return det.real();
}

inline double H_numeric(const RootFunctionKind& kind, double s, int N,
                        const QuadratureSpec& spec = {}) {
    return H_numeric(kind, s, N, MonicFamily::monomials(N), spec);
}

// F_N(s) as the Pfaffian of the skew matrix built from the combined
// real+complex skew form (bordered for odd N).
inline double F_numeric(const RootFunctionKind& kind, double s, int N,
                        const MonicFamily& family, const QuadratureSpec& spec = {}) {
    if (N < 1) throw Error("F_numeric needs N >= 1");
    if (!(s > N)) throw ConvergenceViolation("F_numeric requires s > N");
    if (family.size() != N) throw PatternViolation("F_numeric: family size must equal N");
    SkewMatrix<double> u = skew_matrix_numeric(kind, s, family, spec);
    return pfaffian(u);
}

inline double F_numeric(const RootFunctionKind& kind, double s, int N,
                        const QuadratureSpec& spec = {}) {
    return F_numeric(kind, s, N, MonicFamily::monomials(N), spec);
}

namespace detail {

// Numeric check that phi(-g) == phi(g) at a handful of sample points; the
// determinant shortcut below is only valid for symmetric root functions.
inline void require_symmetric(const RootFunctionKind& kind) {
    if (kind.symmetric()) return;
    const std::complex<double> samples[] = {
        {1.3, 0.7}, {-0.2, 2.1}, {2.5, 0.0}, {0.0, 0.4}, {-1.1, -0.3}};
    for (const auto& g : samples) {
        double a = root_value(kind, g), b = root_value(kind, -g);
        if (std::abs(a - b) > 1e-9 * (std::abs(a) + std::abs(b)))
            throw SymmetryViolation("determinant route needs phi(-g) == phi(g)");
    }
}

} // namespace detail

// F_N(s) once more, via the J x J determinant of skew pairings of odd-index
// against even-index family members (valid when phi(-g) == phi(g) and the
// family alternates parity). J = floor((N+1)/2); for odd N the last column
// holds border integrals.
inline double F_numeric_det_route(const RootFunctionKind& kind, double s, int N,
                                  const MonicFamily& family, const QuadratureSpec& spec = {}) {
    if (N < 1) throw Error("F_numeric_det_route needs N >= 1");
    if (!(s > N)) throw ConvergenceViolation("F_numeric_det_route requires s > N");
    detail::require_symmetric(kind);
    if (family.size() != N) throw PatternViolation("F_numeric_det_route: family size must equal N");
    if (!family.parity_alternating(1e-12))
        throw PatternViolation("F_numeric_det_route needs a parity-alternating family");
    int J = (N + 1) / 2;
    Matrix<double> a(static_cast<size_t>(J), static_cast<size_t>(J), 0.0);
    for (int j = 1; j <= J; ++j)
        for (int k = 1; k <= J; ++k) {
            double v = (2 * k <= N)
                ? skew_pair_numeric(kind, s, family[2 * j - 2], family[2 * k - 1], spec)
                : border_integral_numeric(kind, s, family[2 * j - 2], spec);
            a.at(static_cast<size_t>(j - 1), static_cast<size_t>(k - 1)) = v;
        }
    return determinant(a);
}

inline double F_numeric_det_route(const RootFunctionKind& kind, double s, int N,
                                  const QuadratureSpec& spec = {}) {
    return F_numeric_det_route(kind, s, N, MonicFamily::monomials(N), spec);
}

// ---------------------------------------------------------------------------
// Star-body volumes. The sublevel set { f : Phi(f) <= 1 } over monic degree-N
// real (resp. complex) polynomials has volume
//   2 F_N(N+1) / (N+1)     (real coefficients)
//   2 pi H_N(N+1) / (2N+2) (complex coefficients, a pi^{N+1} multiple)
// ---------------------------------------------------------------------------

struct ExactVolume {
    int pi_power = 0;   // volume = pi^pi_power * value
    BigRational value;

    double to_double() const {
        double p = 1.0;
        for (int i = 0; i < pi_power; ++i) p *= std::numbers::pi;
        return p * mdist::to_double(value);
    }
};

inline ExactVolume star_volume_real_exact(const RootFunctionKind& kind, int N) {
    MomentClosedForm f = F_closed(kind, N);
    BigRational s{N + 1};
    return ExactVolume{0, BigRational(2) * f.body_value(s) / s};
}

inline ExactVolume star_volume_complex_exact(const RootFunctionKind& kind, int N) {
    MomentClosedForm h = H_closed(kind, N);
    BigRational s{N + 1};
    return ExactVolume{h.scaled.pi_power + 1, h.body_value(s) / s};
}

inline double star_volume_real_numeric(const RootFunctionKind& kind, int N,
                                       const QuadratureSpec& spec = {}) {
    double s = N + 1;
    return 2.0 * F_numeric(kind, s, N, spec) / s;
}

inline double star_volume_complex_numeric(const RootFunctionKind& kind, int N,
                                          const QuadratureSpec& spec = {}) {
    double s = N + 1;
    return std::numbers::pi * H_numeric(kind, s, N, spec) / s;
}

// ---------------------------------------------------------------------------
// Value distribution encoded by an F-type moment: with f-hat(s) = F(s)/s and
// the Mellin-style pairing 1/(s-k) <-> xi^k, a simple-pole F yields a Laurent
// polynomial density valid for xi at or beyond the measure's minimum value.
// ---------------------------------------------------------------------------

struct LaurentDistribution {
    std::map<long, BigRational> coefficients; // exponent -> coefficient

    double eval(double xi) const {
        double acc = 0.0;
        for (const auto& [k, c] : coefficients) acc += mdist::to_double(c) * std::pow(xi, double(k));
        return acc;
    }

    std::string to_string() const {
        if (coefficients.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
            const auto& [k, c] = *it;
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            BigRational a = c < 0 ? BigRational(-c) : c;
            bool unit = a == 1 && k != 0;
            if (!unit) os << mdist::to_string(a);
            if (k != 0) {
                if (!unit) os << "*";
                os << "xi";
                if (k != 1) os << "^" << k;
            }
            first = false;
        }
        return first ? "0" : os.str();
    }
};

inline LaurentDistribution distribution_from_moment(const MomentClosedForm& f) {
    if (f.type != MomentType::F)
        throw Error("distribution_from_moment expects an F-type moment");
    RationalFunction fhat = f.scaled.body / RationalFunction::variable();
    PartialFractions pf = partial_fractions(fhat);
    if (!pf.poly_part.is_zero())
        throw Error("distribution_from_moment: moment does not vanish at infinity");
    if (recombine(pf) != fhat)
        throw Error("distribution_from_moment: partial fractions failed the exact self-check");
    LaurentDistribution out;
    for (const auto& [k, c] : pf.residues)
        if (c != 0) out.coefficients[k] = c;
    return out;
}

// ---------------------------------------------------------------------------
// Trajectories: how zeros and poles of the closed forms move as t sweeps
// across (0,1) for the t-reciprocal family.
// ---------------------------------------------------------------------------

struct TrajectoryPoint {
    BigRational t;
    enum class Feature { pole, zero } feature = Feature::pole;
    int index = 0; // signed pole location, or the factor index of a zero
    std::complex<double> location;
    int multiplicity = 1;
};

inline const char* feature_name(TrajectoryPoint::Feature f) {
    return f == TrajectoryPoint::Feature::pole ? "pole" : "zero";
}

namespace detail {

inline bool trajectory_order(const TrajectoryPoint& a, const TrajectoryPoint& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.feature != b.feature) return a.feature < b.feature; // poles first
    return a.index < b.index;
}

} // namespace detail

// Zero/pole census of H_N(t-reciprocal) on a grid of rational t in (0,1).
// Poles sit at s = +/-n; each numerator factor contributes the real zero
// s = -n (1+t^{2n}) / (1-t^{2n}), and s = 0 is a zero of multiplicity N.
inline std::vector<TrajectoryPoint> trajectory_H(int N, const std::vector<BigRational>& grid) {
    detail::check_moment_degree(N);
    std::vector<TrajectoryPoint> out;
    for (const BigRational& t : grid) {
        if (!(t > 0 && t < 1)) throw Error("trajectory_H needs t strictly inside (0,1)");
        MomentClosedForm h = H_closed_treciprocal(N, t);
        for (int n = 1; n <= N; ++n) {
            out.push_back({t, TrajectoryPoint::Feature::pole, n, {double(n), 0.0}, 1});
            out.push_back({t, TrajectoryPoint::Feature::pole, -n, {double(-n), 0.0}, 1});
        }
        // zeros come from the linear numerator factors a*s + b (the s^N factor
        // contributes the multiplicity-N zero at the origin, index 0)
        for (const auto& fp : h.numerator) {
            if (fp.factor.degree() != 1) continue;
            BigRational root = -make_rational(fp.factor.coeff(0), fp.factor.coeff(1));
            int idx = 0;
            for (int n = 1; n <= N && root != 0; ++n) {
                BigRational t2n = rat_pow(t, 2 * n);
                if (root == -BigRational(n) * (1 + t2n) / (1 - t2n)) { idx = n; break; }
            }
            out.push_back({t, TrajectoryPoint::Feature::zero, idx,
                           {mdist::to_double(root), 0.0}, fp.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), detail::trajectory_order);
    return out;
}

struct TrajectoryFReport {
    std::vector<TrajectoryPoint> points;
    std::vector<std::string> warnings; // intervals where no sign change was found
};

namespace detail {

// F(t-reciprocal) has no closed form, but it is rational in s with known
// poles at +/-(N-2j). Sample the determinant route at integer s > N and
// solve for the numerator polynomial; the quotient continues F below s = N.
struct ReconstructedF {
    std::vector<double> p; // numerator coefficients, ascending
    std::vector<double> q; // denominator prod (s^2 - (N-2j)^2), ascending

    double eval_p(double s) const {
        double acc = 0.0;
        for (size_t i = p.size(); i-- > 0;) acc = acc * s + p[i];
        return acc;
    }
    double eval_q(double s) const {
        double acc = 0.0;
        for (size_t i = q.size(); i-- > 0;) acc = acc * s + q[i];
        return acc;
    }
    double eval(double s) const { return eval_p(s) / eval_q(s); }
};

inline ReconstructedF reconstruct_F(const RootFunctionKind& kind, int N,
                                    const QuadratureSpec& spec) {
    int M = (N - 1) / 2; // nonzero pole pairs: N-2j for j = 0..M
    // denominator as ascending coefficient array
    std::vector<double> q{1.0};
    for (int j = 0; j <= M; ++j) {
        double c = double((N - 2 * j) * (N - 2 * j));
        std::vector<double> nq(q.size() + 2, 0.0);
        for (size_t i = 0; i < q.size(); ++i) {
            nq[i + 2] += q[i];
            nq[i] -= c * q[i];
        }
        q = std::move(nq);
    }
    int deg = int(q.size()) - 1;
    // deg+1 samples of p(s) = F(s) q(s) at s = N+2, N+3, ...
    std::vector<double> xs(deg + 1), ys(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        double s = N + 2 + i;
        xs[i] = s;
        double f = F_numeric_det_route(kind, s, N, spec);
        double qq = 1.0;
        for (int j = 0; j <= M; ++j) qq *= (s * s - double((N - 2 * j) * (N - 2 * j)));
        ys[i] = f * qq;
    }
    // Newton divided differences, then expand to monomial coefficients
    std::vector<double> dd = ys;
    for (int lvl = 1; lvl <= deg; ++lvl)
        for (int i = deg; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    std::vector<double> p{dd[deg]};
    for (int i = deg - 1; i >= 0; --i) {
        // p <- p * (x - xs[i]) + dd[i]
        std::vector<double> np(p.size() + 1, 0.0);
        for (size_t k = 0; k < p.size(); ++k) {
            np[k + 1] += p[k];
            np[k] -= xs[i] * p[k];
        }
        np[0] += dd[i];
        p = std::move(np);
    }
    ReconstructedF out;
    out.p = std::move(p);
    out.q = std::move(q);
    return out;
}

} // namespace detail

// Zero/pole census of F_N(t-reciprocal), N even, via numeric continuation:
// reconstruct the rational function from determinant-route samples, then
// bisect for sign changes of its numerator between consecutive negative
// poles (and between the innermost pole and 0). Intervals with no detected
// sign change are reported as warnings, not errors.
inline TrajectoryFReport trajectory_F(int N, const std::vector<BigRational>& grid,
                                      const QuadratureSpec& spec = {}) {
    if (N < 2 || N % 2 != 0 || N > 6)
        throw Error("trajectory_F supports even N between 2 and 6");
    TrajectoryFReport report;
    int M = (N - 1) / 2;
    for (const BigRational& t : grid) {
        if (!(t > 0 && t < 1)) throw Error("trajectory_F needs t strictly inside (0,1)");
        RootFunctionKind kind = RootFunctionKind::t_reciprocal(t);
        for (int j = 0; j <= M; ++j) {
            int pole = N - 2 * j;
            report.points.push_back({t, TrajectoryPoint::Feature::pole, pole, {double(pole), 0.0}, 1});
            report.points.push_back({t, TrajectoryPoint::Feature::pole, -pole, {double(-pole), 0.0}, 1});
        }
        detail::ReconstructedF rf = detail::reconstruct_F(kind, N, spec);
        // intervals between consecutive negative poles, rightmost last: for
        // N=4 these are (-4,-2) and (-2,0)
        std::vector<double> walls;
        for (int j = 0; j <= M; ++j) walls.push_back(-double(N - 2 * j));
        walls.push_back(0.0);
        int zero_index = 1;
        for (size_t w = 0; w + 1 < walls.size(); ++w) {
            double lo = walls[w], hi = walls[w + 1];
            // dyadically shrink the offsets from the walls until the
            // numerator changes sign across the bracket
            double span = hi - lo;
            double a = lo + span / 4, b = hi - span / 4;
            bool bracketed = false;
            for (int attempt = 0; attempt < 40; ++attempt) {
                if (rf.eval_p(a) * rf.eval_p(b) < 0) { bracketed = true; break; }
                a = lo + (a - lo) / 2;
                b = hi - (hi - b) / 2;
            }
            if (!bracketed) {
                std::ostringstream os;
                os << "t=" << mdist::to_string(t) << ": no sign change of the numerator in ("
                   << lo << ", " << hi << ")";
                report.warnings.push_back(os.str());
                continue;
            }
            while (b - a > 1e-13 * (1.0 + std::abs(a))) {
                double mid = 0.5 * (a + b);
                if (mid == a || mid == b) break;
                if (rf.eval_p(a) * rf.eval_p(mid) <= 0) b = mid;
                else a = mid;
            }
            double z = 0.5 * (a + b);
            report.points.push_back({t, TrajectoryPoint::Feature::zero, zero_index++,
                                     {z, 0.0}, 1});
        }
    }
    std::sort(report.points.begin(), report.points.end(), detail::trajectory_order);
    return report;
}

// Convenience: parse "lo:hi:step" into an inclusive rational grid.
inline std::vector<BigRational> rational_grid(const std::string& desc) {
    std::vector<BigRational> out;
    size_t c1 = desc.find(':'), c2 = desc.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw Error("grid format is lo:hi:step");
    BigRational lo = parse_rational(desc.substr(0, c1));
    BigRational hi = parse_rational(desc.substr(c1 + 1, c2 - c1 - 1));
    BigRational step = parse_rational(desc.substr(c2 + 1));
    if (step <= 0) throw Error("grid step must be positive");
    for (BigRational t = lo; t <= hi; t += step) out.push_back(t);
    return out;
}

} // namespace mdist
