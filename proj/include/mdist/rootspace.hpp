#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "distance.hpp"
#include "errors.hpp"
#include "forms.hpp"
#include "quadrature.hpp"

namespace mdist {

// ---------------------------------------------------------------------------
// Independent ground truth for the moment machinery: integrate directly over
// root space. For complex-coefficient moments,
//   H_N(s) = (1/N!) integral over C^N of prod phi(g_j)^{-2s} |det V|^2,
// with V the Vandermonde matrix of the roots. For real coefficients the
// domain splits into strata by signature (L real roots, M conjugate pairs):
//   F_N(s) = sum over L+2M=N of (1/(M! L!)) integral of
//            prod phi(a_l)^{-s} prod (phi(b_m) phi(conj b_m))^{-s} |det V|.
// Everything is brute quadrature -- no determinant or Pfaffian identities --
// so agreement with the Gram/Pfaffian routes is a real cross-check. Cost
// limits this to N <= 3 and the built-in kinds.
//
// Key substitution: for the built-in kinds, phi(g) = max(1,|z|) where
// g = z + t/z and |z| >= sqrt(t) (the two roots of x^2 - g x + t are z and
// t/z, and the one outside the disk of radius sqrt(t) dominates). The map
// covers the plane once, turns the weight into the radially smooth
// max(1,u)^{-2s}, and absorbs the square-root branch that makes the
// reciprocal kind awkward in g-coordinates. Area elements pick up the
// holomorphic Jacobian |1 - t/z^2|^2.
// ---------------------------------------------------------------------------

namespace detail {

struct PlaneNode {
    cdouble gamma;
    double w; // quadrature weight * area element * phi^{-2s}
};

struct GridLevel {
    int unit_gl = 20;  // Gauss order on [sqrt(t), 1]
    int ang_full = 16; // trapezoid count for the full circle (exact for the
                       // trigonometric polynomials that appear when N <= 3)
    int ang_half = 30; // Gauss order on (0, pi) for upper-half-plane grids
    int wall_gl = 20;  // Gauss order on each geometric radial panel
};

template <int GL, class Emit>
void gl_panel(double a, double b, Emit&& emit) {
    using G = boost::math::quadrature::gauss<double, GL>;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < G::abscissa().size(); ++i) {
        double x = G::abscissa()[i], w = G::weights()[i] * half;
        emit(mid + half * x, w);
        emit(mid - half * x, w);
    }
}

template <class Emit>
void gl_panel_order(int order, double a, double b, Emit&& emit) {
    switch (order) {
        case 10: gl_panel<10>(a, b, emit); break;
        case 20: gl_panel<20>(a, b, emit); break;
        case 30: gl_panel<30>(a, b, emit); break;
        default: throw Error("unsupported Gauss order");
    }
}

inline double pullback_t(const RootFunctionKind& kind) {
    switch (kind.tag) {
        case KindTag::mahler: return 0.0;
        case KindTag::reciprocal: return 1.0;
        case KindTag::t_reciprocal: return kind.t;
        default: throw Error("root-space oracle supports the built-in kinds only");
    }
}

// Tensor grid over the plane (or its upper half) in z-coordinates, with all
// scalar factors folded into the node weight. p is the weight exponent, i.e.
// the integrand's phi(gamma)^{-p} factor.
inline std::vector<PlaneNode> build_plane_grid(const RootFunctionKind& kind, double p,
                                               bool upper_half, const GridLevel& level) {
    double t = pullback_t(kind);
    double lo = std::sqrt(t);
    std::vector<std::pair<double, double>> radial; // (u, weight)
    auto emit_r = [&radial](double u, double w) { radial.emplace_back(u, w); };
    if (lo < 1.0 - 1e-14) gl_panel_order(level.unit_gl, lo, 1.0, emit_r);
    // geometric panels of ratio 2 out to 4096. The p in u^{-p} reaches 2(N+1),
    // and that pole at u = 0 dominates the Bernstein-ellipse bound: on a
    // ratio-2 panel the optimized Gauss-10 error for u^{-8} is ~6e-10, where
    // a ratio-4 panel would only reach ~1e-5. The remainder beyond 4096 is
    // O(R^-2) relative as long as p exceeds the polynomial growth by > 2.
    for (double wall = 1.0; wall < 4096.0 * 0.5; wall *= 2.0)
        gl_panel_order(level.wall_gl, wall, 2.0 * wall, emit_r);

    std::vector<std::pair<double, double>> angular; // (theta, weight)
    if (upper_half) {
        auto emit_a = [&angular](double th, double w) { angular.emplace_back(th, w); };
        gl_panel_order(level.ang_half, 0.0, std::numbers::pi, emit_a);
    } else {
        int K = level.ang_full;
        for (int k = 0; k < K; ++k)
            angular.emplace_back((k + 0.5) * 2.0 * std::numbers::pi / K,
                                 2.0 * std::numbers::pi / K);
    }

    std::vector<PlaneNode> grid;
    grid.reserve(radial.size() * angular.size());
    for (const auto& [u, wu] : radial) {
        double phi_pow = std::pow(std::max(1.0, u), -p);
        for (const auto& [th, wth] : angular) {
            cdouble z = std::polar(u, th);
            cdouble g = (t == 0.0) ? z : z + t / z;
            double jac = (t == 0.0) ? 1.0 : std::norm(1.0 - t / (z * z));
            grid.push_back({g, wu * wth * u * jac * phi_pow});
        }
    }
    return grid;
}

// ---- adaptive line integrals over the real roots --------------------------

struct LineLayout {
    std::vector<double> kinks;
    std::vector<double> sqrts;
    double Rcore = 0.0;
};

inline LineLayout line_layout(const RootFunctionKind& kind) {
    KinkGeometry g = kink_geometry(kind);
    LineLayout out;
    out.kinks = real_line_kinks(g);
    out.sqrts = sqrt_branch_points(kind, g);
    out.Rcore = smooth_radius(kind, g);
    return out;
}

// integral of f over (lb, infinity); f must decay like x^{-(sigma-d)} with
// the polynomial part of degree <= d. The truncation constant is a coarse
// overestimate -- overshooting the radius costs nothing after inversion.
template <class F>
double halfline(F&& f, double lb, const RootFunctionKind& kind, const LineLayout& lay,
                double sigma, int d, double cbound, const QuadratureSpec& spec) {
    double R = quad::truncation_radius_1d(cbound * std::pow(kind.kappa, -sigma), sigma, d,
                                          lay.Rcore, spec);
    if (lb >= R) return 0.0;
    if (lb >= lay.Rcore) return quad::tail_inverted(f, lb, R, spec);
    double out = quad::tail_inverted(f, lay.Rcore, R, spec);
    if (lb >= -lay.Rcore)
        return out + quad::segment(f, lb, lay.Rcore, spec, lay.kinks, lay.sqrts);
    // far-left lower bound: the piece below -Rcore decays toward -infinity
    // and needs the same inversion treatment as the right tail
    auto fneg = [&f](double y) { return f(-y); };
    return out + quad::tail_inverted(fneg, lay.Rcore, -lb, spec) +
           quad::segment(f, -lay.Rcore, lay.Rcore, spec, lay.kinks, lay.sqrts);
}

template <class F>
double fullline(F&& f, const RootFunctionKind& kind, const LineLayout& lay, double sigma, int d,
                double cbound, const QuadratureSpec& spec) {
    double R = quad::truncation_radius_1d(cbound * std::pow(kind.kappa, -sigma), sigma, d,
                                          lay.Rcore, spec);
    auto fneg = [&f](double x) { return f(-x); };
    return quad::segment(f, -lay.Rcore, lay.Rcore, spec, lay.kinks, lay.sqrts) +
           quad::tail_inverted(f, lay.Rcore, R, spec) +
           quad::tail_inverted(fneg, lay.Rcore, R, spec);
}

inline double phi_line(const RootFunctionKind& kind, double s, double x) {
    return std::pow(root_value(kind, cdouble(x, 0.0)), -s);
}

// ---- cumulative tail moments -----------------------------------------------

// T_k(x) = int_x^inf w(a) a^k da for k = 0, 1, 2, with w(a) = phi(a)^{-s} on
// the real line. The all-real strata of the moment integrals order the roots,
// and integrating out the largest root leaves a polynomial combination of
// these tails, so precomputing them removes the innermost adaptive nesting
// level. That matters for kinds whose line weight has square-root branch
// points: every nesting level spawns double-exponential panels, and the
// evaluation counts multiply across levels.
//
// Representation: barycentric interpolation at Chebyshev points on the panels
// between adjacent special points of w inside [-Rcore, Rcore]. A panel end
// sitting on a branch point is reparameterized as x = end -/+ width * q^2,
// which turns half-power behavior at the end into an analytic function of q.
// Outside the core the tails are evaluated directly; they are smooth there.
class TailMoments {
    static constexpr int n_ = 48;

public:
    // kmax: highest moment needed; int w a^k converges only for s > k + 1
    TailMoments(const RootFunctionKind& kind, double s, const LineLayout& lay, int kmax,
                const QuadratureSpec& spec)
        : kind_(kind), s_(s), kmax_(kmax), spec_(spec) {
        for (int k = 0; k <= kmax_; ++k)
            trunc_[k] = quad::truncation_radius_1d(2.0 * std::pow(kind.kappa, -s), s, k,
                                                   lay.Rcore, spec);
        std::vector<double> edges{-lay.Rcore, lay.Rcore};
        for (double p : lay.kinks)
            if (std::abs(p) < lay.Rcore - 1e-12) edges.push_back(p);
        for (double p : lay.sqrts)
            if (std::abs(p) < lay.Rcore - 1e-12) edges.push_back(p);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end(),
                                [](double x, double y) { return y - x < 1e-12; }),
                    edges.end());
        auto is_sqrt = [&lay](double p) {
            for (double q : lay.sqrts)
                if (std::abs(p - q) < 1e-12) return true;
            return false;
        };
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            double a = edges[i], b = edges[i + 1];
            bool sa = is_sqrt(a), sb = is_sqrt(b);
            if (sa && sb) { // one branch end per piece
                pieces_.push_back({a, 0.5 * (a + b), 1, {}});
                pieces_.push_back({0.5 * (a + b), b, 2, {}});
            } else {
                pieces_.push_back({a, b, sb ? 2 : (sa ? 1 : 0), {}});
            }
        }
        // fill right to left so each piece continues the accumulated tail
        double base[3] = {};
        for (int k = 0; k <= kmax_; ++k) base[k] = tail_beyond(k, lay.Rcore);
        for (std::size_t pi = pieces_.size(); pi-- > 0;) {
            Piece& pc = pieces_[pi];
            for (int k = 0; k <= kmax_; ++k) {
                // integrate in the interpolation coordinate: the q^2 map has
                // already absorbed the branch behavior, so the transformed
                // integrand is analytic across the piece and each node gap
                // (at most pi/n_ wide) is converged under the fixed rule
                auto gk = [this, &pc, k](double v) {
                    return weight(k, pc.map(v)) * pc.jac(v);
                };
                pc.vals[k][0] = base[k];
                for (int j = 1; j <= n_; ++j)
                    pc.vals[k][j] = pc.vals[k][j - 1] +
                                    quad::gauss10(gk, nodes()[j], nodes()[j - 1]);
                base[k] = pc.vals[k][n_];
            }
        }
    }

    double operator()(int k, double x) const {
        if (x >= pieces_.back().b) return tail_beyond(k, x);
        if (x < pieces_.front().a) {
            // T(x) = T(-Rcore) + int_x^{-Rcore} w a^k da, flipped to a right
            // tail over [Rcore, -x]; no symmetry of w is assumed
            auto g = [this, k](double y) { return weight(k, -y); };
            return pieces_.front().vals[k][n_] +
                   quad::tail_inverted(g, -pieces_.front().a, -x, spec_);
        }
        std::size_t lo = 0, hi = pieces_.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (x <= pieces_[mid].b) hi = mid;
            else lo = mid + 1;
        }
        return bary(pieces_[lo].vals[k], pieces_[lo].unmap(x));
    }

private:
    struct Piece {
        double a, b;
        int mode; // 0 affine, 1 branch point at a, 2 branch point at b
        std::array<std::array<double, n_ + 1>, 3> vals;

        double map(double v) const {
            if (mode == 1) {
                double q = 0.5 * (1.0 + v);
                return a + (b - a) * q * q;
            }
            if (mode == 2) {
                double q = 0.5 * (1.0 - v);
                return b - (b - a) * q * q;
            }
            return 0.5 * (a + b) + 0.5 * (b - a) * v;
        }
        double unmap(double x) const {
            double v;
            if (mode == 1)
                v = 2.0 * std::sqrt(std::max(0.0, (x - a) / (b - a))) - 1.0;
            else if (mode == 2)
                v = 1.0 - 2.0 * std::sqrt(std::max(0.0, (b - x) / (b - a)));
            else
                v = (2.0 * x - a - b) / (b - a);
            return std::clamp(v, -1.0, 1.0);
        }
        double jac(double v) const { // dx/dv
            if (mode == 1) return (b - a) * 0.5 * (1.0 + v);
            if (mode == 2) return (b - a) * 0.5 * (1.0 - v);
            return 0.5 * (b - a);
        }
    };

    static const std::array<double, n_ + 1>& nodes() {
        static const std::array<double, n_ + 1> v = [] {
            std::array<double, n_ + 1> out{};
            for (int j = 0; j <= n_; ++j) out[j] = std::cos(std::numbers::pi * j / n_);
            return out;
        }();
        return v;
    }

    static double bary(const std::array<double, n_ + 1>& f, double v) {
        double num = 0.0, den = 0.0;
        for (int j = 0; j <= n_; ++j) {
            double d = v - nodes()[j];
            if (std::abs(d) < 1e-14) return f[j];
            double wj = (j % 2 ? -1.0 : 1.0) * ((j == 0 || j == n_) ? 0.5 : 1.0);
            num += wj / d * f[j];
            den += wj / d;
        }
        return num / den;
    }

    double weight(int k, double a) const {
        double p = phi_line(kind_, s_, a);
        for (int i = 0; i < k; ++i) p *= a;
        return p;
    }

    double tail_beyond(int k, double x) const {
        if (x >= trunc_[k]) return 0.0;
        auto fk = [this, k](double a) { return weight(k, a); };
        return quad::tail_inverted(fk, x, trunc_[k], spec_);
    }

    RootFunctionKind kind_;
    double s_;
    int kmax_;
    QuadratureSpec spec_;
    double trunc_[3] = {};
    std::vector<Piece> pieces_;
};

// ---- grid assemblies -------------------------------------------------------

inline double H_oracle_sum(const std::vector<PlaneNode>& grid, int N) {
    // The symmetrized N-fold sum (1/N!) sum_{i_1..i_N} prod w * |Vandermonde|^2
    // collapses, by expanding both determinants over permutations, to the
    // determinant of the Hermitian power-moment matrix
    //   M[j][k] = sum_i w_i gamma_i^j conj(gamma_i)^k,   j,k < N.
    // Tuples with repeated indices contribute nothing (the Vandermonde factor
    // vanishes), so this equals the distinct-node sum while costing one pass.
    cdouble M[3][3] = {};
    for (const auto& a : grid) {
        cdouble p[3] = {1.0, a.gamma, a.gamma * a.gamma};
        for (int j = 0; j < N; ++j)
            for (int k = 0; k <= j; ++k) M[j][k] += a.w * p[j] * std::conj(p[k]);
    }
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) M[j][k] = std::conj(M[k][j]);
    cdouble det;
    if (N == 1)
        det = M[0][0];
    else if (N == 2)
        det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    else
        det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
              M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    return det.real();
}

// moments of the upper-half-plane stratum measure against 2 Im(b):
// [0] plain, [1] times Re(b), [2] times |b|^2 -- enough to evaluate the
// (L=1, M=1) stratum's quadratic dependence on the real root.
struct PairMoments {
    double plain = 0.0, re = 0.0, abs2 = 0.0;
};

inline PairMoments pair_moments(const std::vector<PlaneNode>& grid) {
    PairMoments m;
    for (const auto& a : grid) {
        double v = a.w * 2.0 * a.gamma.imag();
        m.plain += v;
        m.re += v * a.gamma.real();
        m.abs2 += v * std::norm(a.gamma);
    }
    return m;
}

} // namespace detail

inline double rootspace_oracle_H(const RootFunctionKind& kind, double s, int N,
                                 const QuadratureSpec& spec = {}) {
    if (N < 1 || N > 3) throw Error("root-space oracle supports N <= 3");
    if (!(s > N)) throw ConvergenceViolation("root-space oracle requires s > N");
    (void)spec;
    detail::GridLevel fine{20, 16, 30, 20}, coarse{10, 8, 30, 10};
    auto gf = detail::build_plane_grid(kind, 2.0 * s, false, fine);
    auto gc = detail::build_plane_grid(kind, 2.0 * s, false, coarse);
    double hf = detail::H_oracle_sum(gf, N);
    double hc = detail::H_oracle_sum(gc, N);
    if (std::abs(hf - hc) > 3e-5 * std::abs(hf))
        throw ToleranceNotReached("root-space H grids disagree beyond oracle tolerance");
    return hf;
}

inline double rootspace_oracle_F(const RootFunctionKind& kind, double s, int N,
                                 const QuadratureSpec& spec = {}) {
    if (N < 1 || N > 3) throw Error("root-space oracle supports N <= 3");
    if (!(s > N)) throw ConvergenceViolation("root-space oracle requires s > N");
    detail::LineLayout lay = detail::line_layout(kind);
    auto w = [&kind, s](double x) { return detail::phi_line(kind, s, x); };

    if (N == 1) {
        // single stratum (L,M) = (1,0)
        auto f = [&w](double x) { return w(x); };
        return detail::fullline(f, kind, lay, s, 0, 2.0, spec);
    }

    if (N == 2) {
        // (2,0): integral over a1 < a2 of w w (a2 - a1); the inner root
        // integrates to tail moments of w, leaving a single line integral
        detail::TailMoments T(kind, s, lay, 1, spec.tightened(0.1));
        auto outer20 = [&](double a1) { return w(a1) * (T(1, a1) - a1 * T(0, a1)); };
        double real_part = detail::fullline(outer20, kind, lay, s, 1, 16.0, spec);
        // (0,1): integral over the upper half plane of phi^{-2s} * 2 Im(b)
        detail::GridLevel fine{20, 16, 30, 20}, coarse{10, 8, 10, 10};
        double pf = detail::pair_moments(detail::build_plane_grid(kind, 2.0 * s, true, fine)).plain;
        double pc = detail::pair_moments(detail::build_plane_grid(kind, 2.0 * s, true, coarse)).plain;
        if (std::abs(pf - pc) > 3e-5 * std::abs(pf))
            throw ToleranceNotReached("root-space F grids disagree beyond oracle tolerance");
        // the 2^M Jacobian factor survives because the pair is parameterized
        // by its upper-half-plane representative only
        return real_part + 2.0 * pf;
    }

    // N == 3
    QuadratureSpec mid = spec.tightened(0.1);
    // (3,0): integral over a1 < a2 < a3 of w w w (a2-a1)(a3-a1)(a3-a2); the
    // largest root integrates to (a3^2 - (a1+a2) a3 + a1 a2) against w, i.e.
    // a combination of the precomputed tail moments at a2
    detail::TailMoments T(kind, s, lay, 2, spec.tightened(0.1));
    auto outer30 = [&](double a1) {
        auto middle = [&, a1](double a2) {
            return w(a2) * (a2 - a1) *
                   (T(2, a2) - (a1 + a2) * T(1, a2) + a1 * a2 * T(0, a2));
        };
        double c2 = 32.0 * (1.0 + std::abs(a1)) * (1.0 + std::abs(a1));
        return w(a1) * detail::halfline(middle, a1, kind, lay, s, 2, c2, mid);
    };
    double sorted_real = detail::fullline(outer30, kind, lay, s, 2, 64.0, spec);

    // (1,1): integral over a real, b in the upper half plane of
    // 2 w(a) phi(b)^{-2s} |b-a|^2 (2 Im b) -- the 2^M factor again survives
    // the upper-half-plane parameterization; |b-a|^2 is quadratic in a
    detail::GridLevel fine{20, 16, 30, 20}, coarse{10, 8, 10, 10};
    detail::PairMoments mf = detail::pair_moments(detail::build_plane_grid(kind, 2.0 * s, true, fine));
    detail::PairMoments mc = detail::pair_moments(detail::build_plane_grid(kind, 2.0 * s, true, coarse));
    double checks[3] = {mf.plain - mc.plain, mf.re - mc.re, mf.abs2 - mc.abs2};
    double scales[3] = {std::abs(mf.plain), std::abs(mf.re) + std::abs(mf.plain),
                        std::abs(mf.abs2)};
    for (int i = 0; i < 3; ++i)
        if (std::abs(checks[i]) > 3e-5 * (scales[i] + 1e-300))
            throw ToleranceNotReached("root-space F grids disagree beyond oracle tolerance");
    auto outer11 = [&](double a) {
        return 2.0 * w(a) * (mf.abs2 - 2.0 * a * mf.re + a * a * mf.plain);
    };
    double mixed = detail::fullline(outer11, kind, lay, s, 2, 16.0, spec);
    return sorted_real + mixed;
}

} // namespace mdist
