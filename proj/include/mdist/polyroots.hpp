#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "poly.hpp"

namespace mdist {

using cdouble = std::complex<double>;

// Multiset of roots together with the leading coefficient, so that
// f(x) = leading * prod (x - root).
struct RootSet {
    cdouble leading{0.0, 0.0};
    std::vector<cdouble> roots;
};

namespace detail {

inline bool finite(const cdouble& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void sort_roots(std::vector<cdouble>& r) {
    std::sort(r.begin(), r.end(), [](const cdouble& a, const cdouble& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

// stable quadratic solver for x^2 + bx + c
inline std::pair<cdouble, cdouble> solve_monic_quadratic(const cdouble& b, const cdouble& c) {
    cdouble disc = std::sqrt(b * b - 4.0 * c);
    cdouble q = (std::abs(-b + disc) >= std::abs(-b - disc)) ? (-b + disc) / 2.0 : (-b - disc) / 2.0;
    if (q == cdouble(0.0, 0.0)) return {cdouble(0.0), cdouble(0.0)};
    return {q, c / q};
}

inline std::vector<cdouble> companion_eigenvalues(const std::vector<cdouble>& monic_rest) {
    // monic_rest holds c_1..c_n of x^n + c_1 x^{n-1} + ... + c_n, leading first
    const int n = static_cast<int>(monic_rest.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(0, i) = -monic_rest[static_cast<size_t>(i)];
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<cdouble> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

} // namespace detail

// Aberth-Ehrlich simultaneous refinement, companion-matrix initialization.
// tol is relative to the coefficient scale at each root.
inline RootSet roots(const Polynomial& f, double tol = 1e-13) {
    const auto& raw = f.coefficients();
    for (const auto& c : raw)
        if (!detail::finite(c)) throw NonFiniteCoefficient("roots: non-finite coefficient");
    if (f.is_zero()) throw Error("roots: zero polynomial has no root decomposition");

    Polynomial p = f.trimmed();
    RootSet rs;
    rs.leading = p.leading();
    int n = p.degree();
    if (n == 0) return rs;

    // split off roots at the origin
    std::vector<cdouble> c = p.coefficients();
    while (c.size() > 1 && c.back() == cdouble(0.0, 0.0)) {
        rs.roots.push_back(cdouble(0.0, 0.0));
        c.pop_back();
    }
    n = static_cast<int>(c.size()) - 1;

    if (n >= 1) {
        std::vector<cdouble> monic(c.begin() + 1, c.end());
        for (auto& v : monic) v /= c[0];

        if (n == 1) {
            rs.roots.push_back(-monic[0]);
        } else if (n == 2) {
            auto [r1, r2] = detail::solve_monic_quadratic(monic[0], monic[1]);
            rs.roots.push_back(r1);
            rs.roots.push_back(r2);
        } else {
            std::vector<cdouble> z = detail::companion_eigenvalues(monic);
            Polynomial pm{std::vector<cdouble>(c)};
            Polynomial pd = pm.derivative();
            const int max_iter = 120;
            for (int iter = 0; iter < max_iter; ++iter) {
                double worst = 0.0;
                for (int i = 0; i < n; ++i) {
                    cdouble pv = pm.eval(z[static_cast<size_t>(i)]);
                    cdouble dv = pd.eval(z[static_cast<size_t>(i)]);
                    if (pv == cdouble(0.0, 0.0)) continue;
                    cdouble newton = (dv == cdouble(0.0, 0.0)) ? cdouble(0.0) : pv / dv;
                    cdouble sum(0.0, 0.0);
                    for (int j = 0; j < n; ++j)
                        if (j != i) sum += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
                    cdouble denom = 1.0 - newton * sum;
                    cdouble w = (std::abs(denom) < 1e-300) ? newton : newton / denom;
                    z[static_cast<size_t>(i)] -= w;
                    worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
                }
                if (worst < 0.25 * tol) break;
            }
            rs.roots.insert(rs.roots.end(), z.begin(), z.end());
        }
    }

    // residual certificate: |p(root)| <= tol * sum |p_k| max(1,|root|)^k
    for (const auto& r : rs.roots) {
        double scale = 0.0, t = 1.0, ar = std::max(1.0, std::abs(r));
        for (int k = 0; k <= p.degree(); ++k) {
            scale += std::abs(p.coeff(k)) * t;
            t *= ar;
        }
        double resid = std::abs(p.eval(r));
        if (resid > std::max(tol * scale, 1e-300))
            throw ToleranceNotReached("roots: residual above tolerance");
    }

    // real-coefficient input: snap near-real roots, then pair conjugates
    bool real_input = true;
    for (const auto& v : raw)
        if (v.imag() != 0.0) { real_input = false; break; }
    if (real_input) {
        for (auto& r : rs.roots)
            if (std::abs(r.imag()) <= 1e-10 * (1.0 + std::abs(r))) r = cdouble(r.real(), 0.0);
        std::vector<cdouble> upper, paired;
        for (const auto& r : rs.roots) {
            if (r.imag() == 0.0) { paired.push_back(r); continue; }
            bool matched = false;
            for (auto& u : upper) {
                if (u.imag() * r.imag() < 0.0 &&
                    std::abs(u - std::conj(r)) <= 1e-8 * (1.0 + std::abs(r))) {
                    cdouble rep(0.5 * (u.real() + r.real()), 0.5 * (std::abs(u.imag()) + std::abs(r.imag())));
                    paired.push_back(rep);
                    paired.push_back(std::conj(rep));
                    u = cdouble(0.0, 0.0);
                    matched = true;
                    break;
                }
            }
            if (!matched) upper.push_back(r);
        }
        for (const auto& u : upper)
            if (u != cdouble(0.0, 0.0)) paired.push_back(u);
        rs.roots = std::move(paired);
    }
    detail::sort_roots(rs.roots);
    return rs;
}

inline Polynomial from_roots(const cdouble& leading, const std::vector<cdouble>& rts) {
    Polynomial p({leading});
    for (const auto& r : rts) p = p * Polynomial({cdouble(1.0), -r});
    return p;
}

// x^deg(f) * f(1/x) == f, i.e. palindromic coefficients
inline bool is_reciprocal(const Polynomial& f, double tol = 0.0) {
    Polynomial p = f.trimmed();
    int d = p.degree();
    if (d < 0) return false;
    double scale = 0.0;
    for (int k = 0; k <= d; ++k) scale = std::max(scale, std::abs(p.coeff(k)));
    for (int k = 0; k <= d; ++k)
        if (std::abs(p.coeff(k) - p.coeff(d - k)) > tol * scale) return false;
    return true;
}

// f(x) = x^J g(x + t/x) = sum_k g_k x^k (x^2 + t)^{J-k}; integer inputs with
// integer t stay integral (binomial expansion).
template <class T>
Poly<T> substitute_laurent(const Poly<T>& g, const T& t) {
    Poly<T> gt = g.trimmed();
    int J = gt.degree();
    if (J < 0) return Poly<T>();
    Poly<T> quad({T(1), T(0), t});
    Poly<T> acc; // sum
    Poly<T> quad_pow({T(1)});
    std::vector<Poly<T>> powers(static_cast<size_t>(J) + 1);
    for (int e = 0; e <= J; ++e) {
        powers[static_cast<size_t>(e)] = quad_pow;
        if (e < J) quad_pow = quad_pow * quad;
    }
    for (int k = 0; k <= J; ++k) {
        T gk = gt.coeff(J - k); // coefficient of y^{J-k} ... g_k with leading-first numbering
        if (gk == T(0)) continue;
        acc = acc + gk * (Poly<T>::monomial(k) * powers[static_cast<size_t>(J - k)]);
    }
    return acc;
}

inline Polynomial substitute_laurent(const Polynomial& g, double t) {
    return substitute_laurent<cdouble>(g, cdouble(t, 0.0));
}

// Inverse of substitute_laurent(·, 1) on reciprocal polynomials of even degree 2J:
// writes x^{-J} f in the basis {1, x^d + x^{-d}} and maps x^d + x^{-d} to the
// monic integer polynomial D_d(y) with D_d(x + 1/x) = x^d + x^{-d}.
template <class T>
Poly<T> recover_g(const Poly<T>& f) {
    Poly<T> p = f.trimmed();
    int d = p.degree();
    if (d < 0 || d % 2 != 0) throw OddDegree("recover_g: degree must be even");
    int J = d / 2;
    for (int k = 0; k <= d; ++k)
        if (!(p.coeff(k) == p.coeff(d - k))) throw NotReciprocal("recover_g: not palindromic");
    // D_0 = 2, D_1 = y, D_{m+1} = y D_m - D_{m-1}
    std::vector<Poly<T>> D(static_cast<size_t>(J) + 1);
    D[0] = Poly<T>({T(2)});
    if (J >= 1) D[1] = Poly<T>({T(1), T(0)});
    for (int m = 2; m <= J; ++m)
        D[static_cast<size_t>(m)] =
            Poly<T>({T(1), T(0)}) * D[static_cast<size_t>(m - 1)] - D[static_cast<size_t>(m - 2)];
    Poly<T> g({p.coeff(J)});
    for (int m = 1; m <= J; ++m) g = g + p.coeff(J - m) * D[static_cast<size_t>(m)];
    return g;
}

inline bool is_reciprocal(const IntPoly& f) {
    IntPoly p = f.trimmed();
    int d = p.degree();
    if (d < 0) return false;
    for (int k = 0; k <= d; ++k)
        if (p.coeff(k) != p.coeff(d - k)) return false;
    return true;
}

} // namespace mdist
