#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "ratfun.hpp"

namespace mdist {

template <class T>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<BigInt> : std::true_type {};
template <>
struct is_exact_scalar<BigRational> : std::true_type {};
template <>
struct is_exact_scalar<RationalFunction> : std::true_type {};

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T(0))
        : r_(rows), c_(cols), a_(rows * cols, fill) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Matrix submatrix(const std::vector<size_t>& idx) const {
        Matrix s(idx.size(), idx.size());
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) s.at(i, j) = at(idx[i], idx[j]);
        return s;
    }

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

namespace detail {

inline double scalar_mag(double v) { return std::abs(v); }
inline double scalar_mag(const std::complex<double>& v) { return std::abs(v); }

template <class T>
double float_zero_threshold(const Matrix<T>& m) {
    double mx = 0.0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) mx = std::max(mx, scalar_mag(m.at(i, j)));
    return 1e3 * std::numeric_limits<double>::epsilon() * std::max(mx, 1.0);
}

} // namespace detail

// Determinant: fraction-free Bareiss elimination over exact scalars,
// partial-pivot Gaussian elimination over floating scalars.
template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
    const size_t n = m.rows();
    if (n == 0) return T(1);

    if constexpr (is_exact_scalar<T>::value) {
        int sign = 1;
        T prev(1);
        for (size_t k = 0; k + 1 < n; ++k) {
            if (m.at(k, k) == T(0)) {
                size_t p = k + 1;
                while (p < n && m.at(p, k) == T(0)) ++p;
                if (p == n) return T(0);
                for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i) {
                for (size_t j = k + 1; j < n; ++j)
                    m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
                m.at(i, k) = T(0);
            }
            prev = m.at(k, k);
        }
        T det = m.at(n - 1, n - 1);
        return sign < 0 ? -det : det;
    } else {
        double thresh = detail::float_zero_threshold(m);
        T det(1);
        int sign = 1;
        for (size_t k = 0; k < n; ++k) {
            size_t p = k;
            for (size_t i = k + 1; i < n; ++i)
                if (detail::scalar_mag(m.at(i, k)) > detail::scalar_mag(m.at(p, k))) p = i;
            if (detail::scalar_mag(m.at(p, k)) <= thresh) return T(0);
            if (p != k) {
                for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                sign = -sign;
            }
            det = det * m.at(k, k);
            for (size_t i = k + 1; i < n; ++i) {
                T f = m.at(i, k) / m.at(k, k);
                for (size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            }
        }
        return sign < 0 ? -det : det;
    }
}

// Square antisymmetric matrix; A^T = -A verified on construction.
template <class T>
class SkewMatrix {
  public:
    explicit SkewMatrix(Matrix<T> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw NotAntisymmetric("skew matrix not square");
        if constexpr (is_exact_scalar<T>::value) {
            for (size_t i = 0; i < m_.rows(); ++i)
                for (size_t j = i; j < m_.cols(); ++j)
                    if (!(m_.at(i, j) == -m_.at(j, i)))
                        throw NotAntisymmetric("A^T != -A");
        } else {
            double tol = detail::float_zero_threshold(m_);
            for (size_t i = 0; i < m_.rows(); ++i)
                for (size_t j = i; j < m_.cols(); ++j)
                    if (detail::scalar_mag(m_.at(i, j) + m_.at(j, i)) > tol)
                        throw NotAntisymmetric("A^T != -A");
        }
    }

    // builds from the strict upper triangle, mirroring with sign
    static SkewMatrix from_upper(size_t n, const std::vector<T>& upper) {
        Matrix<T> m(n, n);
        size_t idx = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                m.at(i, j) = upper.at(idx);
                m.at(j, i) = -upper.at(idx);
                ++idx;
            }
        return SkewMatrix(std::move(m));
    }

    size_t size() const { return m_.rows(); }
    const T& at(size_t i, size_t j) const { return m_.at(i, j); }
    const Matrix<T>& matrix() const { return m_; }

    SkewMatrix submatrix(const std::vector<size_t>& idx) const {
        return SkewMatrix(m_.submatrix(idx));
    }

    friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) {
        if (a.size() != b.size()) throw Error("skew matrix size mismatch");
        Matrix<T> m(a.size(), a.size());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < a.size(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
        return SkewMatrix(std::move(m));
    }

  private:
    Matrix<T> m_;
};

namespace detail {

// sum over perfect matchings with signs; exact scalars, small sizes
template <class T>
T pfaffian_matchings(const Matrix<T>& m, std::vector<size_t>& idx) {
    if (idx.empty()) return T(1);
    size_t first = idx[0];
    T acc(0);
    for (size_t pos = 1; pos < idx.size(); ++pos) {
        size_t partner = idx[pos];
        std::vector<size_t> rest;
        rest.reserve(idx.size() - 2);
        for (size_t q = 1; q < idx.size(); ++q)
            if (q != pos) rest.push_back(idx[q]);
        T term = m.at(first, partner) * pfaffian_matchings(m, rest);
        if (pos % 2 == 0) term = -term;
        acc = acc + term;
    }
    return acc;
}

} // namespace detail

// Pfaffian of an antisymmetric matrix. Exact scalars of size <= 8 use the
// perfect-matching expansion; larger or floating matrices use skew
// elimination by congruence (2x2 block pivoting). Pf^2 = det throughout.
template <class T>
T pfaffian(const SkewMatrix<T>& a) {
    const size_t n = a.size();
    if (n % 2 != 0) throw OddSize("pfaffian: odd size");
    if (n == 0) return T(1);

    if constexpr (is_exact_scalar<T>::value) {
        if (n <= 8) {
            std::vector<size_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            return detail::pfaffian_matchings(a.matrix(), idx);
        }
    }

    Matrix<T> m = a.matrix();
    double thresh = 0.0;
    if constexpr (!is_exact_scalar<T>::value) thresh = detail::float_zero_threshold(m);
    T pf(1);
    for (size_t k = 0; k + 1 < n; k += 2) {
        size_t p = k + 1;
        if constexpr (is_exact_scalar<T>::value) {
            while (p < n && m.at(k, p) == T(0)) ++p;
            if (p == n) return T(0);
        } else {
            for (size_t q = k + 2; q < n; ++q)
                if (detail::scalar_mag(m.at(k, q)) > detail::scalar_mag(m.at(k, p))) p = q;
            if (detail::scalar_mag(m.at(k, p)) <= thresh) return T(0);
        }
        if (p != k + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k + 1, j), m.at(p, j));
            for (size_t j = 0; j < n; ++j) std::swap(m.at(j, k + 1), m.at(j, p));
            pf = -pf;
        }
        T b = m.at(k, k + 1);
        pf = pf * b;
        for (size_t i = k + 2; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                T upd = m.at(i, j) + (m.at(k + 1, i) * m.at(k, j) - m.at(k, i) * m.at(k + 1, j)) / b;
                m.at(i, j) = upd;
                m.at(j, i) = -upd;
            }
    }
    return pf;
}

// Strictly increasing map from {1..2M} into {1..2J}, with the sign of the
// permutation (image, complement) of {1..2J}.
struct IncreasingMap {
    std::vector<int> image;      // 1-based, strictly increasing
    std::vector<int> complement; // the remaining indices, increasing
    int sign = 1;
};

inline std::vector<IncreasingMap> increasing_maps(int K, int N) {
    if (K < 0 || K > N) return {};
    std::vector<IncreasingMap> out;
    std::vector<int> pick(static_cast<size_t>(K));
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        IncreasingMap m;
        m.image = pick;
        for (int v = 1; v <= N; ++v)
            if (!std::binary_search(pick.begin(), pick.end(), v)) m.complement.push_back(v);
        long inversions = 0;
        for (int a : m.image)
            for (int b : m.complement)
                if (a > b) ++inversions;
        m.sign = (inversions % 2 == 0) ? 1 : -1;
        out.push_back(std::move(m));
        // advance combination
        int i = K - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == N - (K - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < K; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

// Pf(R + C) expanded as sum over even-size increasing maps u of
// sgn(u) Pf(R restricted to the complement) Pf(C restricted to the image).
template <class T>
T pfaffian_sum_expansion(const SkewMatrix<T>& r, const SkewMatrix<T>& c) {
    if (r.size() != c.size()) throw Error("pfaffian_sum_expansion: size mismatch");
    const int n = static_cast<int>(r.size());
    if (n % 2 != 0) throw OddSize("pfaffian_sum_expansion: odd size");
    T acc(0);
    for (int m2 = 0; m2 <= n; m2 += 2) {
        for (const auto& u : increasing_maps(m2, n)) {
            std::vector<size_t> img, comp;
            for (int v : u.image) img.push_back(static_cast<size_t>(v - 1));
            for (int v : u.complement) comp.push_back(static_cast<size_t>(v - 1));
            T term = pfaffian(r.submatrix(comp)) * pfaffian(c.submatrix(img));
            if (u.sign < 0) term = -term;
            acc = acc + term;
        }
    }
    return acc;
}

// For skew matrices vanishing on equal-parity index pairs (1-based), the
// Pfaffian reduces to the determinant of the odd-row/even-column block.
template <class T>
T checkerboard_pfaffian(const SkewMatrix<T>& u) {
    const size_t n = u.size();
    if (n % 2 != 0) throw OddSize("checkerboard_pfaffian: odd size");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if ((i + j) % 2 == 0 && !(u.at(i, j) == T(0)))
                throw PatternViolation("checkerboard_pfaffian: nonzero equal-parity entry");
    const size_t half = n / 2;
    Matrix<T> a(half, half);
    for (size_t j = 0; j < half; ++j)
        for (size_t k = 0; k < half; ++k) a.at(j, k) = u.at(2 * j, 2 * k + 1);
    return determinant(a);
}

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
    long inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace detail

// Pfaffian via the restricted-permutation sum (each pair slot increasing),
// divided by J!; exact scalars only, intended for small sizes.
template <class T>
T pfaffian_restricted_sum(const SkewMatrix<T>& a) {
    static_assert(is_exact_scalar<T>::value);
    const int n = static_cast<int>(a.size());
    if (n % 2 != 0) throw OddSize("pfaffian_restricted_sum: odd size");
    const int J = n / 2;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    T acc(0);
    do {
        bool ok = true;
        for (int j = 0; j < J; ++j)
            if (perm[static_cast<size_t>(2 * j)] > perm[static_cast<size_t>(2 * j + 1)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        T term(1);
        for (int j = 0; j < J; ++j)
            term = term * a.at(static_cast<size_t>(perm[static_cast<size_t>(2 * j)]),
                               static_cast<size_t>(perm[static_cast<size_t>(2 * j + 1)]));
        if (detail::permutation_sign(perm) < 0) term = -term;
        acc = acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    BigInt fact = 1;
    for (int j = 2; j <= J; ++j) fact *= j;
    return acc / T(fact);
}

} // namespace mdist
