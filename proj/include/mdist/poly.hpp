#pragma once

#include <complex>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace mdist {

namespace detail {

template <class To, class From>
To value_cast(const From& v) {
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else if constexpr (std::is_same_v<From, BigInt> || std::is_same_v<From, BigRational>) {
        if constexpr (std::is_same_v<To, double>)
            return v.template convert_to<double>();
        else if constexpr (std::is_same_v<To, std::complex<double>>)
            return std::complex<double>(v.template convert_to<double>(), 0.0);
        else
            return To(v);
    } else {
        return To(v);
    }
}

} // namespace detail

// Dense univariate polynomial, coefficients stored highest degree first.
// The zero polynomial is representable (empty vector or all-zero coefficients);
// the effective degree skips leading zero entries.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) {}
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) {}

    template <class U>
    static Poly convert_from(const Poly<U>& other) {
        std::vector<T> c;
        c.reserve(other.coefficients().size());
        for (const auto& v : other.coefficients()) c.push_back(detail::value_cast<T, U>(v));
        return Poly(std::move(c));
    }

    // coefficient of x^k, leading first in storage
    static Poly monomial(int k, const T& lead = T(1)) {
        std::vector<T> c(static_cast<size_t>(k) + 1, T(0));
        c[0] = lead;
        return Poly(std::move(c));
    }

    const std::vector<T>& coefficients() const { return c_; }

    int degree() const {
        size_t lead = leading_index();
        if (lead == c_.size()) return -1;
        return static_cast<int>(c_.size() - 1 - lead);
    }

    bool is_zero() const { return degree() < 0; }

    const T& leading() const {
        static const T zero(0);
        size_t lead = leading_index();
        return lead == c_.size() ? zero : c_[lead];
    }

    // coefficient of x^k (0 when k exceeds the stored range)
    T coeff(int k) const {
        if (k < 0) return T(0);
        size_t idx = c_.size();
        if (static_cast<size_t>(k) >= idx) return T(0);
        return c_[idx - 1 - static_cast<size_t>(k)];
    }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        size_t lead = leading_index();
        for (size_t i = lead; i < c_.size(); ++i) acc = acc * x + detail::value_cast<X, T>(c_[i]);
        return acc;
    }

    Poly trimmed() const {
        size_t lead = leading_index();
        return Poly(std::vector<T>(c_.begin() + static_cast<long>(lead), c_.end()));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        int da = a.degree(), db = b.degree();
        int d = std::max(da, db);
        if (d < 0) return Poly();
        std::vector<T> c(static_cast<size_t>(d) + 1, T(0));
        for (int k = 0; k <= d; ++k) c[static_cast<size_t>(d - k)] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(c)).trimmed();
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        int da = a.degree(), db = b.degree();
        if (da < 0 || db < 0) return Poly();
        std::vector<T> c(static_cast<size_t>(da + db) + 1, T(0));
        for (int i = 0; i <= da; ++i) {
            if (a.coeff(i) == T(0)) continue;
            for (int j = 0; j <= db; ++j)
                c[static_cast<size_t>(da + db - i - j)] += a.coeff(i) * b.coeff(j);
        }
        return Poly(std::move(c)).trimmed();
    }

    friend Poly operator*(const T& s, const Poly& p) {
        Poly r = p;
        for (auto& v : r.c_) v = s * v;
        return r.trimmed();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        int d = std::max(a.degree(), b.degree());
        for (int k = 0; k <= d; ++k)
            if (!(a.coeff(k) == b.coeff(k))) return false;
        return true;
    }

    Poly derivative() const {
        int d = degree();
        if (d <= 0) return Poly();
        std::vector<T> c(static_cast<size_t>(d), T(0));
        for (int k = 1; k <= d; ++k) c[static_cast<size_t>(d - k)] = coeff(k) * T(k);
        return Poly(std::move(c));
    }

    // long division over a field; returns {quotient, remainder}
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        int db = b.degree();
        if (db < 0) throw DivisionByZeroFunction("polynomial division by zero");
        Poly rem = a.trimmed();
        int dq = a.degree() - db;
        if (dq < 0) return {Poly(), rem};
        std::vector<T> q(static_cast<size_t>(dq) + 1, T(0));
        while (rem.degree() >= db) {
            int k = rem.degree() - db;
            T factor = rem.leading() / b.leading();
            q[static_cast<size_t>(dq - k)] = factor;
            rem = rem - factor * (b * Poly::monomial(k));
        }
        return {Poly(std::move(q)).trimmed(), rem};
    }

    // substitute x -> -x
    Poly reflected() const {
        Poly r = trimmed();
        int d = r.degree();
        for (size_t i = 0; i < r.c_.size(); ++i)
            if ((d - static_cast<int>(i)) % 2 != 0) r.c_[i] = -r.c_[i];
        return r;
    }

  private:
    size_t leading_index() const {
        size_t i = 0;
        while (i < c_.size() && c_[i] == T(0)) ++i;
        return i;
    }

    std::vector<T> c_;
};

using Polynomial = Poly<std::complex<double>>;
using RealPoly = Poly<double>;
using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRational>;

template <class T>
Polynomial to_complex_poly(const Poly<T>& p) {
    return Polynomial::convert_from(p);
}

} // namespace mdist
