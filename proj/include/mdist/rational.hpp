#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace mdist {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the usual out-of-range convention C(n,k) = 0.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(long n) {
    BigInt out = 1;
    for (long i = 2; i <= n; ++i) out *= i;
    return out;
}

inline BigInt int_pow(const BigInt& b, long e) {
    BigInt r = 1, x = b;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1) r *= x;
        if (n > 1) x *= x;
    }
    return r;
}

// Safe fraction construction: the library's two-argument constructor rejects
// negative denominators, so normalize the sign here.
inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZeroFunction("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(num, den);
}

inline BigRational rat_pow(const BigRational& b, long e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (b == 0) throw DivisionByZeroFunction("rat_pow: zero base with negative exponent");
        return make_rational(int_pow(denominator(b), -e), int_pow(numerator(b), -e));
    }
    return BigRational(int_pow(numerator(b), e), int_pow(denominator(b), e));
}

inline double to_double(const BigRational& x) { return x.convert_to<double>(); }

inline std::string to_string(const BigRational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string to_string(const BigInt& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Parses "p", "p/q" and plain decimal strings ("0.05") to an exact rational.
inline BigRational parse_rational(const std::string& s) {
    if (s.empty()) throw Error("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return BigRational(BigInt(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head += "0";
    BigInt ip(head);
    BigInt scale = int_pow(BigInt(10), static_cast<long>(tail.size()));
    BigInt fp = tail.empty() ? BigInt(0) : BigInt(tail);
    BigInt num = abs(ip) * scale + fp;
    if (neg || ip < 0) num = -num;
    return BigRational(num, scale);
}

} // namespace mdist
