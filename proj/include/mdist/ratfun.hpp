#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "polyroots.hpp"

namespace mdist {

inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (int k = 0; k <= p.degree(); ++k) g = boost::multiprecision::gcd(g, p.coeff(k));
    return g; // 0 for the zero polynomial
}

inline IntPoly divide_exact(const IntPoly& p, const BigInt& d) {
    std::vector<BigInt> c;
    int deg = p.degree();
    c.reserve(static_cast<size_t>(deg) + 1);
    for (int k = deg; k >= 0; --k) c.push_back(p.coeff(k) / d);
    return IntPoly(std::move(c));
}

// clear denominators: returns integer polynomial q and scale m with p = q / m
inline std::pair<IntPoly, BigInt> clear_denominators(const RatPoly& p) {
    BigInt m = 1;
    for (int k = 0; k <= p.degree(); ++k)
        m = boost::multiprecision::lcm(m, denominator(p.coeff(k)));
    std::vector<BigInt> c;
    for (int k = p.degree(); k >= 0; --k) {
        BigRational v = p.coeff(k) * m;
        c.push_back(numerator(v));
    }
    return {IntPoly(std::move(c)), m};
}

// gcd of integer polynomials (primitive result, positive leading coefficient)
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    BigInt ca = content(a), cb = content(b);
    BigInt cg = boost::multiprecision::gcd(ca, cb);
    RatPoly ra = RatPoly::convert_from(a.trimmed());
    RatPoly rb = RatPoly::convert_from(b.trimmed());
    while (!rb.is_zero()) {
        auto [q, r] = divmod(ra, rb);
        (void)q;
        ra = rb;
        rb = r;
    }
    auto [g, scale] = clear_denominators(ra);
    (void)scale;
    BigInt cont = content(g);
    if (cont == 0) return IntPoly({cg});
    IntPoly prim = divide_exact(g, cont);
    if (prim.leading() < 0) prim = -prim;
    if (prim.degree() == 0) return IntPoly({cg});
    return cg * prim;
}

// Field of rational functions in one variable s over the rationals.
// Canonical form: integer coprime numerator/denominator, both content-free,
// denominator with positive leading coefficient; zero is 0/1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_({BigInt(1)}) {}
    RationalFunction(int v) : num_({BigInt(v)}), den_({BigInt(1)}) { trim_zero(); }
    RationalFunction(const BigInt& v) : num_({v}), den_({BigInt(1)}) { trim_zero(); }
    RationalFunction(const BigRational& v)
        : num_({numerator(v)}), den_({denominator(v)}) { trim_zero(); }
    RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    RationalFunction(const RatPoly& num, const RatPoly& den) {
        auto [n, mn] = clear_denominators(num);
        auto [d, md] = clear_denominators(den);
        num_ = n * IntPoly({md});
        den_ = d * IntPoly({mn});
        canonicalize();
    }

    static RationalFunction variable() { return RationalFunction(IntPoly({BigInt(1), BigInt(0)}), IntPoly({BigInt(1)})); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZeroFunction("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(long e) const {
        if (e < 0) return RationalFunction(1) / pow(-e);
        RationalFunction r(1), x = *this;
        for (long n = e; n > 0; n >>= 1) {
            if (n & 1) r = r * x;
            if (n > 1) x = x * x;
        }
        return r;
    }

    // substitute s -> -s
    RationalFunction reflected() const {
        return RationalFunction(num_.reflected(), den_.reflected());
    }

    BigRational eval(const BigRational& s) const {
        BigRational d = den_.eval(s);
        if (d == 0) throw DivisionByZeroFunction("rational function evaluated at a pole");
        return num_.eval(s) / d;
    }

    double eval_double(double s) const {
        RealPoly n = RealPoly::convert_from(num_);
        RealPoly d = RealPoly::convert_from(den_);
        return n.eval(s) / d.eval(s);
    }

    std::pair<int, int> degrees() const { return {num_.degree(), den_.degree()}; }

    std::string to_string(const std::string& var = "s") const {
        if (den_.degree() == 0 && den_.leading() == 1) return render(num_, var);
        return "(" + render(num_, var) + ")/(" + render(den_, var) + ")";
    }

  private:
    static std::string render(const IntPoly& p, const std::string& var) {
        if (p.is_zero()) return "0";
        std::string out;
        for (long e = p.degree(); e >= 0; --e) {
            BigInt c = p.coeff(e);
            if (c == 0) continue;
            if (!out.empty()) out += (c < 0) ? " - " : " + ";
            else if (c < 0) out += "-";
            BigInt a = abs(c);
            if (a != 1 || e == 0) out += a.str();
            if (e >= 1) {
                if (a != 1) out += "*";
                out += var;
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    void trim_zero() {
        num_ = num_.trimmed();
        den_ = den_.trimmed();
    }

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZeroFunction("rational function with zero denominator");
        num_ = num_.trimmed();
        den_ = den_.trimmed();
        if (num_.is_zero()) {
            den_ = IntPoly({BigInt(1)});
            return;
        }
        IntPoly g = poly_gcd(num_, den_);
        if (!(g.degree() == 0 && g.leading() == 1)) {
            auto [qn, rn] = divmod(RatPoly::convert_from(num_), RatPoly::convert_from(g));
            auto [qd, rd] = divmod(RatPoly::convert_from(den_), RatPoly::convert_from(g));
            if (!rn.is_zero() || !rd.is_zero()) throw Error("canonicalize: inexact gcd division");
            num_ = clear_denominators(qn).first;
            den_ = clear_denominators(qd).first;
        }
        BigInt cn = content(num_), cd = content(den_);
        if (cn != 0) num_ = divide_exact(num_, cn);
        den_ = divide_exact(den_, cd);
        BigRational scalar(cn, cd);
        num_ = numerator(scalar) * num_;
        den_ = denominator(scalar) * den_;
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPoly num_, den_;
};

// pi^pi_power times a rational function of s
struct ScaledRationalFunction {
    int pi_power = 0;
    RationalFunction body;

    double value(double s) const {
        double p = 1.0;
        for (int i = 0; i < pi_power; ++i) p *= 3.141592653589793238462643383279502884;
        for (int i = 0; i > pi_power; --i) p /= 3.141592653589793238462643383279502884;
        return p * body.eval_double(s);
    }

    BigRational body_value(const BigRational& s) const { return body.eval(s); }

    friend bool operator==(const ScaledRationalFunction& a, const ScaledRationalFunction& b) {
        if (a.body.is_zero() && b.body.is_zero()) return true;
        return a.pi_power == b.pi_power && a.body == b.body;
    }
};

struct PartialFractions {
    RatPoly poly_part;
    std::vector<std::pair<long, BigRational>> residues; // sorted by pole location
};

// Decomposition over simple integer poles: f = poly_part + sum c_k / (s - k).
// Non-integer factors raise NonIntegerPole, repeated integer roots RepeatedPole.
inline PartialFractions partial_fractions(const RationalFunction& f) {
    PartialFractions out;
    RatPoly num = RatPoly::convert_from(f.num());
    RatPoly den = RatPoly::convert_from(f.den());
    auto [q, r] = divmod(num, den);
    out.poly_part = q;
    if (r.is_zero()) return out;

    // locate integer roots of the denominator
    IntPoly d = f.den();
    std::vector<long> poles;
    {
        Polynomial dz = Polynomial::convert_from(d);
        RootSet rs = roots(dz, 1e-10);
        for (const auto& z : rs.roots) {
            if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z)))
                throw NonIntegerPole("partial_fractions: complex pole");
            double rounded = std::round(z.real());
            if (std::abs(z.real() - rounded) > 1e-6 * (1.0 + std::abs(z)))
                throw NonIntegerPole("partial_fractions: non-integer pole");
            long k = static_cast<long>(rounded);
            if (d.eval(BigRational(k)) != 0)
                throw NonIntegerPole("partial_fractions: pole failed exact verification");
            poles.push_back(k);
        }
    }
    std::sort(poles.begin(), poles.end());
    for (size_t i = 1; i < poles.size(); ++i)
        if (poles[i] == poles[i - 1]) throw RepeatedPole("partial_fractions: repeated pole");

    IntPoly dprime = d.derivative();
    for (long k : poles) {
        BigRational rk = r.eval(BigRational(k));
        BigRational dk = dprime.eval(BigRational(k));
        out.residues.emplace_back(k, rk / dk);
    }
    return out;
}

// rebuilds poly_part + sum c_k/(s-k); used as the exact self-check
inline RationalFunction recombine(const PartialFractions& pf) {
    RationalFunction acc(RatPoly(pf.poly_part), RatPoly({BigRational(1)}));
    RationalFunction s = RationalFunction::variable();
    for (const auto& [k, c] : pf.residues)
        acc = acc + RationalFunction(c) / (s - RationalFunction(BigInt(k)));
    return acc;
}

} // namespace mdist
