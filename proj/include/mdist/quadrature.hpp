#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "errors.hpp"

namespace mdist {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_subdivisions = 12;      // adaptive bisection depth per panel
    double truncation_slack = 10.0; // dropped tail bounded by abs_tol / slack

    QuadratureSpec tightened(double factor) const {
        QuadratureSpec s = *this;
        s.rel_tol *= factor;
        s.abs_tol *= factor;
        return s;
    }
};

namespace quad {

using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;

namespace detail {
// A panel needs the double-exponential rule when a square-root point lies
// inside it, on an endpoint, or just beyond one (a variable integration limit
// can stop arbitrarily close to the branch point).
inline bool sqrt_affected(double lo, double hi, const std::vector<double>& pts) {
    for (double p : pts) {
        double dist = (p < lo) ? lo - p : (p > hi ? p - hi : 0.0);
        if (dist <= 0.5 * (hi - lo)) return true;
    }
    return false;
}
} // namespace detail

// Fixed 10-point Gauss on [a, b], for callers who can certify analyticity and
// a panel small enough that the rule is converged to machine precision; the
// adaptive machinery's error-estimate floor would only misfire on such panels.
template <class F>
double gauss10(F&& f, double a, double b) {
    using G10 = boost::math::quadrature::gauss<double, 10>;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a), acc = 0.0;
    for (std::size_t i = 0; i < G10::abscissa().size(); ++i)
        acc += G10::weights()[i] *
               (f(mid + half * G10::abscissa()[i]) + f(mid - half * G10::abscissa()[i]));
    return acc * half;
}

// Integral over [a, b] split at the given interior breakpoints so each panel
// sees a smooth integrand. Panels touching a point listed in sqrt_points are
// integrated with a double-exponential rule, which absorbs the square-root
// derivative blowup that defeats Gauss-Kronrod error estimation there.
template <class F>
double segment(F&& f, double a, double b, const QuadratureSpec& spec,
               std::vector<double> breaks = {}, const std::vector<double>& sqrt_points = {}) {
    if (a == b) return 0.0;
    if (a > b) return -segment(f, b, a, spec, std::move(breaks), sqrt_points);
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double c : breaks)
        if (c > a && c < b) cuts.push_back(c);
    for (double c : sqrt_points)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0, err = 0.0, l1 = 0.0;
    // local instance: the boost integrator is stateful and integrands here may
    // recursively trigger further quadrature
    std::optional<boost::math::quadrature::tanh_sinh<double>> ts;
    std::vector<std::tuple<double, double, double, char>> panels;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        if (!(hi > lo)) continue;
        double pe = 0.0, pl1 = 0.0;
        double width = hi - lo;
        double pscale = std::max({1.0, std::abs(lo), std::abs(hi)});
        if (detail::sqrt_affected(lo, hi, sqrt_points)) {
            if (!ts) ts.emplace(15);
            std::size_t levels = 0;
            // two-argument form so nodes may round onto an endpoint; all
            // integrands here are bounded and defined on the closed panel
            auto fb = [&f](double x, double) { return f(x); };
            total += ts->integrate(fb, lo, hi, spec.rel_tol, &pe, &pl1, &levels);
            panels.emplace_back(lo, hi, pe, 't');
        } else if (width <= 1e-5 * pscale) {
            // panel too thin for the adaptive machinery (these arise when a
            // partial integral's endpoint lands near a wall); away from the
            // square-root points handled above the integrand is smooth, so
            // midpoint is exact to O(width^3 f'')
            double v = f(0.5 * (lo + hi)) * width;
            total += v;
            err += std::abs(v) * (1e-13 + width * width);
            l1 += std::abs(v);
            panels.emplace_back(lo, hi, 0.0, 'm');
        } else {
            total += GK15::integrate(f, lo, hi, static_cast<unsigned>(spec.max_subdivisions),
                                     spec.rel_tol, &pe, &pl1);
            panels.emplace_back(lo, hi, pe, 'g');
        }
        err += pe;
        l1 += pl1;
    }
    double allowed = std::max(spec.abs_tol, 10.0 * spec.rel_tol * std::max(std::abs(total), l1));
    if (err > std::max(allowed, 1e-300) * 10.0) {
        std::ostringstream os;
        os.precision(17);
        os << "quadrature error estimate " << err << " exceeds budget " << allowed << " on ["
           << a << ", " << b << "]; panels:";
        for (auto& [lo, hi, pe, m] : panels)
            os << " " << m << "[" << lo << ", " << hi << "]=" << pe;
        throw ToleranceNotReached(os.str());
    }
    return total;
}

// ∫_a^R f(r) dr for smooth decaying f via the inversion r = a/u, which maps a
// power-law tail onto [a/R, 1]. For non-integer decay exponents the image
// behaves like a fractional power of u near 0, so the panel is flagged for
// the double-exponential rule rather than Gauss-Kronrod.
template <class F>
double tail_inverted(F&& f, double a, double R, const QuadratureSpec& spec) {
    if (!(R > a) || a <= 0.0) return 0.0;
    if (R <= a * 1.05) {
        // near-empty tail (the certified radius barely exceeds the start, or
        // a partial integral begins a whisker from the wall); the integrand
        // is smooth and algebraic out here and the panel ratio is at most
        // 1.05, where the fixed rule is converged to machine precision
        return gauss10(f, a, R);
    }
    auto g = [&f, a](double u) {
        double r = a / u;
        return f(r) * a / (u * u);
    };
    return segment(g, a / R, 1.0, spec, {}, {0.0});
}

// Smallest R ≥ Rmin such that the closed-form tail bound
// ∫_R^∞ c·r^{d−σ} dr = c·R^{d−σ+1}/(σ−d−1) is ≤ abs_tol/slack.
inline double truncation_radius_1d(double c, double sigma, int d, double Rmin,
                                   const QuadratureSpec& spec) {
    double decay = sigma - d - 1.0;
    if (!(decay > 0.0))
        throw ConvergenceViolation("1-D integral does not converge: sigma <= degree + 1");
    double budget = spec.abs_tol / spec.truncation_slack;
    if (c <= 0.0) return Rmin;
    double R = std::pow(c / (decay * budget), 1.0 / decay);
    // a radius within a whisker of Rmin means the tail beyond Rmin is already
    // below budget; collapse it instead of integrating a sliver
    if (R <= Rmin * (1.0 + 1e-6)) return Rmin;
    return R;
}

// 2-D polar version: tail ∫_R^∞ 2π·c·r^{d−σ}·r dr = 2π·c·R^{d−σ+2}/(σ−d−2).
inline double truncation_radius_2d(double c, double sigma, int d, double Rmin,
                                   const QuadratureSpec& spec) {
    double decay = sigma - d - 2.0;
    if (!(decay > 0.0))
        throw ConvergenceViolation("2-D integral does not converge: sigma <= degree + 2");
    double budget = spec.abs_tol / spec.truncation_slack;
    if (c <= 0.0) return Rmin;
    double R = std::pow(2.0 * std::numbers::pi * c / (decay * budget), 1.0 / decay);
    if (R <= Rmin * (1.0 + 1e-6)) return Rmin;
    return R;
}

// ∫_0^∞ ∫_{θ0}^{θ1} g(r, θ) r dθ dr as iterated adaptive quadrature.
// radial_breaks seed the outer subdivision on [0, Rmin]; [Rmin, Rtrunc] is
// integrated through the inversion map; the remainder is certified small by
// the caller's choice of Rtrunc. ang_breaks(r)/ang_sqrt(r) supply inner
// breakpoints and square-root points; radial_sqrt marks radii where the
// angular integral itself has a fractional-power radial profile.
template <class G, class AngBreaks, class AngSqrt>
double polar(G&& g, double theta0, double theta1, const std::vector<double>& radial_breaks,
             double Rmin, double Rtrunc, AngBreaks&& ang_breaks, const QuadratureSpec& spec,
             const std::vector<double>& radial_sqrt, AngSqrt&& ang_sqrt) {
    QuadratureSpec inner_spec = spec.tightened(0.1);
    auto inner = [&](double r) {
        if (r == 0.0) return 0.0;
        auto h = [&g, r](double th) { return g(r, th); };
        return r * segment(h, theta0, theta1, inner_spec, ang_breaks(r), ang_sqrt(r));
    };
    double core = segment(inner, 0.0, Rmin, spec, radial_breaks, radial_sqrt);
    double tail = tail_inverted(inner, Rmin, Rtrunc, spec);
    return core + tail;
}

template <class G, class AngBreaks>
double polar(G&& g, double theta0, double theta1, const std::vector<double>& radial_breaks,
             double Rmin, double Rtrunc, AngBreaks&& ang_breaks, const QuadratureSpec& spec) {
    return polar(std::forward<G>(g), theta0, theta1, radial_breaks, Rmin, Rtrunc,
                 std::forward<AngBreaks>(ang_breaks), spec, {},
                 [](double) { return std::vector<double>{}; });
}

} // namespace quad

} // namespace mdist
