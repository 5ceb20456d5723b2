#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "moments.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace mdist {

struct CountReport {
    int N = 0;
    double T = 0.0;
    std::uint64_t exact_count = 0;
    BigRational predicted_leading;           // c_N, with count ~ c_N * T^(J+1)
    double predicted = 0.0;                  // c_N * T^(J+1)
    std::chrono::duration<double> elapsed{0.0};
};

struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// ---- predicted asymptotics --------------------------------------------------

// Leading coefficient of #{reciprocal f in Z[x], deg(f) <= N, mahler(f) <= T}
// as T grows: the volume of the (J+1)-dimensional star body of the pulled-back
// measure, J = floor(N/2), doubled for odd N because the (x+1)-multiples of
// the even-degree reciprocals contribute the same order again.
inline BigRational count_leading_coefficient(int N) {
    if (N < 0) throw Error("count_leading_coefficient needs N >= 0");
    int J = N / 2;
    BigRational lam = (J == 0) ? BigRational(2)
                               : star_volume_real_exact(RootFunctionKind::reciprocal(), J).value;
    if (N % 2) lam *= 2;
    return lam;
}

inline std::map<int, BigRational> table_coefficients() {
    std::map<int, BigRational> out;
    for (int N = 0; N <= 11; ++N) out[N] = count_leading_coefficient(N);
    return out;
}

inline double predicted_count(int N, double T) {
    return to_double(count_leading_coefficient(N)) * std::pow(T, N / 2 + 1);
}

// ---- exact enumeration -------------------------------------------------------

namespace detail {

// rho of an integer polynomial g (coefficients leading first, exact degree
// g.size()-1) through its roots; closed-form roots up to degree 2, the
// general solver beyond
inline double rho_of(const std::vector<long long>& g) {
    static const RootFunctionKind rho = RootFunctionKind::reciprocal();
    const std::size_t d = g.size() - 1;
    const double lead = static_cast<double>(g[0]);
    if (d == 0) return std::abs(lead);
    if (d == 1)
        return std::abs(lead) *
               root_value(rho, cdouble(-static_cast<double>(g[1]) / lead, 0.0));
    if (d == 2) {
        double b = static_cast<double>(g[1]), c = static_cast<double>(g[2]);
        cdouble disc = std::sqrt(cdouble(b * b - 4.0 * lead * c, 0.0));
        return std::abs(lead) * root_value(rho, (-b + disc) / (2.0 * lead)) *
               root_value(rho, (-b - disc) / (2.0 * lead));
    }
    std::vector<cdouble> c(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) c[i] = cdouble(static_cast<double>(g[i]), 0.0);
    return distance(rho, Polynomial(std::move(c)));
}

// Number of integer g of exact degree d with positive leading coefficient and
// rho(g) <= T (+ boundary tolerance); negation doubles it for the caller.
// Box: rho(g) <= T forces |g_0| <= T, and g_k = g_0 (+-) e_k(beta) with
// every root satisfying |beta| <= 2 phi(beta) and phi >= 1, so
// |g_k| <= C(d,k) 2^k T. Each candidate in the box is verified through its
// roots, so the box only has to contain every admissible g, which it does.
inline std::uint64_t count_positive_leading(int d, double T, int threads) {
    const double tol = 1e-9;
    const long long g0_max = static_cast<long long>(std::floor(T + tol));
    if (g0_max < 1) return 0;
    if (d == 0) return static_cast<std::uint64_t>(g0_max);

    std::vector<long long> bound(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 1; k <= d; ++k)
        bound[k] = static_cast<long long>(
            std::floor(to_double(BigRational(binomial(d, k))) * std::ldexp(T + tol, k)));

    const int nw = std::max(1, threads);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(nw), 0);
    auto work = [&](int w) {
        std::vector<long long> g(static_cast<std::size_t>(d) + 1);
        std::uint64_t acc = 0;
        for (long long g0 = 1 + w; g0 <= g0_max; g0 += nw) {
            g[0] = g0;
            for (int k = 1; k <= d; ++k) g[k] = -bound[k];
            while (true) { // odometer over the inner coefficients
                if (rho_of(g) <= T + tol) ++acc;
                int k = d;
                while (k >= 1 && g[k] == bound[k]) {
                    g[k] = -bound[k];
                    --k;
                }
                if (k == 0) break;
                ++g[k];
            }
        }
        partial[static_cast<std::size_t>(w)] = acc;
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nw));
        for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t v : partial) total += v;
    return total;
}

} // namespace detail

// Exact number of nonzero reciprocal f in Z[x] with deg(f) <= N and
// mahler(f) <= T. A reciprocal f of even degree 2d is x^d g(x + 1/x) for an
// integer g of degree d with mahler(f) = rho(g); an odd-degree reciprocal is
// (x+1) times an even-degree one with the same measure. The zero polynomial
// is excluded; f and -f are counted separately.
inline CountReport enumerate_reciprocal(int N, double T, int threads = 1, bool force = false) {
    if (N < 0 || !(T > 0.0)) throw Error("enumerate_reciprocal needs N >= 0 and T > 0");
    if (!force && (N > 5 || T > 100.0))
        throw BudgetExceeded(
            "enumerate_reciprocal beyond desk scale (N <= 5, T <= 100): pass force to override");
    auto t0 = std::chrono::steady_clock::now();
    const int even_max = N / 2;                       // f of degree 2d
    const int odd_max = (N >= 1) ? (N - 1) / 2 : -1;  // f of degree 2d+1
    std::uint64_t total = 0;
    for (int d = 0; d <= even_max; ++d) {
        std::uint64_t Ed = 2 * detail::count_positive_leading(d, T, threads);
        total += Ed;
        if (d <= odd_max) total += Ed;
    }
    CountReport rep;
    rep.N = N;
    rep.T = T;
    rep.exact_count = total;
    rep.predicted_leading = count_leading_coefficient(N);
    rep.predicted = to_double(rep.predicted_leading) * std::pow(T, N / 2 + 1);
    rep.elapsed = std::chrono::steady_clock::now() - t0;
    return rep;
}

// ---- Monte Carlo cross-checks ------------------------------------------------

namespace detail {

// splitmix64: 64-bit state walked by a fixed increment and hashed, so shard
// streams seeded seed+i are independent and replay identically
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double symmetric(double half_width) { return (2.0 * uniform01() - 1.0) * half_width; }
};

// hit-or-miss over a box of known volume, split into 64 reproducible shards;
// the shard layout is fixed so the estimate does not depend on thread count
template <class Hit>
MCEstimate mc_run(double box_volume, std::uint64_t samples, std::uint64_t seed, int threads,
                  Hit&& hit) {
    constexpr int shards = 64;
    std::array<std::uint64_t, shards> hits{};
    std::array<std::uint64_t, shards> quota{};
    for (int i = 0; i < shards; ++i)
        quota[static_cast<std::size_t>(i)] =
            samples / shards + (static_cast<std::uint64_t>(i) < samples % shards ? 1 : 0);
    auto run_shard = [&](int i) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(i));
        std::uint64_t h = 0;
        for (std::uint64_t j = 0; j < quota[static_cast<std::size_t>(i)]; ++j)
            if (hit(rng)) ++h;
        hits[static_cast<std::size_t>(i)] = h;
    };
    const int nw = std::clamp(threads, 1, shards);
    if (nw == 1) {
        for (int i = 0; i < shards; ++i) run_shard(i);
    } else {
        std::atomic<int> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nw));
        for (int w = 0; w < nw; ++w)
            pool.emplace_back([&] {
                for (int i; (i = cursor.fetch_add(1)) < shards;) run_shard(i);
            });
        for (auto& th : pool) th.join();
    }
    std::uint64_t total_hits = 0;
    for (std::uint64_t h : hits) total_hits += h;
    MCEstimate out;
    out.samples = samples;
    out.seed = seed;
    if (samples > 0) {
        double p = static_cast<double>(total_hits) / static_cast<double>(samples);
        out.value = box_volume * p;
        out.std_error =
            box_volume * std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(samples));
    }
    return out;
}

} // namespace detail

// Monte Carlo estimate of the monic slice measure: the volume of coefficient
// vectors b with distance(x^N + b_1 x^{N-1} + ... + b_N) <= xi, over R^N
// (complex_coeffs=false) or C^N. Sampling box: |b_k| <= C(N,k) root_bound^k
// componentwise, a superset of the slice because b_k is (+-) e_k of the roots.
inline MCEstimate mc_distribution(const RootFunctionKind& kind, int N, double xi,
                                  std::uint64_t samples, std::uint64_t seed,
                                  bool complex_coeffs = false, int threads = 1) {
    if (N < 1) throw Error("mc_distribution needs N >= 1");
    if (!(xi > 0.0)) throw Error("mc_distribution needs xi > 0");
    const double rb = root_bound(kind, xi);
    std::vector<double> half(static_cast<std::size_t>(N));
    double box = 1.0;
    for (int k = 1; k <= N; ++k) {
        half[static_cast<std::size_t>(k - 1)] =
            to_double(BigRational(binomial(N, k))) * std::pow(rb, k);
        double side = 2.0 * half[static_cast<std::size_t>(k - 1)];
        box *= complex_coeffs ? side * side : side;
    }
    if (!complex_coeffs) {
        auto hit = [&kind, &half, N, xi](detail::SplitMix64& rng) {
            std::vector<double> b(static_cast<std::size_t>(N));
            for (int k = 0; k < N; ++k)
                b[static_cast<std::size_t>(k)] = rng.symmetric(half[static_cast<std::size_t>(k)]);
            return monic_restriction(kind, b) <= xi;
        };
        return detail::mc_run(box, samples, seed, threads, hit);
    }
    auto hit = [&kind, &half, N, xi](detail::SplitMix64& rng) {
        std::vector<cdouble> c(static_cast<std::size_t>(N) + 1);
        c[0] = 1.0;
        for (int k = 0; k < N; ++k) {
            double hw = half[static_cast<std::size_t>(k)];
            c[static_cast<std::size_t>(k) + 1] = cdouble(rng.symmetric(hw), rng.symmetric(hw));
        }
        return distance(kind, Polynomial(std::move(c))) <= xi;
    };
    return detail::mc_run(box, samples, seed, threads, hit);
}

// Monte Carlo estimate of the full real star-body volume: coefficient vectors
// (a, b_1..b_N) with distance(a x^N + b_1 x^{N-1} + ... + b_N) <= 1. The box
// uses |a| <= 1 and |b_k| <= C(N,k) S^k with S = root_bound(kind, 1): each
// root obeys |gamma| <= S phi(gamma), and the spare phi factors are >= 1, so
// |b_k| = |a| |e_k| <= C(N,k) S^k distance(f).
inline MCEstimate mc_star_volume(const RootFunctionKind& kind, int N, std::uint64_t samples,
                                 std::uint64_t seed, int threads = 1) {
    if (N < 1) throw Error("mc_star_volume needs N >= 1");
    const double S = root_bound(kind, 1.0);
    std::vector<double> half(static_cast<std::size_t>(N));
    double box = 2.0; // the leading-coefficient interval [-1, 1]
    for (int k = 1; k <= N; ++k) {
        half[static_cast<std::size_t>(k - 1)] =
            to_double(BigRational(binomial(N, k))) * std::pow(S, k);
        box *= 2.0 * half[static_cast<std::size_t>(k - 1)];
    }
    auto hit = [&kind, &half, N](detail::SplitMix64& rng) {
        std::vector<cdouble> c(static_cast<std::size_t>(N) + 1);
        c[0] = rng.symmetric(1.0);
        for (int k = 0; k < N; ++k)
            c[static_cast<std::size_t>(k) + 1] =
                cdouble(rng.symmetric(half[static_cast<std::size_t>(k)]), 0.0);
        return distance(kind, Polynomial(std::move(c))) <= 1.0;
    };
    return detail::mc_run(box, samples, seed, threads, hit);
}

} // namespace mdist
