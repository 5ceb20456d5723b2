// Star-body volumes of the unit sublevel sets, the coefficient table for
// counting bounded-measure reciprocal integer polynomials, and exhaustive
// enumeration against the predicted leading term.

#include <cstdio>

#include <mdist/mdist.hpp>

using namespace mdist;

int main() {
    std::printf("real star-body volumes (monic degree N, trailing coefficients in R^N)\n");
    for (int N = 1; N <= 6; ++N) {
        ExactVolume mu = star_volume_real_exact(RootFunctionKind::mahler(), N);
        ExactVolume rho = star_volume_real_exact(RootFunctionKind::reciprocal(), N);
        std::printf("  N=%d  mahler %-16s (%.6f)   reciprocal %-18s (%.6f)\n", N,
                    to_string(mu.value).c_str(), mu.to_double(),
                    to_string(rho.value).c_str(), rho.to_double());
    }

    std::printf("\ncomplex star-body volumes carry a power of pi\n");
    for (int N = 1; N <= 4; ++N) {
        ExactVolume v = star_volume_complex_exact(RootFunctionKind::mahler(), N);
        std::printf("  N=%d  mahler pi^%d * %-8s = %.6f\n", N, v.pi_power,
                    to_string(v.value).c_str(), v.to_double());
    }

    std::printf("\nMonte Carlo cross-check of the reciprocal N=2 real volume\n");
    ExactVolume exact = star_volume_real_exact(RootFunctionKind::reciprocal(), 2);
    MCEstimate mc = mc_star_volume(RootFunctionKind::reciprocal(), 2, 400000, 2024, 4);
    std::printf("  exact %s = %.6f,  mc %.6f +- %.6f\n", to_string(exact.value).c_str(),
                exact.to_double(), mc.value, mc.std_error);

    std::printf("\nleading coefficients c_N: #{reciprocal f in Z[x], deg N, rho-measure <= T}"
                " ~ c_N T^(floor(N/2)+1)\n  ");
    for (int N = 0; N <= 11; ++N)
        std::printf("%s%s", to_string(count_leading_coefficient(N)).c_str(),
                    N == 11 ? "\n" : ", ");

    std::printf("\nexhaustive counts vs the prediction\n");
    for (double T : {10.0, 20.0, 40.0}) {
        CountReport r = enumerate_reciprocal(3, T, 4);
        std::printf("  N=3, T=%-4.0f exact %-8llu predicted %-10.1f ratio %.4f\n", T,
                    static_cast<unsigned long long>(r.exact_count), r.predicted,
                    static_cast<double>(r.exact_count) / r.predicted);
    }

    // the value distribution behind the N=1 reciprocal count: the density of
    // monic linear g with rho(g) <= xi is 2 xi + 2/xi
    std::printf("\ndistribution slice at N=1: density of {rho(x + b) <= xi}\n");
    LaurentDistribution f1 = distribution_from_moment(F_closed_reciprocal(1));
    std::printf("  f_1(rho; xi) = %s\n", f1.to_string().c_str());
    for (double xi : {1.5, 2.0, 4.0}) {
        MCEstimate est = mc_distribution(RootFunctionKind::reciprocal(), 1, xi, 400000, 99, false, 4);
        std::printf("  xi = %.1f: exact %.6f,  mc %.6f +- %.6f\n", xi, f1.eval(xi), est.value,
                    est.std_error);
    }
    return 0;
}
