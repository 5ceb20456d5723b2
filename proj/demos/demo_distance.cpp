// Walks through the distance functions on a few classical polynomials:
// the Mahler measure, its reciprocal pullback, and the t-interpolation
// between them.

#include <cstdio>
#include <vector>

#include <mdist/mdist.hpp>

using namespace mdist;

namespace {

void show(const char* label, const Polynomial& f) {
    double mu = distance(RootFunctionKind::mahler(), f);
    double rho = distance(RootFunctionKind::reciprocal(), f);
    double half = distance(RootFunctionKind::t_reciprocal(make_rational(1, 2)), f);
    std::printf("  %-28s mu = %-12.8f mu_1/2 = %-12.8f rho = %-12.8f\n", label, mu, half, rho);
}

} // namespace

int main() {
    std::printf("distances of classical polynomials\n");
    show("x^2 - x - 1 (golden ratio)", Polynomial{1, -1, -1});
    show("x^2 - 5", Polynomial{1, 0, -5});
    show("x^6 - 1 (cyclotomic)", Polynomial{1, 0, 0, 0, 0, 0, -1});
    // Lehmer's degree-10 polynomial, the smallest known Mahler measure > 1
    show("Lehmer's polynomial", Polynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

    std::printf("\nmultiplicativity: mu(f g) = mu(f) mu(g)\n");
    RootFunctionKind mu = RootFunctionKind::mahler();
    Polynomial f{1, -1, -1}, g{2, 0, -3};
    double lhs = distance(mu, f * g), rhs = distance(mu, f) * distance(mu, g);
    std::printf("  f = x^2-x-1, g = 2x^2-3:  mu(fg) = %.12f, mu(f) mu(g) = %.12f\n", lhs, rhs);

    // rho is the pullback of mu through x + 1/x: if f(x) = x^deg(g) g(x + 1/x)
    // then mu(f) = rho(g)
    std::printf("\npullback: rho(g) = mu(x^deg(g) g(x + 1/x))\n");
    Polynomial gf{1, -3, 1}; // x^2 - 3x + 1
    Polynomial pulled = substitute_laurent(gf, 1.0);
    std::printf("  g = x^2-3x+1: rho(g) = %.12f, mu(pullback) = %.12f\n",
                distance(RootFunctionKind::reciprocal(), gf),
                distance(mu, pulled));

    // the t-reciprocal family interpolates: t = 0 recovers mu, t = 1 recovers rho
    std::printf("\nt-reciprocal sweep on g = x^2 - 3x + 1\n");
    for (int num = 0; num <= 4; ++num) {
        BigRational t = make_rational(num, 4);
        double v = distance(RootFunctionKind::t_reciprocal(t), gf);
        std::printf("  t = %d/4: mu_t(g) = %.12f\n", num, v);
    }

    // asymptotically every root function behaves like |gamma| far from the origin
    std::printf("\nasymptotics: max over |gamma| = R of |phi(gamma)/R - 1|\n");
    for (double R : {10.0, 100.0, 1000.0})
        std::printf("  R = %-7.0f mahler %.2e   reciprocal %.2e\n", R,
                    asymptotic_check(RootFunctionKind::mahler(), R),
                    asymptotic_check(RootFunctionKind::reciprocal(), R));
    return 0;
}
