#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gjfspec/jacobi.hpp"
#include "gjfspec/specfun.hpp"

#include <cmath>
#include <random>

using namespace gjfs;

TEST_CASE("recurrence start and endpoint values") {
    // P_1(0) = (alpha - beta)/2
    auto p = jacobi_eval({0.7, -0.2}, 1, 0.0);
    CHECK(p[1] == doctest::Approx((0.7 + 0.2) / 2.0).epsilon(1e-14));

    // Legendre at x = 1 is identically 1
    auto leg = jacobi_eval({0.0, 0.0}, 2, 1.0);
    CHECK(leg[0] == doctest::Approx(1.0));
    CHECK(leg[1] == doctest::Approx(1.0));
    CHECK(leg[2] == doctest::Approx(1.0));

    // P_2^{(0.5,-0.3)}(1) = (1.5)(2.5)/2
    auto q = jacobi_eval({0.5, -0.3}, 2, 1.0);
    CHECK(q[2] == doctest::Approx(1.875).epsilon(1e-13));
}

TEST_CASE("endpoint value P_n(1) = (alpha+1)_n / n!") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> par(-0.9, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = par(rng), b = par(rng);
        auto vals = jacobi_eval({a, b}, 20, 1.0);
        double fact = 1.0;
        for (int n = 1; n <= 20; ++n) {
            fact *= n;
            const double expect = pochhammer(a + 1.0, n) / fact;
            CHECK(vals[n] == doctest::Approx(expect).epsilon(1e-11));
        }
    }
}

TEST_CASE("parity P_n^{(a,b)}(x) = (-1)^n P_n^{(b,a)}(-x)") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> par(-0.9, 2.5), pts(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = par(rng), b = par(rng), x = pts(rng);
        auto lhs = jacobi_eval({a, b}, 20, x);
        auto rhs = jacobi_eval({b, a}, 20, -x);
        double scale = 1.0;
        for (int n = 0; n <= 20; ++n)
            scale = std::max(scale, std::abs(lhs[n]));
        for (int n = 0; n <= 20; ++n) {
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::abs(lhs[n] - sign * rhs[n]) < 1e-11 * scale);
        }
    }
}

TEST_CASE("admissibility rejection") {
    // n + alpha + beta = -1 at n = 1 for alpha + beta = -2
    CHECK_THROWS_AS(check_jacobi_admissible({-1.0, -1.0}, 3), InadmissibleParam);
    // removable recurrence denominator 2n + alpha + beta = 0
    CHECK_THROWS_AS(check_jacobi_admissible({-0.5, -1.5}, 3), InadmissibleParam);
    CHECK_NOTHROW(check_jacobi_admissible({-0.5, -0.3}, 20));
}

TEST_CASE("negative-integer parameter factorization") {
    // d_1^{1,0} = 1
    CHECK(jacobi_negint_factorize(1, 0.0, 1) == doctest::Approx(1.0));
    // d_3^{2,0.5} = 1! (2.5)(3.5) / 3!
    CHECK(jacobi_negint_factorize(2, 0.5, 3) == doctest::Approx(35.0 / 24.0).epsilon(1e-13));
    // d_n^{l,-m} d_{n-l}^{m,l} = 1
    for (int l = 1; l <= 2; ++l)
        for (int m = 1; m <= 2; ++m)
            for (int n = l + m; n <= 8; ++n)
                CHECK(jacobi_negint_factorize(l, -double(m), n)
                          * jacobi_negint_factorize(m, double(l), n - l)
                      == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("factorized evaluation matches direct recurrence") {
    // P_n^{(-l,beta)} = d ((x-1)/2)^l P_{n-l}^{(l,beta)} on a grid
    const int l = 2;
    const double beta = 0.4;
    for (double x = -0.9; x <= 0.95; x += 0.37) {
        auto direct = jacobi_eval({-double(l), beta}, 6, x);
        auto shifted = jacobi_eval({double(l), beta}, 6 - l, x);
        for (int n = l; n <= 6; ++n) {
            const double d = jacobi_negint_factorize(l, beta, n);
            const double expect = d * std::pow((x - 1.0) / 2.0, l) * shifted[n - l];
            CHECK(direct[n] == doctest::Approx(expect).epsilon(1e-11));
        }
    }
    // beta-side mirror: P_n^{(alpha,-m)} = d_n^{m,alpha} ((x+1)/2)^m P_{n-m}^{(alpha,m)}
    const int m = 1;
    const double alpha = 0.8;
    for (double x = -0.9; x <= 0.95; x += 0.37) {
        auto direct = jacobi_eval({alpha, -double(m)}, 5, x);
        auto shifted = jacobi_eval({alpha, double(m)}, 5 - m, x);
        for (int n = m; n <= 5; ++n) {
            const double d = jacobi_negint_factorize(m, alpha, n);
            const double expect = d * std::pow((x + 1.0) / 2.0, m) * shifted[n - m];
            CHECK(direct[n] == doctest::Approx(expect).epsilon(1e-11));
        }
    }
}

TEST_CASE("norm constants") {
    CHECK(jacobi_norm_gamma({0.0, 0.0}, 0) == doctest::Approx(2.0).epsilon(1e-14));
    for (int n = 0; n <= 6; ++n)
        CHECK(jacobi_norm_gamma({0.0, 1.0}, n) == doctest::Approx(2.0 / (n + 1.0)).epsilon(1e-13));
    const double pi = std::acos(-1.0);
    CHECK(jacobi_norm_gamma({0.5, 0.5}, 0) == doctest::Approx(pi / 2.0).epsilon(1e-13));
    CHECK_THROWS_AS(jacobi_norm_gamma({-1.2, 0.0}, 1), InadmissibleParam);
}

TEST_CASE("derivative coefficient kappa") {
    CHECK(jacobi_deriv_coeff({0.3, 0.8}, 4, 0) == doctest::Approx(1.0));
    CHECK(jacobi_deriv_coeff({0.0, 0.0}, 1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    // finite-difference check of D P_n = kappa P_{n-1}^{(a+1,b+1)}
    const JacobiParam p{0.6, -0.2};
    const double x = 0.23, h = 1e-6;
    auto up = jacobi_eval(p, 5, x + h);
    auto dn = jacobi_eval(p, 5, x - h);
    auto img = jacobi_eval({1.6, 0.8}, 4, x);
    for (int n = 1; n <= 5; ++n) {
        const double fd = (up[n] - dn[n]) / (2.0 * h);
        CHECK(fd == doctest::Approx(jacobi_deriv_coeff(p, n, 1) * img[n - 1]).epsilon(1e-8));
    }
}

TEST_CASE("gauss rule basics") {
    QuadRule r = gauss_jacobi_rule({0.0, 0.0}, 2);
    CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(gauss_jacobi_rule({-1.3, 0.0}, 4), InadmissibleParam);
}

static double beta_fn(double a, double b) {
    return std::exp(log_gamma(a).log_abs + log_gamma(b).log_abs - log_gamma(a + b).log_abs);
}

TEST_CASE("gauss rule weight sum and exactness") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> par(-0.9, 2.0);
    for (int trial = 0; trial < 8; ++trial) {
        const double a = par(rng), b = par(rng);
        QuadRule r = gauss_jacobi_rule({a, b}, 12);
        double wsum = 0.0;
        for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i)
            CHECK(r.nodes[i] < r.nodes[i + 1]);
        for (double w : r.weights) {
            CHECK(w > 0.0);
            wsum += w;
        }
        const double expect = std::exp2(a + b + 1.0) * beta_fn(a + 1.0, b + 1.0);
        CHECK(wsum == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("gauss rule discrete orthogonality") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> par(-0.9, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        const JacobiParam p{par(rng), par(rng)};
        QuadRule r = gauss_jacobi_rule(p, 16);
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m) {
                const double val = r.integrate([&](double x) {
                    auto v = jacobi_eval(p, 12, x);
                    return v[n] * v[m];
                });
                const double expect = (n == m) ? jacobi_norm_gamma(p, n) : 0.0;
                CHECK(std::abs(val - expect) < 1e-10 * std::max(1.0, jacobi_norm_gamma(p, n)));
            }
    }
}

TEST_CASE("gauss rule high-degree monomial exactness") {
    // x^14 against the (0.5,-0.5) weight: exact with an 8-point rule; compare
    // a 16-point rule as the refinement oracle
    QuadRule r8 = gauss_jacobi_rule({0.5, -0.5}, 8);
    QuadRule r16 = gauss_jacobi_rule({0.5, -0.5}, 16);
    auto f = [](double x) { return std::pow(x, 14); };
    CHECK(r8.integrate(f) == doctest::Approx(r16.integrate(f)).epsilon(1e-12));
}
