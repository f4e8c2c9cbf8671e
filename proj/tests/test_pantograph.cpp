#include <doctest.h>

#include <cmath>

#include "edm/pantograph.hpp"
#include "edm/spectral1d.hpp"
#include "test_util.hpp"

using namespace edm;
using namespace edm::test;

namespace {

DensePolynomial1D t_chain(double mu, double rho, int n) {
    DensePolynomial1D t{1.0};
    for (int i = 0; i < n; ++i) t = advance_T(t, mu, rho);
    return t;
}

}  // namespace

TEST_CASE("generating-function recursion closed forms") {
    TestRng rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const double mu = rng.uniform(0.2, 2.0);
        const double rho = rng.uniform(0.05, 0.9);
        const double t = rng.uniform(-1.5, 1.5);
        const auto t1 = t_chain(mu, rho, 1);
        const auto t2 = t_chain(mu, rho, 2);
        const auto t3 = t_chain(mu, rho, 3);
        CHECK(t1.size() == 2);
        CHECK(poly_eval(t1, t) == doctest::Approx(mu + t).epsilon(1e-12));
        CHECK(poly_eval(t2, t) ==
              doctest::Approx((mu + t) * (mu + rho * t) + rho).epsilon(1e-12));
        const double expect3 =
            (mu + t) * ((mu + rho * t) * (mu + rho * rho * t) + rho) +
            rho * (mu + rho * rho * t + rho * (mu + rho * t));
        CHECK(poly_eval(t3, t) == doctest::Approx(expect3).epsilon(1e-11));
    }
}

TEST_CASE("Hermite coefficients convert to generating coefficients") {
    CHECK(hermite_to_generating({1.0}) == DensePolynomial1D{1.0});
    const double mu = 0.7;
    CHECK(hermite_to_generating({mu, 1.0}) == DensePolynomial1D{mu, 1.0});
    const double rho = 0.4;
    auto c = hermite_to_generating({mu * mu + rho, mu * (1 + rho), std::sqrt(2.0) * rho});
    REQUIRE(c.size() == 3);
    CHECK(c[2] == doctest::Approx(rho).epsilon(1e-12));
}

TEST_CASE("the two recursions build the same polynomial") {
    const double mu = 1.2, rho = 0.55;
    std::vector<double> q{1.0};
    DensePolynomial1D t{1.0};
    for (int n = 1; n <= 30; ++n) {
        q = advance_q(q, mu, rho);
        t = advance_T(t, mu, rho);
        const auto via_q = hermite_to_generating(q);
        REQUIRE(via_q.size() == t.size());
        double scale = 0.0;
        for (double c : t) scale = std::max(scale, std::abs(c));
        for (std::size_t k = 0; k < t.size(); ++k)
            CHECK(std::abs(via_q[k] - t[k]) <= 1e-10 * scale);
    }
}

TEST_CASE("values at zero reproduce the moment sequence") {
    const double mu = 0.8, rho = 0.3;
    auto chain = value_at_zero_chain(mu, rho, 12);
    REQUIRE(chain.size() == 13);
    CHECK(chain[1] == doctest::Approx(mu));
    CHECK(chain[2] == doctest::Approx(mu * mu + rho).epsilon(1e-12));
    for (int n = 0; n <= 12; ++n)
        CHECK(chain[n] ==
              doctest::Approx(product_moment_1d(mu, rho, n)).epsilon(1e-11));
}

TEST_CASE("monomial leading coefficient follows the weight power") {
    const double mu = 1.1, rho = 0.6;
    std::vector<double> q{1.0};
    for (int n = 1; n <= 15; ++n) {
        q = advance_q(q, mu, rho);
        const auto c = hermite_to_generating(q);
        CHECK(c.back() ==
              doctest::Approx(std::pow(rho, n * (n - 1) / 2.0)).epsilon(1e-10));
    }
}

TEST_CASE("functional-equation residual certifies the eigenpair") {
    SUBCASE("converged eigenvector at weak coupling has a small residual") {
        auto e = leading_eigenvalue(1.0, 0.01, 64);
        REQUIRE(e.converged);
        auto t = hermite_to_generating(e.eigvec);
        std::vector<double> pts;
        for (int i = 0; i <= 50; ++i) pts.push_back(-1.0 + 0.04 * i);
        CHECK(pantograph_residual(t, e.lambda, 1.0, 0.01, pts) < 1e-3);
    }
    SUBCASE("a non-eigen polynomial fails loudly") {
        DensePolynomial1D junk{1.0, -0.3, 0.7, 0.1};
        CHECK(pantograph_residual(junk, 1.5, 1.0, 0.5, default_residual_points()) >
              0.1);
    }
    SUBCASE("residual shrinks as the truncation doubles") {
        std::vector<double> pts;
        for (int i = 0; i <= 50; ++i) pts.push_back(-1.0 + 0.04 * i);
        // strong coupling so the truncation tail is actually visible
        double r_coarse, r_fine;
        {
            auto e = leading_eigenvalue(1.0, 0.9, 8);
            r_coarse = pantograph_residual(hermite_to_generating(e.eigvec), e.lambda,
                                           1.0, 0.9, pts);
        }
        {
            auto e = leading_eigenvalue(1.0, 0.9, 16);
            r_fine = pantograph_residual(hermite_to_generating(e.eigvec), e.lambda,
                                         1.0, 0.9, pts);
        }
        CHECK(r_fine < r_coarse);
    }
    SUBCASE("default grid spans [-2, 2] with 101 points") {
        auto pts = default_residual_points();
        REQUIRE(pts.size() == 101);
        CHECK(pts.front() == doctest::Approx(-2.0));
        CHECK(pts.back() == doctest::Approx(2.0));
    }
}
