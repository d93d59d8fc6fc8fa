#include <doctest.h>

#include <cmath>

#include "qvac/errors.hpp"
#include "qvac/photon_noise.hpp"

using namespace qvac;

TEST_CASE("quadrature states obey the Heisenberg bound")
{
    CHECK_NOTHROW(QuadratureState(0.0, 0.0, 1.0, 1.0));
    CHECK_NOTHROW(QuadratureState(2.0, -1.0, 4.0, 0.25));
    CHECK_THROWS_AS(QuadratureState(0.0, 0.0, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(QuadratureState(0.0, 0.0, 4.0, 4.0, 2.0 + 1e-6), DomainError);
    CHECK_THROWS_AS(QuadratureState(0.0, 0.0, -1.0, -1.0), DomainError);
    CHECK_THROWS_AS(QuadratureState(0.0, 0.0, 1.0, 1.0, 0.0), DomainError);
    const QuadratureState sq = make_squeezed(2.0, 0.5);
    CHECK(sq.var1() == 2.0);
    CHECK(sq.var2() == 8.0);
    CHECK(sq.var1() * sq.var2() == doctest::Approx(std::pow(sq.vacuum_scale(), 4)));
    CHECK_THROWS_AS(make_squeezed(1.0, 0.0), DomainError);
}

TEST_CASE("analytic Fano factors")
{
    BeamSplitterSetup vacuum{1e6, QuadratureState::vacuum()};
    CHECK(fano_factor(vacuum) == 1.0);
    CHECK(difference_variance(vacuum) == 1e6);
    BeamSplitterSetup squeezed{1e6, make_squeezed(1.0, 0.5)};
    CHECK(fano_factor(squeezed) == 0.5);
    BeamSplitterSetup scaled{400.0, make_squeezed(3.0, 0.25)};
    CHECK(fano_factor(scaled) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(scaled.linearized());
    CHECK_FALSE(BeamSplitterSetup{10.0}.linearized());
    CHECK_THROWS_AS(fano_factor(BeamSplitterSetup{0.0}), DomainError);

    // linear in var1_b at fixed <n_a>
    double previous = 0.0;
    for (double s : {0.1, 0.2, 0.4, 0.8, 1.6}) {
        const double v = difference_variance({1e4, make_squeezed(1.0, s)});
        if (previous > 0.0) {
            CHECK(v / previous == doctest::Approx(2.0).epsilon(1e-14));
        }
        previous = v;
    }
}

TEST_CASE("Monte Carlo estimate")
{
    const std::size_t trials = 100000;
    const double bound = 3.0 * std::sqrt(2.0 / trials);
    for (double s : {1.0, 0.5, 0.2}) {
        const BeamSplitterSetup setup{1e6, make_squeezed(1.0, s)};
        const MonteCarloEstimate mc = monte_carlo_difference(setup, trials, 12345);
        CHECK(std::abs(mc.fano - s) / s < bound);
        CHECK(mc.trials == trials);
        CHECK(mc.seed == 12345);
    }

    SUBCASE("seed reproducibility")
    {
        const BeamSplitterSetup setup{1e6, make_squeezed(1.0, 0.5)};
        const MonteCarloEstimate a = monte_carlo_difference(setup, 5000, 99);
        const MonteCarloEstimate b = monte_carlo_difference(setup, 5000, 99);
        const MonteCarloEstimate c = monte_carlo_difference(setup, 5000, 100);
        CHECK(a.mean == b.mean);
        CHECK(a.variance == b.variance);
        CHECK(a.variance != c.variance);
    }
    SUBCASE("average over seeds")
    {
        const BeamSplitterSetup setup{1e6, QuadratureState::vacuum()};
        double sum = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            sum += monte_carlo_difference(setup, 20000, seed).fano;
        }
        CHECK(std::abs(sum / 20.0 - 1.0) < 1e-2);
    }
    CHECK_THROWS_AS(monte_carlo_difference(BeamSplitterSetup{1e6}, 999, 1), DomainError);
}

TEST_CASE("Gaussian sampler moments")
{
    GaussianSampler g(7);
    double m1 = 0.0, m2 = 0.0, m4 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = g.next();
        m1 += x;
        m2 += x * x;
        m4 += x * x * x * x;
    }
    CHECK(std::abs(m1 / n) < 0.01);
    CHECK(m2 / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(m4 / n == doctest::Approx(3.0).epsilon(0.03));
}
