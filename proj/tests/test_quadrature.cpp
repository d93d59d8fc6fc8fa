#include <doctest.h>

#include <cmath>

#include "qvac/constants.hpp"
#include "qvac/quadrature.hpp"

using namespace qvac::quadrature;

TEST_CASE("Gauss-Legendre panels integrate polynomials exactly")
{
    const Estimate est = integrate([](double x) { return std::pow(x, 31) - 3.0 * x * x + 1.0; }, -1.0, 2.0);
    const double exact = (std::pow(2.0, 32) - 1.0) / 32.0 - (8.0 + 1.0) + 3.0;
    CHECK(est.converged);
    CHECK(est.value == doctest::Approx(exact).epsilon(1e-14));
    CHECK(est.panels == 4);
}

TEST_CASE("adaptive refinement on peaked and singular integrands")
{
    SUBCASE("narrow Lorentzian")
    {
        const double w = 1e-4;
        const Estimate est = integrate([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0);
        CHECK(est.converged);
        CHECK(est.value == doctest::Approx(2.0 * std::atan(1.0 / w)).epsilon(1e-10));
        CHECK(est.error <= 1e-10 * est.value);
    }
    SUBCASE("integrable log singularity")
    {
        const Estimate est = integrate([](double x) { return -std::log(x); }, 0.0, 1.0);
        CHECK(est.converged);
        CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("semi-infinite map")
{
    // int_0^inf u^3 / (e^u - 1) = pi^4 / 15
    const double pi = qvac::constants::pi;
    const Estimate est = integrate_to_infinity([](double u) { return u * u * u / std::expm1(u); }, 0.0);
    CHECK(est.converged);
    CHECK(est.value == doctest::Approx(std::pow(pi, 4) / 15.0).epsilon(1e-11));

    const Estimate shifted = integrate_to_infinity([](double u) { return std::exp(-u); }, 30.0);
    CHECK(shifted.value == doctest::Approx(std::exp(-30.0)).epsilon(1e-11));
}

TEST_CASE("refinement limit reports non-convergence")
{
    Tolerance tol;
    tol.max_panels = 6;
    const Estimate est = integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, tol);
    CHECK_FALSE(est.converged);
    CHECK(est.panels <= 6);
}

TEST_CASE("identical calls give bit-identical results")
{
    auto f = [](double x) { return std::exp(-x) * std::cos(40.0 * x); };
    const Estimate a = integrate(f, 0.0, 5.0);
    const Estimate b = integrate(f, 0.0, 5.0);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
}

TEST_CASE("compensated sum")
{
    CompensatedSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    CHECK(s.value() == 2.0);
}
