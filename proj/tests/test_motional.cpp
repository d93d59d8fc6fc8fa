#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "qvac/casimir.hpp"
#include "qvac/errors.hpp"
#include "qvac/motional.hpp"

using namespace qvac;

namespace {

double vacuum_scale(double A)
{
    return oracle::hbar * A / (60.0 * oracle::pi * oracle::pi * std::pow(oracle::c, 4));
}

// Samples of sum_k coeffs[k] t^k on t_i = i dt, evaluated exactly for dyadic inputs.
std::vector<double> polynomial_samples(const std::vector<double>& coeffs, double dt, std::size_t n)
{
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        double value = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            value = std::fma(value, t, coeffs[k]);
        }
        q[i] = value;
    }
    return q;
}

}  // namespace

TEST_CASE("Casimir inertia")
{
    const double mu = casimir_inertia_mass(1e-6, 1e-4);
    CHECK(mu == doctest::Approx(-9.6439e-31).epsilon(1e-4));
    for (double L : {1e-7, 1e-6, 3.7e-5}) {
        for (double A : {1e-8, 1e-4, 2.0}) {
            const double lhs = casimir_inertia_mass(L, A) * oracle::c * oracle::c;
            const double rhs = -2.0 * ideal_energy(L, A);
            CHECK(std::abs(lhs - rhs) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(rhs));
        }
    }
    CHECK_THROWS_AS(casimir_inertia_mass(0.0, 1.0), DomainError);
}

TEST_CASE("susceptibilities")
{
    const ThermalState room(300.0);
    const auto thermal = thermal_susceptibility(1.0, 1.0, room);
    CHECK(thermal.chi.value.real() == 0.0);
    CHECK(thermal.chi.value.imag() == doctest::Approx(2.044162e-14).epsilon(1e-6));
    const auto vacuum = vacuum_susceptibility(1e9, 1e-4);
    CHECK(vacuum.chi.value.imag() == doctest::Approx(2.2047e-30).epsilon(1e-4));
    CHECK(vacuum.chi.value.imag() == doctest::Approx(vacuum_scale(1e-4) * std::pow(1e9, 5)).epsilon(1e-14));

    SUBCASE("exact frequency scaling")
    {
        for (double omega : {1e3, 1e9, 7.3e11}) {
            const double v = vacuum_susceptibility(2.0 * omega, 1.0).chi.value.imag() /
                             vacuum_susceptibility(omega, 1.0).chi.value.imag();
            const double t = thermal_susceptibility(2.0 * omega, 1.0, room).chi.value.imag() /
                             thermal_susceptibility(omega, 1.0, room).chi.value.imag();
            CHECK(v == 32.0);
            CHECK(t == 2.0);
        }
    }
    SUBCASE("validity flags")
    {
        CHECK_FALSE(thermal.validity.large_area);
        CHECK(thermal.validity.thermal_regime);
        const auto good = thermal_susceptibility(1e12, 1.0, room);
        CHECK(good.validity.large_area);
        CHECK(good.validity.thermal_regime);
        CHECK(good.validity.ok());
        CHECK_FALSE(thermal_susceptibility(1e13, 1.0, room).validity.thermal_regime);
        CHECK(vacuum_susceptibility(1e12, 1.0).validity.ok());
        CHECK_FALSE(vacuum_susceptibility(1e12, 1.0, room).validity.thermal_regime);
    }
    CHECK(thermal_susceptibility(1e9, 1.0, ThermalState{}).chi.value == std::complex<double>{});
    CHECK_THROWS_AS(vacuum_susceptibility(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(thermal_susceptibility(1.0, -1.0, room), DomainError);
}

TEST_CASE("stencils differentiate monomials")
{
    const double dt = 0.5;
    std::vector<double> t5(11), t6(11), t1(11), t10(11);
    for (int i = 0; i < 11; ++i) {
        const double t = (i - 5) * dt;
        t5[i] = std::pow(t, 5);
        t6[i] = std::pow(t + 1.0, 6);
        t1[i] = 3.0 * t;
        t10[i] = std::pow(t, 10);
    }
    CHECK(stencil::derivative(stencil::kFifthDerivative, t5, 5, dt) == 120.0);
    CHECK(stencil::derivative(stencil::kFifthDerivative, t6, 5, dt) == doctest::Approx(720.0).epsilon(1e-15));
    CHECK(stencil::derivative(stencil::kFirstDerivative, t1, 5, dt) == 3.0);
    CHECK(stencil::derivative(stencil::kFirstDerivative, t10, 5, dt) == 0.0);
    CHECK(stencil::derivative(stencil::kFirstDerivative, t5, 5, dt) == 0.0);
    CHECK_THROWS_AS(stencil::derivative(stencil::kFifthDerivative, t5, 4, dt), DomainError);
    CHECK_THROWS_AS(stencil::derivative(stencil::kFifthDerivative, t5, 6, dt), DomainError);
}

TEST_CASE("stencil symbols match i^n Omega^n to the stated order")
{
    // Applied to exp(i w t): 2i sum_j w_j sin(j h) / (D h^n) against (i w)^n, in long double.
    for (const auto* s : {&stencil::kFifthDerivative, &stencil::kFirstDerivative}) {
        const int accuracy = s->order == 5 ? 6 : 10;
        double previous = 0.0;
        for (long double h : {0.2L, 0.1L}) {
            long double sum = 0.0L;
            for (int j = 1; j <= 5; ++j) {
                sum += static_cast<long double>(s->weights[j - 1]) * std::sin(j * h);
            }
            const long double symbol = 2.0L * sum / (s->denominator * std::pow(h, s->order));
            const long double relative = std::fabs(symbol - 1.0L);
            if (previous != 0.0) {
                CHECK(std::log2(previous / relative) == doctest::Approx(accuracy).epsilon(0.02));
            }
            previous = static_cast<double>(relative);
        }
    }
}

TEST_CASE("uniform velocity and acceleration give no vacuum force")
{
    const double dt = 0.0078125;
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> mantissa(-1024, 1024);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> coeffs(5);
        for (double& a : coeffs) {
            a = std::ldexp(mantissa(rng), -20);
        }
        const Trajectory traj(polynomial_samples(coeffs, dt, 200), dt);
        const ForceSeries f = motional_force_time_domain(traj, 1.0);
        for (std::size_t i = 0; i < traj.size(); ++i) {
            CHECK(f.force[i] == 0.0);
        }
    }
}

TEST_CASE("generic polynomials stay at the rounding floor")
{
    // Non-dyadic samples carry one rounding each; the stencil amplifies that by
    // sum|w| / (D dt^5). Check the output never exceeds the bound.
    const double dt = 0.01;
    const std::vector<double> coeffs{0.3, -1.7, 0.45, 2.2, -0.9};
    const Trajectory traj(polynomial_samples(coeffs, dt, 400), dt);
    const ForceSeries f = motional_force_time_domain(traj, 1.0);
    double qmax = 0.0;
    for (double q : traj.samples()) {
        qmax = std::max(qmax, std::abs(q));
    }
    const double weight_sum = 2.0 * (1938.0 + 1872.0 + 783.0 + 152.0 + 13.0) / 288.0;
    const double bound = vacuum_scale(1.0) * 4.0 * std::numeric_limits<double>::epsilon() * qmax * weight_sum /
                         std::pow(dt, 5);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        CHECK(std::abs(f.force[i]) <= bound);
    }
}

TEST_CASE("sinusoid: time-domain amplitude equals |chi| q0")
{
    const double omega = 1.0;
    const double dt = 0.01;
    const double q0 = 1e-9;
    const std::size_t n = 20000;
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = static_cast<double>(q0 * std::sin(static_cast<long double>(omega) * i * static_cast<long double>(dt)));
    }
    const Trajectory traj(q, dt);
    const ForceSeries f = motional_force_time_domain(traj, 1.0);
    std::vector<double> t;
    std::vector<double> y;
    for (std::size_t i = 0; i < n; ++i) {
        if (f.valid[i]) {
            t.push_back(traj.time(i));
            y.push_back(f.force[i]);
        }
    }
    const double amplitude = oracle::sinusoid_amplitude(t, y, omega);
    const double chi = std::abs(vacuum_susceptibility(omega, 1.0).chi.value);
    CHECK(amplitude == doctest::Approx(chi * q0).epsilon(1e-6));
    // sign: F = -scale q''''' = -scale q0 cos(t) for q = q0 sin(t)
    CHECK(f.force[n / 2] * std::cos(traj.time(n / 2)) < 0.0);
}

TEST_CASE("thermal friction law")
{
    const ThermalState room(300.0);
    const double theta = room.temperature_frequency();
    const double scale = oracle::hbar * std::pow(theta, 4) / (240.0 * oracle::pi * oracle::pi * std::pow(oracle::c, 4));
    const double dt = 0.25;
    const Trajectory uniform(polynomial_samples({1.0, 0.5}, dt, 30), dt);
    const ForceSeries f = thermal_friction_force(uniform, 2.0, room);
    for (std::size_t i = 0; i < uniform.size(); ++i) {
        CHECK(f.valid[i] == (i >= 5 && i + 5 < uniform.size()));
        if (f.valid[i]) {
            CHECK(f.force[i] == doctest::Approx(2.0 * scale * 0.5).epsilon(1e-14));
        } else {
            CHECK(f.force[i] == 0.0);
        }
    }
    const ForceSeries at_rest = thermal_friction_force(Trajectory(std::vector<double>(20, 3.0), dt), 2.0, room);
    for (double x : at_rest.force) {
        CHECK(x == 0.0);
    }
    const ForceSeries cold = thermal_friction_force(uniform, 2.0, ThermalState{});
    for (double x : cold.force) {
        CHECK(x == 0.0);
    }
}

TEST_CASE("trajectory construction and parsing")
{
    CHECK_THROWS_AS(Trajectory(std::vector<double>(10, 0.0), 1.0), DomainError);
    CHECK_THROWS_AS(Trajectory(std::vector<double>(11, 0.0), 0.0), DomainError);
    std::vector<double> bad(11, 0.0);
    bad[3] = NAN;
    CHECK_THROWS_AS(Trajectory(bad, 1.0), DomainError);

    std::ostringstream text;
    text << "# t q\n";
    for (int i = 0; i < 12; ++i) {
        text << 0.5 + 0.1 * i << (i % 2 ? ", " : "\t") << i * i << "\n";
        if (i == 4) {
            text << "\n   # comment\n";
        }
    }
    std::istringstream in(text.str());
    const Trajectory traj = read_trajectory(in);
    CHECK(traj.size() == 12);
    CHECK(traj.t0() == 0.5);
    CHECK(traj.dt() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(traj.samples()[11] == 121.0);

    SUBCASE("non-uniform spacing")
    {
        std::ostringstream s;
        for (int i = 0; i < 12; ++i) {
            s << (i == 7 ? 0.75 : 0.1 * i) << " 0\n";
        }
        std::istringstream is(s.str());
        CHECK_THROWS_AS(read_trajectory(is), DomainError);
    }
    SUBCASE("malformed line")
    {
        std::istringstream is("0 1\n0.1 x\n");
        CHECK_THROWS_AS(read_trajectory(is), DomainError);
    }
    SUBCASE("too short")
    {
        std::istringstream is("0 1\n0.1 2\n");
        CHECK_THROWS_AS(read_trajectory(is), DomainError);
    }
    CHECK_THROWS_AS(read_trajectory_file("/nonexistent/trajectory.txt"), DomainError);
}
