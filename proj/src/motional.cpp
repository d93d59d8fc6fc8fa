#include "qvac/motional.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "qvac/casimir.hpp"
#include "qvac/constants.hpp"
#include "qvac/errors.hpp"

namespace qvac {

using constants::c;
using constants::hbar;
using constants::pi;

namespace {

void require_positive(double x, const char* name)
{
    if (!std::isfinite(x) || x <= 0.0) {
        std::ostringstream os;
        os << name << " must be finite and positive, got " << x;
        throw DomainError(os.str());
    }
}

double c4()
{
    const double c2 = c * c;
    return c2 * c2;
}

bool large_area(double omega, double A)
{
    return A > 100.0 * c * c / (omega * omega);
}

// Error-free sum (Knuth); products are split with fma at the call site.
void two_sum(double a, double b, double& s, double& e)
{
    s = a + b;
    const double z = s - a;
    e = (a - (s - z)) + (b - z);
}

}  // namespace

double casimir_inertia_mass(double L, double A)
{
    return (ideal_energy(L, A) - ideal_force(L, A) * L) / (c * c);
}

SusceptibilityResult thermal_susceptibility(double omega, double A, const ThermalState& state)
{
    require_positive(omega, "Omega");
    require_positive(A, "area");
    const double theta = state.temperature_frequency();
    const double t2 = theta * theta;

    SusceptibilityResult result;
    result.chi.omega = omega;
    result.chi.value = {0.0, hbar * A * t2 * t2 * omega / (240.0 * pi * pi * c4())};
    result.validity.large_area = large_area(omega, A);
    result.validity.thermal_regime = theta > 100.0 * omega;
    return result;
}

SusceptibilityResult vacuum_susceptibility(double omega, double A, const ThermalState& state)
{
    require_positive(omega, "Omega");
    require_positive(A, "area");
    const double w2 = omega * omega;

    SusceptibilityResult result;
    result.chi.omega = omega;
    result.chi.value = {0.0, hbar * A * w2 * w2 * omega / (60.0 * pi * pi * c4())};
    result.validity.large_area = large_area(omega, A);
    result.validity.thermal_regime = state.is_zero();
    return result;
}

Trajectory::Trajectory(std::vector<double> samples, double dt, double t0)
    : samples_(std::move(samples)), dt_(dt), t0_(t0)
{
    if (samples_.size() < kMinSamples) {
        throw DomainError("trajectory needs at least 11 samples, got " + std::to_string(samples_.size()));
    }
    require_positive(dt, "time step");
    if (!std::isfinite(t0)) {
        throw DomainError("trajectory start time must be finite");
    }
    for (double q : samples_) {
        if (!std::isfinite(q)) {
            throw DomainError("trajectory contains a non-finite sample");
        }
    }
}

Trajectory read_trajectory(std::istream& in)
{
    std::vector<double> times;
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        for (char& ch : line) {
            if (ch == ',') {
                ch = ' ';
            }
        }
        std::istringstream fields(line);
        double t = 0.0;
        double q = 0.0;
        if (!(fields >> t)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            throw DomainError("trajectory line " + std::to_string(line_no) + ": expected two numbers");
        }
        std::string rest;
        if (!(fields >> q) || (fields >> rest)) {
            throw DomainError("trajectory line " + std::to_string(line_no) + ": expected two numbers");
        }
        times.push_back(t);
        values.push_back(q);
    }
    if (times.size() < Trajectory::kMinSamples) {
        throw DomainError("trajectory needs at least 11 samples, got " + std::to_string(times.size()));
    }

    const std::size_t n = times.size();
    const double dt = (times.back() - times.front()) / static_cast<double>(n - 1);
    require_positive(dt, "time step");
    double t_max = 0.0;
    for (double t : times) {
        t_max = std::max(t_max, std::abs(t));
    }
    const double slack = 1e-6 * dt + 1e-9 * t_max;
    for (std::size_t i = 0; i < n; ++i) {
        const double expected = times.front() + static_cast<double>(i) * dt;
        if (std::abs(times[i] - expected) > slack) {
            std::ostringstream os;
            os << "trajectory is not uniformly sampled at line with t = " << times[i] << " (expected " << expected
               << ")";
            throw DomainError(os.str());
        }
    }
    return Trajectory(std::move(values), dt, times.front());
}

Trajectory read_trajectory_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open trajectory file '" + path + "'");
    }
    return read_trajectory(in);
}

namespace stencil {

double derivative(const Stencil& s, std::span<const double> q, std::size_t i, double dt)
{
    if (i < kHalfWidth || i + kHalfWidth >= q.size()) {
        throw DomainError("stencil centre too close to the trajectory boundary");
    }
    double sum = 0.0;
    double compensation = 0.0;
    auto accumulate = [&](double w, double x) {
        const double product = w * x;
        const double product_error = std::fma(w, x, -product);
        double sum_error = 0.0;
        two_sum(sum, product, sum, sum_error);
        compensation += sum_error + product_error;
    };
    for (std::size_t j = 1; j <= kHalfWidth; ++j) {
        const double w = s.weights[j - 1];
        accumulate(w, q[i + j]);
        accumulate(-w, q[i - j]);
    }
    return (sum + compensation) / (s.denominator * std::pow(dt, s.order));
}

}  // namespace stencil

namespace {

ForceSeries apply(const stencil::Stencil& s, const Trajectory& trajectory, double scale)
{
    const auto q = trajectory.samples();
    ForceSeries out;
    out.force.assign(q.size(), 0.0);
    out.valid.assign(q.size(), false);
    for (std::size_t i = stencil::kHalfWidth; i + stencil::kHalfWidth < q.size(); ++i) {
        out.force[i] = scale * stencil::derivative(s, q, i, trajectory.dt());
        out.valid[i] = true;
    }
    return out;
}

}  // namespace

ForceSeries motional_force_time_domain(const Trajectory& trajectory, double A)
{
    require_positive(A, "area");
    return apply(stencil::kFifthDerivative, trajectory, -hbar * A / (60.0 * pi * pi * c4()));
}

ForceSeries thermal_friction_force(const Trajectory& trajectory, double A, const ThermalState& state)
{
    require_positive(A, "area");
    const double theta = state.temperature_frequency();
    const double t2 = theta * theta;
    return apply(stencil::kFirstDerivative, trajectory, hbar * A * t2 * t2 / (240.0 * pi * pi * c4()));
}

}  // namespace qvac
