#include "qvac/thermal.hpp"

#include <cmath>
#include <string>

#include "qvac/constants.hpp"
#include "qvac/errors.hpp"

namespace qvac {

namespace {

using constants::c;
using constants::hbar;
using constants::k_B;
using constants::pi;

// Beyond this reduced energy exp(x) - 1 and exp(x) agree to double precision.
constexpr double kAsymptoticReducedEnergy = 700.0;

void check_omega(double omega, const char* name)
{
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw DomainError(std::string(name) + " must be finite and positive, got " + std::to_string(omega));
    }
}

double reduced_energy(double omega, const ThermalState& state)
{
    return hbar * omega / (k_B * state.temperature());
}

}  // namespace

ThermalState::ThermalState(double temperature_K) : temperature_(temperature_K)
{
    if (!std::isfinite(temperature_K) || temperature_K < 0.0) {
        throw DomainError("temperature must be finite and >= 0 K, got " + std::to_string(temperature_K));
    }
    theta_ = 2.0 * pi * k_B * temperature_K / hbar;
}

double mean_photon_number(double omega, const ThermalState& state)
{
    check_omega(omega, "omega");
    if (state.is_zero()) {
        return 0.0;
    }
    const double x = reduced_energy(omega, state);
    if (x > kAsymptoticReducedEnergy) {
        return std::exp(-x);
    }
    return 1.0 / std::expm1(x);
}

double mode_energy_first_law(double omega, const ThermalState& state)
{
    return mean_photon_number(omega, state) * hbar * omega;
}

double mode_energy_second_law(double omega, const ThermalState& state)
{
    return (0.5 + mean_photon_number(omega, state)) * hbar * omega;
}

double thermal_weight(double omega, const ThermalState& state)
{
    return 1.0 + 2.0 * mean_photon_number(omega, state);
}

EnergyDensity energy_density(double omega_max, const ThermalState& state)
{
    if (!std::isfinite(omega_max) || omega_max < 0.0) {
        throw DomainError("omega_max must be finite and >= 0, got " + std::to_string(omega_max));
    }
    const double prefactor = hbar / (160.0 * pi * pi * c * c * c);
    const double w2 = omega_max * omega_max;
    const double theta = state.temperature_frequency();
    const double t2 = theta * theta;

    EnergyDensity density;
    density.vacuum = prefactor * 20.0 * w2 * w2;
    density.thermal = prefactor * t2 * t2;
    return density;
}

}  // namespace qvac
