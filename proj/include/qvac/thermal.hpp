#pragma once

namespace qvac {

// Temperature together with its frequency equivalent theta = 2 pi k_B T / hbar.
class ThermalState {
public:
    ThermalState() = default;
    // Throws DomainError for negative or non-finite temperatures.
    explicit ThermalState(double temperature_K);

    double temperature() const { return temperature_; }
    double temperature_frequency() const { return theta_; }
    bool is_zero() const { return temperature_ == 0.0; }

private:
    double temperature_ = 0.0;
    double theta_ = 0.0;
};

// Bose-Einstein occupation 1/(exp(hbar w / k_B T) - 1). Exactly 0 at T = 0.
double mean_photon_number(double omega, const ThermalState& state);

// n hbar w: thermal energy per mode without the zero-point term.
double mode_energy_first_law(double omega, const ThermalState& state);

// (1/2 + n) hbar w: thermal energy per mode including the zero-point term.
double mode_energy_second_law(double omega, const ThermalState& state);

// coth(hbar w / 2 k_B T); 1 at T = 0. hbar w times this factor is twice the second-law energy.
double thermal_weight(double omega, const ThermalState& state);

struct EnergyDensity {
    double vacuum = 0.0;   // hbar w_max^4 / (8 pi^2 c^3)
    double thermal = 0.0;  // hbar theta^4 / (160 pi^2 c^3)
    double total() const { return vacuum + thermal; }
};

/// Energy density of field modes up to the cutoff frequency omega_max, split into the
/// cutoff-dependent vacuum part and the temperature part.
///
/// The thermal part is taken as hbar theta^4 / (160 pi^2 c^3) = pi^2 (k_B T)^4 / (10 hbar^3 c^3),
/// which is 3/2 of the Stefan-Boltzmann radiation density pi^2 (k_B T)^4 / (15 hbar^3 c^3)
/// obtained by integrating hbar w n(w) w^2 / (pi^2 c^3). The coefficient is kept as is; the
/// unit tests quantify the ratio against a direct numerical integral.
EnergyDensity energy_density(double omega_max, const ThermalState& state);

}  // namespace qvac
