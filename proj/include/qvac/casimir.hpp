#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qvac/mirror.hpp"
#include "qvac/thermal.hpp"

namespace qvac {

// Sign conventions: forces are positive when attractive and energies are reported as positive
// magnitudes, as in hbar c pi^2 A / (720 L^3). The physical binding energy is the negative of
// the reported energy, so that force = -d(energy)/dL with both quantities as reported.

enum class Warning {
    PlaneLimit,         // A <= 100 L^2: plates not large compared with their separation
    ProximityLimit,     // R <= 100 L: sphere not large compared with the gap
    FewMatsubaraTerms,  // fewer than 10 Matsubara terms carry the thermal result
};

std::string to_string(Warning w);

struct CavityConfig {
    double length = 0.0;  // m
    double area = 0.0;    // m^2
    ThermalState thermal;
    CavityReflection mirrors;

    // Throws DomainError on non-positive or non-finite geometry.
    void validate() const;
    // Ratios within rounding of the threshold count as violations.
    bool plane_limit_ok() const { return area > 100.0 * length * length * (1.0 + 1e-12); }
};

struct ForceResult {
    double force = 0.0;   // N, positive = attraction
    double energy = 0.0;  // J, positive magnitude
    double eta_E = 1.0;   // energy / ideal_energy
    double eta_F = 1.0;   // force / ideal_force
    // F(T) / F(T = 0) for the same mirrors; set by thermal_force.
    std::optional<double> eta_thermal;
    double numerical_error = 0.0;  // relative, from the quadrature / summation
    std::size_t matsubara_terms = 0;
    bool plane_limit_ok = true;
    std::vector<Warning> warnings;
};

struct EngineOptions {
    double relative_tolerance = 1e-10;
    std::size_t max_panels = 4000;
    std::size_t max_matsubara_terms = 20000;
    // Worker threads for Matsubara blocks and sweep points; 0 selects hardware concurrency.
    // Results do not depend on this value.
    unsigned threads = 1;
    // Route perfect/perfect cavities at T = 0 through the closed forms.
    bool perfect_closed_form = true;
};

// hbar c pi^2 A / (240 L^4)
double ideal_force(double L, double A);
// hbar c pi^2 A / (720 L^3)
double ideal_energy(double L, double A);

// Energy and force per unit area of a plane-plane cavity from the imaginary-axis
// scattering formula; T = 0 uses the frequency integral, T > 0 the Matsubara sum.
struct PlaneResponse {
    double energy_per_area = 0.0;
    double force_per_area = 0.0;
    double relative_error = 0.0;
    std::size_t matsubara_terms = 0;
    std::size_t contributing_terms = 0;
};

struct ResponseRequest {
    bool energy = true;
    bool force = true;
};

PlaneResponse plane_response(double L, const ThermalState& thermal, const CavityReflection& mirrors,
                             const EngineOptions& options = {}, ResponseRequest request = {});

// T = 0 results; throw DomainError when config.thermal is not zero.
ForceResult real_mirror_energy(const CavityConfig& config, const EngineOptions& options = {});
ForceResult real_mirror_force(const CavityConfig& config, const EngineOptions& options = {});

// Finite-temperature result; eta_thermal is filled with F(T) / F(0).
ForceResult thermal_force(const CavityConfig& config, const EngineOptions& options = {});

struct EtaRow {
    double length = 0.0;
    double eta_plasma = 1.0;   // material at T = 0
    double eta_thermal = 1.0;  // perfect mirrors at T
    double eta_full = 1.0;     // material at T
    double numerical_error = 0.0;
    double eta_product() const { return eta_plasma * eta_thermal; }
    double product_deviation() const { return std::abs(eta_full - eta_product()) / eta_full; }
};

// Energy correction factors on log-spaced lengths in [L_min, L_max].
std::vector<EtaRow> eta_sweep(double L_min, double L_max, std::size_t points, const MirrorModel& material,
                              const ThermalState& thermal, const EngineOptions& options = {});

struct SpherePlaneConfig {
    double radius = 0.0;  // m
    double length = 0.0;  // m, closest approach
    ThermalState thermal;
    CavityReflection mirrors;

    bool proximity_ok() const { return radius > 100.0 * length * (1.0 + 1e-12); }
};

struct SpherePlaneResult {
    double force = 0.0;                  // N, 2 pi R E_pp / A
    double eta = 1.0;                    // plane-plane eta_E at the same distance
    double plane_energy_per_area = 0.0;  // J / m^2
    double numerical_error = 0.0;
    bool proximity_ok = true;
    std::vector<Warning> warnings;
};

// Proximity (Derjaguin) estimate with the 2 pi R prefactor.
SpherePlaneResult sphere_plane_force(const SpherePlaneConfig& config, const EngineOptions& options = {});

}  // namespace qvac
