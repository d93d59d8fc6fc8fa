#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qvac/thermal.hpp"

namespace qvac {

// Mass correction (E_Cas - F_Cas L) / c^2 of a cavity under Casimir stress. Negative, since
// E_Cas = F_Cas L / 3, so mu c^2 = -2 E_Cas.
double casimir_inertia_mass(double L, double A);

// Linear response of the radiation-pressure force to mirror motion at frequency Omega.
struct Susceptibility {
    double omega = 0.0;                // rad/s
    std::complex<double> value{};      // N/m
};

// Advisory domain flags of the asymptotic laws. Results are returned either way.
struct MotionalValidity {
    bool large_area = false;     // A > 100 c^2 / Omega^2
    bool thermal_regime = false; // thermal law: theta > 100 Omega; vacuum law: theta = 0
    bool ok() const { return large_area && thermal_regime; }
};

struct SusceptibilityResult {
    Susceptibility chi;
    MotionalValidity validity;
};

// chi = i hbar A theta^4 Omega / (240 pi^2 c^4); vanishes at T = 0.
SusceptibilityResult thermal_susceptibility(double omega, double A, const ThermalState& state);

// chi = i hbar A Omega^5 / (60 pi^2 c^4). `state` only feeds the theta = 0 validity flag.
SusceptibilityResult vacuum_susceptibility(double omega, double A, const ThermalState& state = {});

// Uniformly sampled mirror displacement q(t_i), t_i = t0 + i dt.
class Trajectory {
public:
    static constexpr std::size_t kMinSamples = 11;

    // Throws DomainError for fewer than 11 samples, non-finite samples or dt <= 0.
    Trajectory(std::vector<double> samples, double dt, double t0 = 0.0);

    std::span<const double> samples() const { return samples_; }
    double dt() const { return dt_; }
    double t0() const { return t0_; }
    double time(std::size_t i) const { return t0_ + static_cast<double>(i) * dt_; }
    std::size_t size() const { return samples_.size(); }

private:
    std::vector<double> samples_;
    double dt_;
    double t0_;
};

// Two-column text "t q" (whitespace or comma separated, '#' comments). Times must be uniformly
// spaced to within 1e-6 dt plus 1e-9 of the largest |t|.
Trajectory read_trajectory(std::istream& in);
Trajectory read_trajectory_file(const std::string& path);

struct ForceSeries {
    std::vector<double> force;  // N; 0 on invalid samples
    std::vector<bool> valid;    // false within half a stencil width of either end
};

namespace stencil {

/// 11-point centred stencils, sixth order for the fifth derivative and tenth order for the
/// first derivative. Only the antisymmetric half is stored: weight j multiplies
/// q[i + j] - q[i - j], j = 1..5, and the sum is divided by denominator * dt^order.
///
///   fifth: (1938, -1872, 783, -152, 13) / 288      i.e. 323/48, -13/2, 87/32, -19/36, 13/288
///   first: (2100, -600, 150, -25, 2) / 2520        i.e. 5/6, -5/21, 5/84, -5/504, 1/1260
///
/// The weighted sum is accumulated with error-free transformations (fma two-product, two-sum),
/// so exactly representable polynomial samples of degree < order are annihilated to ~1e-30.
struct Stencil {
    std::array<double, 5> weights;
    double denominator;
    int order;
};

inline constexpr std::size_t kHalfWidth = 5;
inline constexpr Stencil kFifthDerivative{{1938.0, -1872.0, 783.0, -152.0, 13.0}, 288.0, 5};
inline constexpr Stencil kFirstDerivative{{2100.0, -600.0, 150.0, -25.0, 2.0}, 2520.0, 1};

// Derivative at sample i; requires kHalfWidth <= i < q.size() - kHalfWidth.
double derivative(const Stencil& s, std::span<const double> q, std::size_t i, double dt);

}  // namespace stencil

// -hbar A q'''''(t) / (60 pi^2 c^4), the zero-temperature radiation reaction.
ForceSeries motional_force_time_domain(const Trajectory& trajectory, double A);

// +hbar A theta^4 q'(t) / (240 pi^2 c^4), with the sign of the thermal law kept as written
// even though it is described as a friction force.
ForceSeries thermal_friction_force(const Trajectory& trajectory, double A, const ThermalState& state);

}  // namespace qvac
