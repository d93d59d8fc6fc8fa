#pragma once

#include <array>
#include <complex>
#include <string>
#include <variant>

namespace qvac {

enum class Polarization { TE, TM };

inline constexpr std::array<Polarization, 2> kPolarizations{Polarization::TE, Polarization::TM};

std::string to_string(Polarization p);

struct PerfectMirror {};

class PlasmaMirror {
public:
    // Throws DomainError unless plasma_frequency is finite and > 0 (rad/s).
    explicit PlasmaMirror(double plasma_frequency);
    static PlasmaMirror from_wavelength(double plasma_wavelength_m);

    double plasma_frequency() const { return omega_p_; }
    double plasma_wavelength() const;
    // omega_p / c, the plasma wavenumber (1/m).
    double plasma_wavenumber() const;

private:
    double omega_p_;
};

// Reflection response of a single mirror.
class MirrorModel {
public:
    MirrorModel() = default;  // perfect
    MirrorModel(PerfectMirror m) : model_(m) {}
    MirrorModel(PlasmaMirror m) : model_(m) {}

    static MirrorModel perfect() { return MirrorModel{}; }
    static MirrorModel plasma_from_wavelength(double plasma_wavelength_m);

    bool is_perfect() const { return std::holds_alternative<PerfectMirror>(model_); }
    const PlasmaMirror* plasma() const { return std::get_if<PlasmaMirror>(&model_); }

    std::string describe() const;

private:
    std::variant<PerfectMirror, PlasmaMirror> model_;
};

// Named preset: plasma wavelength 136 nm for gold and copper.
inline constexpr double kGoldCopperPlasmaWavelength = 136e-9;

struct CavityReflection {
    MirrorModel mirror1;
    MirrorModel mirror2;

    bool both_perfect() const { return mirror1.is_perfect() && mirror2.is_perfect(); }
};

// Point in mode space. Exactly one of real frequency omega or imaginary frequency xi is set.
class ModeCoordinate {
public:
    // Propagating real-axis mode of frequency omega at the given incidence angle in [0, pi/2].
    static ModeCoordinate real_axis(double omega, double incidence_angle);
    // Imaginary-axis mode xi with transverse wavevector k >= 0.
    static ModeCoordinate imaginary_axis(double xi, double transverse_wavevector);

    bool on_real_axis() const { return real_axis_; }
    double frequency() const { return frequency_; }  // omega or xi
    double kappa() const { return kappa_; }
    double transverse_wavevector() const { return k_; }
    double incidence_angle() const { return angle_; }  // NaN off the real axis

private:
    bool real_axis_ = true;
    double frequency_ = 0.0;
    double kappa_ = 0.0;
    double k_ = 0.0;
    double angle_ = 0.0;
};

// Fresnel amplitude of one mirror on the imaginary frequency axis, real and in [-1, 1].
// Perfect: TE -1, TM +1. Plasma: eps(i xi) = 1 + omega_p^2 / xi^2.
double reflection_amplitude_imaginary(const MirrorModel& model, double xi, double k, Polarization p);

// Product r_1 r_2 at the same imaginary-axis coordinates.
double cavity_reflection_imaginary(const CavityReflection& cavity, double xi, double k, Polarization p);

/// Airy function g = (1 - |r|^2) / |1 - r exp(2 i kappa L)|^2 for a real-axis mode.
///
/// Real-axis amplitudes of the plasma model are not modelled, so the cavity amplitude r is
/// supplied by the caller. Throws SingularResonanceError for |r| = 1 exactly on resonance.
double airy_function(std::complex<double> cavity_amplitude, const ModeCoordinate& mode, double L);

// Same, with the cavity amplitude taken from two perfect mirrors (r = 1 for both polarizations).
// Off resonance this is identically 0.
double airy_function(const CavityReflection& cavity, const ModeCoordinate& mode, double L, Polarization p);

namespace detail {

// Amplitude at imaginary frequency with s = xi / c >= 0 and kappa = sqrt(s^2 + k^2) given.
// s = 0 is the static limit used by the zeroth Matsubara term.
double reflection_at(const MirrorModel& model, double s, double kappa, Polarization p);

}  // namespace detail

}  // namespace qvac
