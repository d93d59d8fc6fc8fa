#include "qvac/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qvac/constants.hpp"
#include "qvac/errors.hpp"

namespace qvac {

using constants::c;
using constants::pi;

std::string to_string(Polarization p)
{
    return p == Polarization::TE ? "TE" : "TM";
}

PlasmaMirror::PlasmaMirror(double plasma_frequency) : omega_p_(plasma_frequency)
{
    if (!std::isfinite(plasma_frequency) || plasma_frequency <= 0.0) {
        throw DomainError("plasma frequency must be finite and positive");
    }
}

PlasmaMirror PlasmaMirror::from_wavelength(double plasma_wavelength_m)
{
    if (!std::isfinite(plasma_wavelength_m) || plasma_wavelength_m <= 0.0) {
        throw DomainError("plasma wavelength must be finite and positive");
    }
    return PlasmaMirror(2.0 * pi * c / plasma_wavelength_m);
}

double PlasmaMirror::plasma_wavelength() const
{
    return 2.0 * pi * c / omega_p_;
}

double PlasmaMirror::plasma_wavenumber() const
{
    return omega_p_ / c;
}

MirrorModel MirrorModel::plasma_from_wavelength(double plasma_wavelength_m)
{
    return MirrorModel(PlasmaMirror::from_wavelength(plasma_wavelength_m));
}

std::string MirrorModel::describe() const
{
    if (const auto* p = plasma()) {
        std::ostringstream os;
        os.precision(9);
        os << "plasma:" << p->plasma_wavelength() * 1e9 << "nm";
        return os.str();
    }
    return "perfect";
}

ModeCoordinate ModeCoordinate::real_axis(double omega, double incidence_angle)
{
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw DomainError("real-axis mode needs omega > 0");
    }
    if (!(incidence_angle >= 0.0 && incidence_angle <= 0.5 * pi)) {
        throw DomainError("incidence angle must lie in [0, pi/2]");
    }
    ModeCoordinate m;
    m.real_axis_ = true;
    m.frequency_ = omega;
    m.angle_ = incidence_angle;
    m.kappa_ = omega / c * std::cos(incidence_angle);
    m.k_ = omega / c * std::sin(incidence_angle);
    return m;
}

ModeCoordinate ModeCoordinate::imaginary_axis(double xi, double transverse_wavevector)
{
    if (!std::isfinite(xi) || xi <= 0.0) {
        throw DomainError("imaginary-axis mode needs xi > 0");
    }
    if (!std::isfinite(transverse_wavevector) || transverse_wavevector < 0.0) {
        throw DomainError("transverse wavevector must be >= 0");
    }
    ModeCoordinate m;
    m.real_axis_ = false;
    m.frequency_ = xi;
    m.k_ = transverse_wavevector;
    m.kappa_ = std::hypot(xi / c, transverse_wavevector);
    m.angle_ = NAN;
    return m;
}

namespace detail {

double reflection_at(const MirrorModel& model, double s, double kappa, Polarization p)
{
    const PlasmaMirror* plasma = model.plasma();
    if (plasma == nullptr) {
        return p == Polarization::TE ? -1.0 : 1.0;
    }
    const double K = plasma->plasma_wavenumber();
    const double K2 = K * K;
    const double kappa_m = std::sqrt(kappa * kappa + K2);
    // kappa - kappa_m = -K^2 / (kappa + kappa_m), written without cancellation.
    const double sum = kappa + kappa_m;
    if (p == Polarization::TE) {
        return -K2 / (sum * sum);
    }
    // eps kappa -/+ kappa_m multiplied through by s^2, with eps s^2 = s^2 + K^2.
    const double s2 = s * s;
    const double numerator = K2 * (kappa - s2 / sum);
    const double denominator = (s2 + K2) * kappa + s2 * kappa_m;
    return numerator / denominator;
}

}  // namespace detail

double reflection_amplitude_imaginary(const MirrorModel& model, double xi, double k, Polarization p)
{
    if (!std::isfinite(xi) || xi <= 0.0) {
        throw DomainError("reflection amplitude needs xi > 0");
    }
    if (!std::isfinite(k) || k < 0.0) {
        throw DomainError("reflection amplitude needs k >= 0");
    }
    const double s = xi / c;
    return detail::reflection_at(model, s, std::hypot(s, k), p);
}

double cavity_reflection_imaginary(const CavityReflection& cavity, double xi, double k, Polarization p)
{
    return reflection_amplitude_imaginary(cavity.mirror1, xi, k, p) *
           reflection_amplitude_imaginary(cavity.mirror2, xi, k, p);
}

double airy_function(std::complex<double> cavity_amplitude, const ModeCoordinate& mode, double L)
{
    if (!mode.on_real_axis()) {
        throw DomainError("airy_function is defined for real-axis modes");
    }
    if (!std::isfinite(L) || L <= 0.0) {
        throw DomainError("cavity length must be positive");
    }
    const double r2 = std::norm(cavity_amplitude);
    if (r2 > 1.0 + 1e-12) {
        throw DomainError("cavity amplitude violates |r| <= 1");
    }
    const std::complex<double> round_trip = cavity_amplitude * std::polar(1.0, 2.0 * mode.kappa() * L);
    const double denominator = std::norm(1.0 - round_trip);
    const double numerator = std::max(0.0, 1.0 - r2);
    if (numerator <= 1e-15 && denominator <= 1e-24) {
        throw SingularResonanceError("lossless cavity evaluated on resonance; use the perfect-mirror closed form");
    }
    return numerator / denominator;
}

double airy_function(const CavityReflection& cavity, const ModeCoordinate& mode, double L, Polarization p)
{
    if (!cavity.both_perfect()) {
        throw DomainError("real-axis amplitudes are only modelled for perfect mirrors");
    }
    // (-1)(-1) for TE and (+1)(+1) for TM.
    (void)p;
    return airy_function(std::complex<double>(1.0, 0.0), mode, L);
}

}  // namespace qvac
