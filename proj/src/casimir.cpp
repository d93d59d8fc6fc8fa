#include "qvac/casimir.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "qvac/constants.hpp"
#include "qvac/errors.hpp"
#include "qvac/quadrature.hpp"

namespace qvac {

using constants::c;
using constants::hbar;
using constants::k_B;
using constants::pi;

namespace {

constexpr std::size_t kMinMatsubaraTerms = 20;
constexpr std::size_t kMatsubaraBlock = 32;
constexpr double kMatsubaraStop = 1e-10;
constexpr double kContributingTerm = 1e-8;
constexpr std::size_t kFewMatsubaraTerms = 10;

void require_positive(double x, const char* name)
{
    if (!std::isfinite(x) || x <= 0.0) {
        std::ostringstream os;
        os << name << " must be finite and positive, got " << x;
        throw DomainError(os.str());
    }
}

double cavity_r(const CavityReflection& mirrors, double s, double kappa, Polarization p)
{
    return detail::reflection_at(mirrors.mirror1, s, kappa, p) * detail::reflection_at(mirrors.mirror2, s, kappa, p);
}

// 1 - r exp(-u), accurate for r close to 1 and small u.
double one_minus_round_trip(double r, double u)
{
    return -std::expm1(-u) + (1.0 - r) * std::exp(-u);
}

// -ln(1 - r exp(-u)): energy kernel.
double log_kernel(double r, double u)
{
    const double x = r * std::exp(-u);
    if (std::abs(x) < 0.5) {
        return -std::log1p(-x);
    }
    return -std::log(one_minus_round_trip(r, u));
}

// r exp(-u) / (1 - r exp(-u)): pressure kernel.
double pressure_kernel(double r, double u)
{
    const double x = r * std::exp(-u);
    if (x == 0.0) {
        return 0.0;
    }
    return x / one_minus_round_trip(r, u);
}

enum class Observable { Energy, Force };

quadrature::Tolerance outer_tolerance(const EngineOptions& options)
{
    quadrature::Tolerance tol;
    tol.relative = options.relative_tolerance;
    tol.max_panels = options.max_panels;
    return tol;
}

[[noreturn]] void fail_convergence(const char* where, const quadrature::Estimate& est, double requested)
{
    std::ostringstream os;
    os << where << ": quadrature did not converge (relative error " << est.relative_error() << " > "
       << requested << " after " << est.panels << " panels, " << est.evaluations << " evaluations)";
    throw ConvergenceError(os.str());
}

// Dimensionless T = 0 integral over u = 2 kappa L in [0, inf) and t = xi / (c kappa) in [0, 1]:
//   energy: I = int u^2 du int dt sum_p -ln(1 - r_p e^-u),  E/A = hbar c I / (32 pi^2 L^3)
//   force:  I = int u^3 du int dt sum_p r_p e^-u / (1 - r_p e^-u),  F/A = hbar c I / (32 pi^2 L^4)
quadrature::Estimate zero_temperature_integral(double L, const CavityReflection& mirrors,
                                               const EngineOptions& options, Observable what)
{
    const quadrature::Tolerance outer = outer_tolerance(options);
    quadrature::Tolerance inner = outer;
    inner.relative = options.relative_tolerance * 1e-2;

    const bool energy = what == Observable::Energy;
    double worst_inner = 0.0;
    bool inner_failed = false;

    const quadrature::Integrand integrand = [&](double u) {
        const double kappa = u / (2.0 * L);
        const quadrature::Integrand over_t = [&](double t) {
            const double s = kappa * t;
            double sum = 0.0;
            for (Polarization p : kPolarizations) {
                const double r = cavity_r(mirrors, s, kappa, p);
                sum += energy ? log_kernel(r, u) : pressure_kernel(r, u);
            }
            return sum;
        };
        const quadrature::Estimate angular = quadrature::integrate(over_t, 0.0, 1.0, inner);
        if (!angular.converged) {
            inner_failed = true;
        }
        worst_inner = std::max(worst_inner, angular.relative_error());
        const double weight = energy ? u * u : u * u * u;
        return weight * angular.value;
    };

    quadrature::Estimate est = quadrature::integrate_to_infinity(integrand, 0.0, outer);
    if (inner_failed) {
        fail_convergence("angular integral", est, inner.relative);
    }
    // Inner errors are relative per node; propagate them as a relative bound on the total.
    est.error += worst_inner * std::abs(est.value);
    if (!est.converged) {
        fail_convergence(energy ? "zero-temperature energy" : "zero-temperature force", est, outer.relative);
    }
    return est;
}

// One Matsubara term without the 1/2 weight of n = 0:
//   energy: int_{u_n}^inf u du sum_p -ln(1 - r_p e^-u)
//   force:  int_{u_n}^inf u^2 du sum_p r_p e^-u / (1 - r_p e^-u)
// with s = xi_n / c fixed and kappa = u / (2L).
quadrature::Estimate matsubara_term(double L, double s, const CavityReflection& mirrors,
                                    const EngineOptions& options, Observable what)
{
    const bool energy = what == Observable::Energy;
    const quadrature::Integrand integrand = [&](double u) {
        const double kappa = u / (2.0 * L);
        double sum = 0.0;
        for (Polarization p : kPolarizations) {
            const double r = cavity_r(mirrors, s, kappa, p);
            sum += energy ? log_kernel(r, u) : pressure_kernel(r, u);
        }
        return (energy ? u : u * u) * sum;
    };
    const double u_n = 2.0 * L * s;
    quadrature::Tolerance tol = outer_tolerance(options);
    tol.relative = options.relative_tolerance * 1e-1;
    quadrature::Estimate est = quadrature::integrate_to_infinity(integrand, u_n, tol);
    if (!est.converged) {
        fail_convergence("Matsubara term", est, tol.relative);
    }
    return est;
}

struct MatsubaraSeries {
    double energy = 0.0;  // sum' of energy terms
    double force = 0.0;   // sum' of force terms
    double relative_error = 0.0;
    std::size_t terms = 0;
    std::size_t contributing = 0;
};

MatsubaraSeries matsubara_sum(double L, const ThermalState& thermal, const CavityReflection& mirrors,
                              const EngineOptions& options, ResponseRequest request)
{
    struct Term {
        quadrature::Estimate energy;
        quadrature::Estimate force;
    };
    const double s1 = thermal.temperature_frequency() / c;

    std::vector<Term> terms;
    quadrature::CompensatedSum energy_sum;
    quadrature::CompensatedSum force_sum;
    double absolute_energy_error = 0.0;
    double absolute_force_error = 0.0;
    std::size_t used = 0;
    bool done = false;

    while (!done) {
        const std::size_t first = terms.size();
        if (first >= options.max_matsubara_terms) {
            std::ostringstream os;
            os << "Matsubara sum not converged after " << first << " terms (temperature "
               << thermal.temperature() << " K, length " << L << " m)";
            throw ConvergenceError(os.str());
        }
        terms.resize(first + kMatsubaraBlock);
        detail::parallel_for(kMatsubaraBlock, options.threads, [&](std::size_t i) {
            const double s = static_cast<double>(first + i) * s1;
            if (request.energy) {
                terms[first + i].energy = matsubara_term(L, s, mirrors, options, Observable::Energy);
            }
            if (request.force) {
                terms[first + i].force = matsubara_term(L, s, mirrors, options, Observable::Force);
            }
        });

        for (std::size_t n = first; n < terms.size(); ++n) {
            const double weight = n == 0 ? 0.5 : 1.0;
            const double e = weight * terms[n].energy.value;
            const double f = weight * terms[n].force.value;
            energy_sum.add(e);
            force_sum.add(f);
            absolute_energy_error += weight * terms[n].energy.error;
            absolute_force_error += weight * terms[n].force.error;
            used = n + 1;
            const bool energy_small = !request.energy || std::abs(e) <= kMatsubaraStop * std::abs(energy_sum.value());
            const bool force_small = !request.force || std::abs(f) <= kMatsubaraStop * std::abs(force_sum.value());
            if (used >= kMinMatsubaraTerms && energy_small && force_small) {
                done = true;
                break;
            }
        }
    }

    MatsubaraSeries series;
    series.energy = energy_sum.value();
    series.force = force_sum.value();
    series.terms = used;

    const Term& last = terms[used - 1];
    double relative = 0.0;
    if (request.energy && series.energy != 0.0) {
        relative = std::max(relative, (absolute_energy_error + std::abs(last.energy.value)) / std::abs(series.energy));
    }
    if (request.force && series.force != 0.0) {
        relative = std::max(relative, (absolute_force_error + std::abs(last.force.value)) / std::abs(series.force));
    }
    series.relative_error = relative;

    const bool by_force = request.force;
    const double total = std::abs(by_force ? series.force : series.energy);
    for (std::size_t n = 0; n < used; ++n) {
        const double weight = n == 0 ? 0.5 : 1.0;
        const double value = weight * (by_force ? terms[n].force.value : terms[n].energy.value);
        if (std::abs(value) >= kContributingTerm * total) {
            ++series.contributing;
        }
    }
    return series;
}

ForceResult assemble(const CavityConfig& config, const PlaneResponse& response)
{
    ForceResult result;
    result.energy = response.energy_per_area * config.area;
    result.force = response.force_per_area * config.area;
    result.eta_E = result.energy / ideal_energy(config.length, config.area);
    result.eta_F = result.force / ideal_force(config.length, config.area);
    result.numerical_error = response.relative_error;
    result.matsubara_terms = response.matsubara_terms;
    result.plane_limit_ok = config.plane_limit_ok();
    if (!result.plane_limit_ok) {
        result.warnings.push_back(Warning::PlaneLimit);
    }
    if (response.matsubara_terms > 0 && response.contributing_terms < kFewMatsubaraTerms) {
        result.warnings.push_back(Warning::FewMatsubaraTerms);
    }
    return result;
}

PlaneResponse ideal_response(double L)
{
    PlaneResponse r;
    r.energy_per_area = ideal_energy(L, 1.0);
    r.force_per_area = ideal_force(L, 1.0);
    return r;
}

bool use_closed_form(const ThermalState& thermal, const CavityReflection& mirrors, const EngineOptions& options)
{
    return thermal.is_zero() && mirrors.both_perfect() && options.perfect_closed_form;
}

}  // namespace

std::string to_string(Warning w)
{
    switch (w) {
    case Warning::PlaneLimit:
        return "plane_limit_violated";
    case Warning::ProximityLimit:
        return "proximity_limit_violated";
    case Warning::FewMatsubaraTerms:
        return "few_matsubara_terms";
    }
    return "unknown";
}

void CavityConfig::validate() const
{
    require_positive(length, "cavity length");
    require_positive(area, "plate area");
}

double ideal_force(double L, double A)
{
    require_positive(L, "length");
    require_positive(A, "area");
    const double L2 = L * L;
    return hbar * c * pi * pi * A / (240.0 * L2 * L2);
}

double ideal_energy(double L, double A)
{
    require_positive(L, "length");
    require_positive(A, "area");
    return hbar * c * pi * pi * A / (720.0 * L * L * L);
}

PlaneResponse plane_response(double L, const ThermalState& thermal, const CavityReflection& mirrors,
                             const EngineOptions& options, ResponseRequest request)
{
    require_positive(L, "length");
    if (use_closed_form(thermal, mirrors, options)) {
        return ideal_response(L);
    }

    PlaneResponse response;
    if (thermal.is_zero()) {
        const double scale = hbar * c / (32.0 * pi * pi * L * L * L);
        if (request.energy) {
            const auto est = zero_temperature_integral(L, mirrors, options, Observable::Energy);
            response.energy_per_area = scale * est.value;
            response.relative_error = std::max(response.relative_error, est.relative_error());
        }
        if (request.force) {
            const auto est = zero_temperature_integral(L, mirrors, options, Observable::Force);
            response.force_per_area = scale / L * est.value;
            response.relative_error = std::max(response.relative_error, est.relative_error());
        }
        return response;
    }

    const MatsubaraSeries series = matsubara_sum(L, thermal, mirrors, options, request);
    const double scale = k_B * thermal.temperature() / (8.0 * pi * L * L);
    response.energy_per_area = scale * series.energy;
    response.force_per_area = scale / L * series.force;
    response.relative_error = series.relative_error;
    response.matsubara_terms = series.terms;
    response.contributing_terms = series.contributing;
    return response;
}

ForceResult real_mirror_energy(const CavityConfig& config, const EngineOptions& options)
{
    config.validate();
    if (!config.thermal.is_zero()) {
        throw DomainError("real_mirror_energy is the T = 0 result; use thermal_force for T > 0");
    }
    return assemble(config, plane_response(config.length, config.thermal, config.mirrors, options));
}

ForceResult real_mirror_force(const CavityConfig& config, const EngineOptions& options)
{
    return real_mirror_energy(config, options);
}

ForceResult thermal_force(const CavityConfig& config, const EngineOptions& options)
{
    config.validate();
    if (config.thermal.is_zero()) {
        ForceResult result = real_mirror_force(config, options);
        result.eta_thermal = 1.0;
        return result;
    }
    ForceResult result = assemble(config, plane_response(config.length, config.thermal, config.mirrors, options));

    const PlaneResponse cold =
        plane_response(config.length, ThermalState{}, config.mirrors, options, ResponseRequest{false, true});
    result.eta_thermal = result.force / (cold.force_per_area * config.area);
    result.numerical_error += cold.relative_error;
    return result;
}

std::vector<EtaRow> eta_sweep(double L_min, double L_max, std::size_t points, const MirrorModel& material,
                              const ThermalState& thermal, const EngineOptions& options)
{
    require_positive(L_min, "L_min");
    require_positive(L_max, "L_max");
    if (!(L_min < L_max)) {
        throw DomainError("eta sweep needs L_min < L_max");
    }
    if (points < 2) {
        throw DomainError("eta sweep needs at least 2 points");
    }

    const CavityReflection real{material, material};
    const CavityReflection perfect{};
    const ResponseRequest energy_only{true, false};
    EngineOptions inner = options;
    inner.threads = 1;

    std::vector<EtaRow> rows(points);
    const double log_ratio = std::log(L_max / L_min);
    detail::parallel_for(points, options.threads, [&](std::size_t i) {
        EtaRow& row = rows[i];
        if (i == 0) {
            row.length = L_min;
        } else if (i + 1 == points) {
            row.length = L_max;
        } else {
            row.length = L_min * std::exp(log_ratio * static_cast<double>(i) / static_cast<double>(points - 1));
        }
        const double ideal = ideal_energy(row.length, 1.0);
        auto eta = [&](const ThermalState& t, const CavityReflection& m) {
            const PlaneResponse response = plane_response(row.length, t, m, inner, energy_only);
            row.numerical_error = std::max(row.numerical_error, response.relative_error);
            return response.energy_per_area / ideal;
        };
        row.eta_plasma = material.is_perfect() ? 1.0 : eta(ThermalState{}, real);
        row.eta_thermal = thermal.is_zero() ? 1.0 : eta(thermal, perfect);
        if (thermal.is_zero()) {
            row.eta_full = row.eta_plasma;
        } else if (material.is_perfect()) {
            row.eta_full = row.eta_thermal;
        } else {
            row.eta_full = eta(thermal, real);
        }
    });
    return rows;
}

SpherePlaneResult sphere_plane_force(const SpherePlaneConfig& config, const EngineOptions& options)
{
    require_positive(config.radius, "sphere radius");
    require_positive(config.length, "closest-approach distance");

    const PlaneResponse plane =
        plane_response(config.length, config.thermal, config.mirrors, options, ResponseRequest{true, false});

    SpherePlaneResult result;
    result.plane_energy_per_area = plane.energy_per_area;
    result.force = 2.0 * pi * config.radius * plane.energy_per_area;
    result.eta = plane.energy_per_area / ideal_energy(config.length, 1.0);
    result.numerical_error = plane.relative_error;
    result.proximity_ok = config.proximity_ok();
    if (!result.proximity_ok) {
        result.warnings.push_back(Warning::ProximityLimit);
    }
    if (plane.matsubara_terms > 0 && plane.contributing_terms < kFewMatsubaraTerms) {
        result.warnings.push_back(Warning::FewMatsubaraTerms);
    }
    return result;
}

}  // namespace qvac
