#include "qvac/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qvac/casimir.hpp"
#include "qvac/constants.hpp"
#include "qvac/errors.hpp"
#include "qvac/materials.hpp"
#include "qvac/motional.hpp"
#include "qvac/photon_noise.hpp"
#include "qvac/report.hpp"
#include "qvac/thermal.hpp"

namespace qvac::cli {

namespace {

constexpr double kMicron = 1e-6;
constexpr double kSquareCm = 1e-4;

std::vector<std::string> warning_names(const std::vector<Warning>& warnings)
{
    std::vector<std::string> names;
    for (Warning w : warnings) {
        names.push_back(to_string(w));
    }
    return names;
}

struct Settings {
    std::string format = "csv";
    std::string output;
    unsigned threads = 1;
    double relative_tolerance = 1e-10;
    std::size_t max_panels = 4000;
};

struct PlaneArgs {
    double length_um = 0.0;
    double area_cm2 = 1.0;
    double temperature = 0.0;
    std::string material = "perfect";
    std::string material2;
};

struct EtaArgs {
    double lmin_um = 0.1;
    double lmax_um = 10.0;
    std::size_t points = 100;
    std::string material = "gold";
    double temperature = 300.0;
};

struct SphereArgs {
    double radius_um = 0.0;
    double length_um = 0.0;
    double temperature = 0.0;
    std::string material = "perfect";
};

struct MotionalArgs {
    std::string trajectory_file;
    double area_m2 = 1.0;
    double temperature = 0.0;
};

struct ChiArgs {
    double omega = 0.0;
    double area_m2 = 1.0;
    double temperature = 0.0;
};

struct NoiseArgs {
    double na = 1e6;
    double squeeze = 1.0;
    double e0 = 1.0;
    std::size_t trials = 0;
    std::optional<std::uint64_t> seed;
};

struct PlanckArgs {
    double omega = 0.0;
    double temperature = 0.0;
};

struct DensityArgs {
    double omega_max = 0.0;
    double temperature = 0.0;
};

EngineOptions engine_options(const Settings& s)
{
    EngineOptions o;
    o.threads = s.threads;
    o.relative_tolerance = s.relative_tolerance;
    o.max_panels = s.max_panels;
    return o;
}

std::vector<Record> cmd_ideal(const PlaneArgs& a)
{
    const double L = a.length_um * kMicron;
    const double A = a.area_cm2 * kSquareCm;
    Record r;
    r.inputs["length_um"] = a.length_um;
    r.inputs["area_cm2"] = a.area_cm2;
    r.outputs["force_N"] = ideal_force(L, A);
    r.outputs["energy_J"] = ideal_energy(L, A);
    if (!(A > 100.0 * L * L)) {
        r.flags.push_back(to_string(Warning::PlaneLimit));
    }
    return {r};
}

std::vector<Record> cmd_force(const PlaneArgs& a, const Settings& s)
{
    const MaterialCatalog catalog = MaterialCatalog::from_environment();
    CavityConfig config;
    config.length = a.length_um * kMicron;
    config.area = a.area_cm2 * kSquareCm;
    config.thermal = ThermalState(a.temperature);
    config.mirrors.mirror1 = parse_material(a.material, catalog);
    config.mirrors.mirror2 = a.material2.empty() ? config.mirrors.mirror1 : parse_material(a.material2, catalog);

    const ForceResult result = thermal_force(config, engine_options(s));
    Record r;
    r.inputs["length_um"] = a.length_um;
    r.inputs["area_cm2"] = a.area_cm2;
    r.inputs["temperature_K"] = a.temperature;
    r.inputs["material1"] = config.mirrors.mirror1.describe();
    r.inputs["material2"] = config.mirrors.mirror2.describe();
    r.outputs["force_N"] = result.force;
    r.outputs["energy_J"] = result.energy;
    r.outputs["eta_E"] = result.eta_E;
    r.outputs["eta_F"] = result.eta_F;
    r.outputs["eta_T"] = result.eta_thermal.value_or(1.0);
    r.outputs["matsubara_terms"] = result.matsubara_terms;
    r.flags = warning_names(result.warnings);
    r.numerical_error = result.numerical_error;
    return {r};
}

std::vector<Record> cmd_eta(const EtaArgs& a, const Settings& s)
{
    const MaterialCatalog catalog = MaterialCatalog::from_environment();
    const MirrorModel material = parse_material(a.material, catalog);
    const auto rows = eta_sweep(a.lmin_um * kMicron, a.lmax_um * kMicron, a.points, material,
                                ThermalState(a.temperature), engine_options(s));
    std::vector<Record> records;
    for (const EtaRow& row : rows) {
        Record r;
        r.inputs["length_um"] = row.length / kMicron;
        r.inputs["temperature_K"] = a.temperature;
        r.inputs["material"] = material.describe();
        r.outputs["eta_plasma"] = row.eta_plasma;
        r.outputs["eta_thermal"] = row.eta_thermal;
        r.outputs["eta_full"] = row.eta_full;
        r.outputs["eta_product"] = row.eta_product();
        r.outputs["product_deviation"] = row.product_deviation();
        r.numerical_error = row.numerical_error;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<Record> cmd_psphere(const SphereArgs& a, const Settings& s)
{
    const MaterialCatalog catalog = MaterialCatalog::from_environment();
    SpherePlaneConfig config;
    config.radius = a.radius_um * kMicron;
    config.length = a.length_um * kMicron;
    config.thermal = ThermalState(a.temperature);
    const MirrorModel m = parse_material(a.material, catalog);
    config.mirrors = CavityReflection{m, m};

    const SpherePlaneResult result = sphere_plane_force(config, engine_options(s));
    Record r;
    r.inputs["radius_um"] = a.radius_um;
    r.inputs["length_um"] = a.length_um;
    r.inputs["temperature_K"] = a.temperature;
    r.inputs["material"] = m.describe();
    r.outputs["force_N"] = result.force;
    r.outputs["eta"] = result.eta;
    r.outputs["plane_energy_per_area_J_m2"] = result.plane_energy_per_area;
    r.flags = warning_names(result.warnings);
    r.numerical_error = result.numerical_error;
    return {r};
}

std::vector<Record> cmd_motional(const MotionalArgs& a)
{
    const Trajectory trajectory = read_trajectory_file(a.trajectory_file);
    const ThermalState thermal(a.temperature);
    const ForceSeries vacuum = motional_force_time_domain(trajectory, a.area_m2);
    const ForceSeries thermal_force_series = thermal_friction_force(trajectory, a.area_m2, thermal);

    std::vector<Record> records;
    records.reserve(trajectory.size());
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        Record r;
        r.inputs["t_s"] = trajectory.time(i);
        r.inputs["q_m"] = trajectory.samples()[i];
        r.outputs["vacuum_force_N"] = vacuum.force[i];
        r.outputs["thermal_force_N"] = thermal_force_series.force[i];
        r.outputs["valid"] = static_cast<bool>(vacuum.valid[i]);
        if (!vacuum.valid[i]) {
            r.flags.push_back("stencil_boundary");
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<Record> cmd_chi(const ChiArgs& a)
{
    const ThermalState thermal(a.temperature);
    const auto vacuum = vacuum_susceptibility(a.omega, a.area_m2, thermal);
    const auto hot = thermal_susceptibility(a.omega, a.area_m2, thermal);
    Record r;
    r.inputs["omega_rad_s"] = a.omega;
    r.inputs["area_m2"] = a.area_m2;
    r.inputs["temperature_K"] = a.temperature;
    r.outputs["chi_vacuum_re"] = vacuum.chi.value.real();
    r.outputs["chi_vacuum_im"] = vacuum.chi.value.imag();
    r.outputs["chi_thermal_re"] = hot.chi.value.real();
    r.outputs["chi_thermal_im"] = hot.chi.value.imag();
    if (!vacuum.validity.large_area) {
        r.flags.push_back("area_small_vs_wavelength");
    }
    if (!vacuum.validity.thermal_regime) {
        r.flags.push_back("vacuum_law_needs_zero_temperature");
    }
    if (!hot.validity.thermal_regime) {
        r.flags.push_back("thermal_law_needs_theta_much_greater_than_omega");
    }
    return {r};
}

std::vector<Record> cmd_noise(const NoiseArgs& a)
{
    BeamSplitterSetup setup;
    setup.mean_photon_number_a = a.na;
    setup.port_b = make_squeezed(a.e0, a.squeeze);

    Record r;
    r.inputs["na"] = a.na;
    r.inputs["squeeze"] = a.squeeze;
    r.inputs["e0"] = a.e0;
    r.inputs["trials"] = a.trials;
    r.inputs["seed"] = a.seed.value_or(0);
    r.outputs["difference_variance"] = difference_variance(setup);
    r.outputs["fano"] = fano_factor(setup);
    if (a.trials > 0) {
        if (!a.seed) {
            throw DomainError("--trials requires an explicit --seed");
        }
        const MonteCarloEstimate mc = monte_carlo_difference(setup, a.trials, *a.seed);
        r.outputs["mc_mean"] = mc.mean;
        r.outputs["mc_variance"] = mc.variance;
        r.outputs["mc_fano"] = mc.fano;
        // One standard deviation of the sample variance of Gaussian data, relative.
        r.numerical_error = std::sqrt(2.0 / static_cast<double>(a.trials));
    }
    if (!setup.linearized()) {
        r.flags.push_back("not_linearized_na_below_100");
    }
    return {r};
}

std::vector<Record> cmd_planck(const PlanckArgs& a)
{
    const ThermalState thermal(a.temperature);
    Record r;
    r.inputs["omega_rad_s"] = a.omega;
    r.inputs["temperature_K"] = a.temperature;
    r.outputs["mean_photon_number"] = mean_photon_number(a.omega, thermal);
    r.outputs["energy_first_law_J"] = mode_energy_first_law(a.omega, thermal);
    r.outputs["energy_second_law_J"] = mode_energy_second_law(a.omega, thermal);
    r.outputs["thermal_weight"] = thermal_weight(a.omega, thermal);
    return {r};
}

std::vector<Record> cmd_density(const DensityArgs& a)
{
    const ThermalState thermal(a.temperature);
    const EnergyDensity d = energy_density(a.omega_max, thermal);
    Record r;
    r.inputs["omega_max_rad_s"] = a.omega_max;
    r.inputs["temperature_K"] = a.temperature;
    r.outputs["vacuum_J_m3"] = d.vacuum;
    r.outputs["thermal_J_m3"] = d.thermal;
    r.outputs["total_J_m3"] = d.total();
    return {r};
}

void emit(const std::vector<Record>& records, const Settings& s, std::ostream& out)
{
    std::ostringstream buffer;
    if (s.format == "json") {
        write_json(buffer, records);
    } else {
        write_csv(buffer, records);
    }
    if (s.output.empty()) {
        out << buffer.str();
        return;
    }
    std::ofstream file(s.output, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + s.output + "'");
    }
    file << buffer.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum-vacuum observables: Casimir forces, motional susceptibilities, photon noise.\n"
                 "Units: lengths in um, plate areas in cm^2 (plane-plane) or m^2 (motional, chi),\n"
                 "temperatures in K, angular frequencies in rad/s. Output: CSV or JSON.",
                 "qvac"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", settings.output, "Write results to this file instead of standard output");
    app.add_option("--threads", settings.threads, "Worker threads (0 = all cores); output does not depend on it");
    app.add_option("--rel-tol", settings.relative_tolerance, "Relative tolerance of the Casimir integrals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-panels", settings.max_panels, "Refinement limit per integral; exceeding it exits with 3")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    const auto positive = CLI::PositiveNumber;
    const auto non_negative = CLI::NonNegativeNumber;
    const std::string material_help =
        "perfect | plasma:<plasma wavelength in nm> | preset name (gold, copper, or from $QVAC_MATERIALS)";

    std::function<std::vector<Record>()> action;

    PlaneArgs ideal;
    auto* ideal_cmd = app.add_subcommand("ideal", "Ideal-mirror Casimir force and energy between plates");
    ideal_cmd->add_option("--length-um", ideal.length_um, "Plate separation (um)")->required()->check(positive);
    ideal_cmd->add_option("--area-cm2", ideal.area_cm2, "Plate area (cm^2)")->check(positive)->capture_default_str();
    ideal_cmd->callback([&] { action = [&] { return cmd_ideal(ideal); }; });

    PlaneArgs force;
    auto* force_cmd = app.add_subcommand("force", "Real-mirror Casimir force at finite temperature");
    force_cmd->add_option("--length-um", force.length_um, "Plate separation (um)")->required()->check(positive);
    force_cmd->add_option("--area-cm2", force.area_cm2, "Plate area (cm^2)")->check(positive)->capture_default_str();
    force_cmd->add_option("--temperature-K", force.temperature, "Temperature (K)")
        ->check(non_negative)
        ->capture_default_str();
    force_cmd->add_option("--material", force.material, material_help)->capture_default_str();
    force_cmd->add_option("--material2", force.material2, "Second mirror (defaults to --material)");
    force_cmd->callback([&] { action = [&] { return cmd_force(force, settings); }; });

    EtaArgs eta;
    auto* eta_cmd = app.add_subcommand("eta", "Energy correction factors on a log-spaced distance sweep");
    eta_cmd->add_option("--lmin-um", eta.lmin_um, "Smallest separation (um)")->check(positive)->capture_default_str();
    eta_cmd->add_option("--lmax-um", eta.lmax_um, "Largest separation (um)")->check(positive)->capture_default_str();
    eta_cmd->add_option("--points", eta.points, "Number of log-spaced points (>= 2)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
    eta_cmd->add_option("--material", eta.material, material_help)->capture_default_str();
    eta_cmd->add_option("--temperature-K", eta.temperature, "Temperature (K)")
        ->check(non_negative)
        ->capture_default_str();
    eta_cmd->callback([&] { action = [&] { return cmd_eta(eta, settings); }; });

    SphereArgs sphere;
    auto* sphere_cmd = app.add_subcommand("psphere", "Sphere-plane force from the proximity rule");
    sphere_cmd->add_option("--radius-um", sphere.radius_um, "Sphere radius (um)")->required()->check(positive);
    sphere_cmd->add_option("--length-um", sphere.length_um, "Closest-approach distance (um)")
        ->required()
        ->check(positive);
    sphere_cmd->add_option("--temperature-K", sphere.temperature, "Temperature (K)")
        ->check(non_negative)
        ->capture_default_str();
    sphere_cmd->add_option("--material", sphere.material, material_help)->capture_default_str();
    sphere_cmd->callback([&] { action = [&] { return cmd_psphere(sphere, settings); }; });

    MotionalArgs motional;
    auto* motional_cmd = app.add_subcommand("motional", "Radiation-reaction forces on a sampled mirror trajectory");
    motional_cmd->add_option("--trajectory-file", motional.trajectory_file, "Two-column text file: t (s), q (m)")
        ->required();
    motional_cmd->add_option("--area-m2", motional.area_m2, "Mirror area (m^2)")->check(positive)->capture_default_str();
    motional_cmd->add_option("--temperature-K", motional.temperature, "Temperature (K)")
        ->check(non_negative)
        ->capture_default_str();
    motional_cmd->callback([&] { action = [&] { return cmd_motional(motional); }; });

    ChiArgs chi;
    auto* chi_cmd = app.add_subcommand("chi", "Motional susceptibilities in vacuum and in a thermal field");
    chi_cmd->add_option("--omega", chi.omega, "Motion frequency (rad/s)")->required()->check(positive);
    chi_cmd->add_option("--area-m2", chi.area_m2, "Mirror area (m^2)")->check(positive)->capture_default_str();
    chi_cmd->add_option("--temperature-K", chi.temperature, "Temperature (K)")
        ->check(non_negative)
        ->capture_default_str();
    chi_cmd->callback([&] { action = [&] { return cmd_chi(chi); }; });

    NoiseArgs noise;
    std::uint64_t seed = 0;
    auto* noise_cmd = app.add_subcommand("noise", "Photon-number difference noise behind a beam splitter");
    noise_cmd->add_option("--na", noise.na, "Mean photon number in port a")->check(positive)->capture_default_str();
    noise_cmd->add_option("--squeeze", noise.squeeze, "Squeeze factor of port b (1 = vacuum)")
        ->check(positive)
        ->capture_default_str();
    noise_cmd->add_option("--e0", noise.e0, "Vacuum field scale")->check(positive)->capture_default_str();
    noise_cmd->add_option("--trials", noise.trials, "Monte Carlo trials (0 = analytic only, else >= 1000)")
        ->capture_default_str();
    auto* seed_opt = noise_cmd->add_option("--seed", seed, "64-bit seed for the Monte Carlo stream");
    noise_cmd->callback([&] {
        if (seed_opt->count() > 0) {
            noise.seed = seed;
        }
        action = [&] { return cmd_noise(noise); };
    });

    PlanckArgs planck;
    auto* planck_cmd = app.add_subcommand("planck", "Mode occupation and energies of one field mode");
    planck_cmd->add_option("--omega", planck.omega, "Mode frequency (rad/s)")->required()->check(positive);
    planck_cmd->add_option("--temperature-K", planck.temperature, "Temperature (K)")
        ->check(non_negative)
        ->capture_default_str();
    planck_cmd->callback([&] { action = [&] { return cmd_planck(planck); }; });

    DensityArgs density;
    auto* density_cmd = app.add_subcommand("density", "Vacuum and thermal energy density below a cutoff");
    density_cmd->add_option("--omega-max", density.omega_max, "Cutoff frequency (rad/s)")
        ->required()
        ->check(non_negative);
    density_cmd->add_option("--temperature-K", density.temperature, "Temperature (K)")
        ->check(non_negative)
        ->capture_default_str();
    density_cmd->callback([&] { action = [&] { return cmd_density(density); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitArgumentError;
    }

    try {
        emit(action(), settings, out);
    } catch (const ConvergenceError& e) {
        err << "qvac: numerical non-convergence: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::domain_error& e) {
        err << "qvac: " << e.what() << '\n';
        return kExitArgumentError;
    } catch (const std::exception& e) {
        err << "qvac: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitSuccess;
}

}  // namespace qvac::cli
