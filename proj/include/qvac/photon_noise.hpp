#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace qvac {

// Gaussian statistics of the two quadratures E1 cos(wt) + E2 sin(wt) of one field mode,
// in units fixed by the vacuum level E0.
class QuadratureState {
public:
    // Throws DomainError if E0 <= 0, a variance is negative, or var1 var2 < E0^4.
    QuadratureState(double mean1, double mean2, double var1, double var2, double vacuum_scale = 1.0);

    static QuadratureState vacuum(double vacuum_scale = 1.0);

    double mean1() const { return mean1_; }
    double mean2() const { return mean2_; }
    double var1() const { return var1_; }
    double var2() const { return var2_; }
    double vacuum_scale() const { return e0_; }

private:
    double mean1_;
    double mean2_;
    double var1_;
    double var2_;
    double e0_;
};

// Minimum-uncertainty state with var1 = s E0^2 and var2 = E0^2 / s.
QuadratureState make_squeezed(double vacuum_scale, double squeeze_factor);

// Strong coherent beam in port a, arbitrary Gaussian field in the unused port b.
struct BeamSplitterSetup {
    double mean_photon_number_a = 0.0;
    QuadratureState port_b = QuadratureState::vacuum();

    // The linear law for the photon-number difference needs <n_a> >> 1.
    bool linearized() const { return mean_photon_number_a >= 100.0; }
};

// Variance of n = n_c - n_d: <n_a> var1_b / E0^2.
double difference_variance(const BeamSplitterSetup& setup);

// difference_variance / <n_a>; 1 for a vacuum port b (Poissonian).
double fano_factor(const BeamSplitterSetup& setup);

struct MonteCarloEstimate {
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance
    double fano = 0.0;      // variance / <n_a>
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kMinMonteCarloTrials = 1000;

/// Samples dB1 ~ N(0, var1_b) and forms dn = sqrt(<n_a> / E0^2) dB1.
///
/// Normal deviates come from std::mt19937_64 seeded with `seed`, converted to uniforms on
/// (0, 1] with 53-bit resolution and paired by the Box-Muller transform. Every step is
/// specified bit-for-bit, so a seed reproduces the same estimate on any conforming platform.
MonteCarloEstimate monte_carlo_difference(const BeamSplitterSetup& setup, std::size_t trials, std::uint64_t seed);

// Standard normal stream used by monte_carlo_difference.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}
    double next();

private:
    double uniform();

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qvac
