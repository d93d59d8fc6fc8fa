#include "qvac/photon_noise.hpp"

#include <cmath>
#include <sstream>

#include "qvac/constants.hpp"
#include "qvac/errors.hpp"

namespace qvac {

QuadratureState::QuadratureState(double mean1, double mean2, double var1, double var2, double vacuum_scale)
    : mean1_(mean1), mean2_(mean2), var1_(var1), var2_(var2), e0_(vacuum_scale)
{
    if (!std::isfinite(vacuum_scale) || vacuum_scale <= 0.0) {
        throw DomainError("vacuum scale E0 must be finite and positive");
    }
    if (!std::isfinite(mean1) || !std::isfinite(mean2) || !std::isfinite(var1) || !std::isfinite(var2)) {
        throw DomainError("quadrature moments must be finite");
    }
    if (var1 < 0.0 || var2 < 0.0) {
        throw DomainError("quadrature variances must be non-negative");
    }
    // dE1 dE2 >= E0^2, with a few ulps of slack for saturated states.
    const double e0_2 = vacuum_scale * vacuum_scale;
    if (std::sqrt(var1) * std::sqrt(var2) < e0_2 * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "quadrature state violates the Heisenberg bound: sqrt(" << var1 << ") sqrt(" << var2 << ") < " << e0_2;
        throw DomainError(os.str());
    }
}

QuadratureState QuadratureState::vacuum(double vacuum_scale)
{
    const double e0_2 = vacuum_scale * vacuum_scale;
    return QuadratureState(0.0, 0.0, e0_2, e0_2, vacuum_scale);
}

QuadratureState make_squeezed(double vacuum_scale, double squeeze_factor)
{
    if (!std::isfinite(squeeze_factor) || squeeze_factor <= 0.0) {
        throw DomainError("squeeze factor must be finite and positive");
    }
    const double e0_2 = vacuum_scale * vacuum_scale;
    return QuadratureState(0.0, 0.0, squeeze_factor * e0_2, e0_2 / squeeze_factor, vacuum_scale);
}

namespace {

void check_setup(const BeamSplitterSetup& setup)
{
    if (!std::isfinite(setup.mean_photon_number_a) || setup.mean_photon_number_a <= 0.0) {
        throw DomainError("mean photon number in port a must be finite and positive");
    }
}

}  // namespace

double difference_variance(const BeamSplitterSetup& setup)
{
    check_setup(setup);
    const double e0 = setup.port_b.vacuum_scale();
    return setup.mean_photon_number_a * (setup.port_b.var1() / (e0 * e0));
}

double fano_factor(const BeamSplitterSetup& setup)
{
    check_setup(setup);
    const double e0 = setup.port_b.vacuum_scale();
    return setup.port_b.var1() / (e0 * e0);
}

double GaussianSampler::uniform()
{
    // (0, 1]: never 0, so the logarithm below is finite.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSampler::next()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * constants::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

MonteCarloEstimate monte_carlo_difference(const BeamSplitterSetup& setup, std::size_t trials, std::uint64_t seed)
{
    check_setup(setup);
    if (trials < kMinMonteCarloTrials) {
        throw DomainError("Monte Carlo needs at least 1000 trials, got " + std::to_string(trials));
    }
    const double e0 = setup.port_b.vacuum_scale();
    const double gain = std::sqrt(setup.mean_photon_number_a) / e0;
    const double sigma = std::sqrt(setup.port_b.var1());

    GaussianSampler sampler(seed);
    // Welford update.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const double dn = gain * sigma * sampler.next();
        const double delta = dn - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (dn - mean);
    }

    MonteCarloEstimate est;
    est.mean = mean;
    est.variance = m2 / static_cast<double>(trials - 1);
    est.fano = est.variance / setup.mean_photon_number_a;
    est.trials = trials;
    est.seed = seed;
    return est;
}

}  // namespace qvac
