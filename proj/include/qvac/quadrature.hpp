#pragma once

#include <cstddef>
#include <functional>

namespace qvac::quadrature {

struct Tolerance {
    double relative = 1e-10;
    double absolute = 0.0;
    std::size_t max_panels = 4000;
};

struct Estimate {
    double value = 0.0;
    double error = 0.0;  // absolute error bound from whole-vs-halves panel comparison
    std::size_t panels = 0;
    std::size_t evaluations = 0;
    bool converged = false;

    double relative_error() const;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 16-point Gauss-Legendre on [a, b]. Each panel is compared with the sum
// over its two halves; the panel with the largest discrepancy is bisected until the summed
// discrepancy meets the tolerance or max_panels is reached. Panels are summed in order of
// their left endpoint, so the result is independent of the refinement history.
Estimate integrate(const Integrand& f, double a, double b, const Tolerance& tol = {});

// Integral over [a, inf) after the map u = a + x / (1 - x), x in [0, 1).
Estimate integrate_to_infinity(const Integrand& f, double a, const Tolerance& tol = {});

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace qvac::quadrature
