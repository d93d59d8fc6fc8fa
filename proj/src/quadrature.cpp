#include "qvac/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "qvac/constants.hpp"

namespace qvac::quadrature {

namespace {

constexpr std::size_t kOrder = 16;
constexpr std::size_t kInitialPanels = 4;

struct Rule {
    std::array<double, kOrder> nodes{};
    std::array<double, kOrder> weights{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
Rule make_rule()
{
    Rule rule;
    const auto n = static_cast<int>(kOrder);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const Rule& rule()
{
    static const Rule r = make_rule();
    return r;
}

double apply_rule(const Integrand& f, double a, double b)
{
    const Rule& r = rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    CompensatedSum sum;
    for (std::size_t i = 0; i < kOrder; ++i) {
        sum.add(r.weights[i] * f(mid + half * r.nodes[i]));
    }
    return half * sum.value();
}

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double left = 0.0;   // rule on [a, mid]
    double right = 0.0;  // rule on [mid, b]
    double error = 0.0;
    double value() const { return left + right; }
};

Panel make_panel(const Integrand& f, double a, double b, double whole, std::size_t& evaluations)
{
    Panel p;
    p.a = a;
    p.b = b;
    const double mid = 0.5 * (a + b);
    p.left = apply_rule(f, a, mid);
    p.right = apply_rule(f, mid, b);
    p.error = std::abs(whole - p.value());
    evaluations += 2 * kOrder;
    return p;
}

}  // namespace

double Estimate::relative_error() const
{
    if (value == 0.0) {
        return error == 0.0 ? 0.0 : INFINITY;
    }
    return error / std::abs(value);
}

void CompensatedSum::add(double x)
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

Estimate integrate(const Integrand& f, double a, double b, const Tolerance& tol)
{
    Estimate est;
    if (a == b) {
        est.converged = true;
        return est;
    }

    std::vector<Panel> panels;
    panels.reserve(std::min<std::size_t>(tol.max_panels, 256));
    const double width = (b - a) / kInitialPanels;
    for (std::size_t i = 0; i < kInitialPanels; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = (i + 1 == kInitialPanels) ? b : a + width * static_cast<double>(i + 1);
        const double whole = apply_rule(f, lo, hi);
        est.evaluations += kOrder;
        panels.push_back(make_panel(f, lo, hi, whole, est.evaluations));
    }

    auto totals = [&panels]() {
        CompensatedSum value;
        CompensatedSum error;
        for (const Panel& p : panels) {
            value.add(p.value());
            error.add(p.error);
        }
        return std::pair{value.value(), error.value()};
    };

    for (;;) {
        const auto [value, error] = totals();
        // Differences below a few ulps of the panel sums are rounding, not truncation.
        const double floor = 64.0 * 2.220446049250313e-16 * std::abs(value);
        if (error <= std::max({tol.absolute, tol.relative * std::abs(value), floor})) {
            est.converged = true;
            break;
        }
        if (panels.size() >= tol.max_panels) {
            break;
        }
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& x, const Panel& y) { return x.error < y.error; });
        const Panel parent = *worst;
        const double mid = 0.5 * (parent.a + parent.b);
        if (!(mid > parent.a && mid < parent.b)) {
            break;  // panel no longer divisible in floating point
        }
        *worst = make_panel(f, parent.a, mid, parent.left, est.evaluations);
        panels.push_back(make_panel(f, mid, parent.b, parent.right, est.evaluations));
    }

    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    CompensatedSum value;
    CompensatedSum error;
    for (const Panel& p : panels) {
        value.add(p.value());
        error.add(p.error);
    }
    est.value = value.value();
    est.error = error.value();
    est.panels = panels.size();
    return est;
}

Estimate integrate_to_infinity(const Integrand& f, double a, const Tolerance& tol)
{
    const Integrand mapped = [&f, a](double x) {
        const double one_minus = 1.0 - x;
        const double u = a + x / one_minus;
        const double value = f(u);
        if (value == 0.0) {
            return 0.0;
        }
        return value / (one_minus * one_minus);
    };
    return integrate(mapped, 0.0, 1.0, tol);
}

}  // namespace qvac::quadrature
