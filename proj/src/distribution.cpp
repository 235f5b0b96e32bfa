#include "pnconv/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace pnconv {

GridDistribution::GridDistribution(std::vector<double> ts, std::vector<double> values)
    : ts_(std::move(ts)), vs_(std::move(values)) {
    if (ts_.empty()) throw std::invalid_argument("grid distribution: empty support grid");
    if (ts_.size() != vs_.size())
        throw std::invalid_argument("grid distribution: grid/value size mismatch");
    if (ts_.front() != 0.0)
        throw std::invalid_argument("grid distribution: support grid must start at 0");
    for (std::size_t i = 0; i + 1 < ts_.size(); ++i)
        if (!(ts_[i] < ts_[i + 1]))
            throw std::invalid_argument("grid distribution: support grid not strictly increasing");
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        if (!(vs_[i] >= 0.0 && vs_[i] <= 1.0))
            throw std::invalid_argument("grid distribution: value outside [0,1]");
        if (i > 0 && vs_[i] < vs_[i - 1])
            throw std::invalid_argument("grid distribution: values not non-decreasing");
    }
}

GridDistribution GridDistribution::sampled(double t_max, std::size_t points,
                                           const std::function<double(double)>& fn) {
    if (!(t_max > 0.0)) throw std::invalid_argument("grid distribution: t_max must be positive");
    if (points < 2) throw std::invalid_argument("grid distribution: need at least 2 points");
    std::vector<double> ts(points), vs(points);
    for (std::size_t i = 0; i < points; ++i) {
        ts[i] = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
        vs[i] = std::clamp(fn(ts[i]), 0.0, 1.0);
    }
    // running max guards against caller-supplied dips
    for (std::size_t i = 1; i < points; ++i) vs[i] = std::max(vs[i], vs[i - 1]);
    return GridDistribution(std::move(ts), std::move(vs));
}

GridDistribution GridDistribution::unit_step_on(std::vector<double> ts) {
    std::vector<double> vs(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = ts[i] > 0.0 ? 1.0 : 0.0;
    return GridDistribution(std::move(ts), std::move(vs));
}

double GridDistribution::eval(double t) const {
    if (t < ts_.front()) return 0.0;
    auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    return vs_[static_cast<std::size_t>(it - ts_.begin()) - 1];
}

DistributionFunction DistributionFunction::unit_step() {
    return DistributionFunction(DfKind::UnitStep, "unit-step",
                                [](double t) { return t > 0.0 ? 1.0 : 0.0; });
}

DistributionFunction DistributionFunction::saturating(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("saturating df: scale must be positive");
    return DistributionFunction(DfKind::Parametric, "t/(t+" + std::to_string(scale) + ")",
                                [scale](double t) { return t > 0.0 ? t / (t + scale) : 0.0; });
}

DistributionFunction DistributionFunction::parametric(std::function<double(double)> fn,
                                                      std::string label) {
    if (!fn) throw std::invalid_argument("parametric df: null callable");
    return DistributionFunction(DfKind::Parametric, std::move(label), std::move(fn));
}

DistributionFunction DistributionFunction::from_grid(GridDistribution g) {
    auto shared = std::make_shared<GridDistribution>(std::move(g));
    return DistributionFunction(DfKind::GridSampled, "grid[" + std::to_string(shared->size()) + "]",
                                [shared](double t) { return shared->eval(t); });
}

double DistributionFunction::operator()(double t) const {
    if (t == std::numeric_limits<double>::infinity()) return 1.0;
    if (t == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::clamp(fn_(t), 0.0, 1.0);
}

double df_eval(const DistributionFunction& f, double t) { return f(t); }

double max_monotonicity_violation(const DistributionFunction& f, const std::vector<double>& ts) {
    std::vector<double> sorted = ts;
    std::sort(sorted.begin(), sorted.end());
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        worst = std::max(worst, f(sorted[i]) - f(sorted[i + 1]));
    return worst;
}

} // namespace pnconv
