#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pnconv {

/// Distribution function sampled on a finite support grid t_0 = 0 < t_1 < ... < t_m.
/// Values are non-decreasing and contained in [0, 1].
class GridDistribution {
  public:
    GridDistribution(std::vector<double> ts, std::vector<double> values);

    /// Sample fn on `points` equally spaced abscissae over [0, t_max].
    static GridDistribution sampled(double t_max, std::size_t points,
                                    const std::function<double(double)>& fn);
    /// Unit step at zero restricted to `ts`.
    static GridDistribution unit_step_on(std::vector<double> ts);

    /// Step evaluation: value at the largest grid point <= t, 0 below the grid.
    double eval(double t) const;

    const std::vector<double>& grid() const { return ts_; }
    const std::vector<double>& values() const { return vs_; }
    std::size_t size() const { return ts_.size(); }
    bool is_distance_df() const { return vs_.front() == 0.0; }

  private:
    std::vector<double> ts_;
    std::vector<double> vs_;
};

enum class DfKind { UnitStep, Parametric, GridSampled };

/// Evaluable non-decreasing map from the extended reals into [0, 1].
///
/// Evaluation pins F(-inf) = 0 and F(+inf) = 1 and clamps into [0, 1].
/// Left-continuity is a modeling assumption only: it is not observable from
/// pointwise samples and is not enforced here. Monotonicity is checkable on
/// sampled grids via max_monotonicity_violation.
class DistributionFunction {
  public:
    /// Unit step at zero: 0 for t <= 0, 1 for t > 0.
    static DistributionFunction unit_step();
    /// t / (t + scale) for t > 0, 0 otherwise. Requires scale > 0.
    static DistributionFunction saturating(double scale = 1.0);
    static DistributionFunction parametric(std::function<double(double)> fn, std::string label);
    static DistributionFunction from_grid(GridDistribution g);

    double operator()(double t) const;

    DfKind kind() const { return kind_; }
    const std::string& label() const { return label_; }

  private:
    DistributionFunction(DfKind kind, std::string label, std::function<double(double)> fn)
        : kind_(kind), label_(std::move(label)), fn_(std::move(fn)) {}

    DfKind kind_;
    std::string label_;
    std::function<double(double)> fn_;
};

double df_eval(const DistributionFunction& f, double t);

/// Largest drop F(t_i) - F(t_j) over sampled pairs t_i < t_j (0 when monotone).
double max_monotonicity_violation(const DistributionFunction& f, const std::vector<double>& ts);

} // namespace pnconv
