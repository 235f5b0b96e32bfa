#pragma once

#include "pnconv/distribution.hpp"
#include "pnconv/point.hpp"
#include "pnconv/tnorm.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pnconv {

/// Probabilistic normed space over R^d built from a crisp norm, a generating
/// distance d.f. mu and a t-norm: nu_x(t) = mu(t / ||x||) for x != 0 and
/// nu_0 = unit step. Immutable after construction; all queries are pure.
class PNSpace {
  public:
    /// Requires mu(0) = 0 and mu distinct from the unit step.
    static PNSpace simple(std::size_t dim, DistributionFunction mu, TNorm tnorm,
                          std::function<double(const Point&)> norm = {});

    double nu(const Point& x, double t) const;
    /// Same evaluation with ||x|| already known; single code path for nu.
    double nu_from_distance(double dist, double t) const;

    double crisp_norm(const Point& x) const;
    std::size_t dim() const { return dim_; }
    const DistributionFunction& mu() const { return mu_; }
    const TNorm& tnorm() const { return tnorm_; }

  private:
    PNSpace(std::size_t dim, DistributionFunction mu, TNorm tnorm,
            std::function<double(const Point&)> norm)
        : dim_(dim), mu_(std::move(mu)), tnorm_(std::move(tnorm)), norm_(std::move(norm)) {}

    std::size_t dim_;
    DistributionFunction mu_;
    TNorm tnorm_;
    std::function<double(const Point&)> norm_;
};

PNSpace simple_space(std::size_t dim, DistributionFunction mu, TNorm tnorm);
double nu_eval(const PNSpace& space, const Point& x, double t);

/// True iff nu_{y-center}(t) > 1 - r. Requires r in (0,1) and t > 0.
bool open_ball_contains(const PNSpace& space, const Point& center, double r, double t,
                        const Point& y);

struct PnAxiomSample {
    Point x;
    Point y;
    double s = 0.0;
    double t = 0.0;
};

struct PnAxiomReport {
    AxiomCheck zero_at_origin;    // nu_x(0) = 0
    AxiomCheck identity_at_zero;  // nu_0(t) = 1 for t > 0
    AxiomCheck scaling;           // nu_{a x}(t) = nu_x(t/|a|), a taken from the sample
    AxiomCheck triangle;          // nu_{x+y}(s+t) >= T(nu_x(s), nu_y(t)) - tol
    AxiomCheck value_monotone;    // nu_x non-decreasing in t
    bool all_pass() const {
        return zero_at_origin.pass && identity_at_zero.pass && scaling.pass && triangle.pass &&
               value_monotone.pass;
    }
};

/// Samples the space axioms; the scale for the scaling identity is the
/// sample's s entry (skipped when ~0), the triangle axiom uses |s|, |t|.
PnAxiomReport check_pn_axioms(const PNSpace& space, const std::vector<PnAxiomSample>& samples,
                              double tol = 1e-12);

} // namespace pnconv
