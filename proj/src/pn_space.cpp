#include "pnconv/pn_space.hpp"

#include <cmath>
#include <stdexcept>

namespace pnconv {

PNSpace PNSpace::simple(std::size_t dim, DistributionFunction mu, TNorm tnorm,
                        std::function<double(const Point&)> norm) {
    if (dim < 1) throw std::invalid_argument("simple space: dimension must be >= 1");
    if (mu.kind() == DfKind::UnitStep)
        throw std::invalid_argument("simple space: mu must differ from the unit step");
    if (mu(0.0) != 0.0)
        throw std::invalid_argument("simple space: mu(0) must be 0");
    if (!norm) norm = [](const Point& p) { return euclidean_norm(p); };
    return PNSpace(dim, std::move(mu), std::move(tnorm), std::move(norm));
}

double PNSpace::crisp_norm(const Point& x) const {
    if (x.dim() != dim_)
        throw std::invalid_argument("crisp_norm: point dimension " + std::to_string(x.dim()) +
                                    " does not match space dimension " + std::to_string(dim_));
    return norm_(x);
}

double PNSpace::nu_from_distance(double dist, double t) const {
    if (dist == 0.0) return t > 0.0 ? 1.0 : 0.0;
    return mu_(t / dist);
}

double PNSpace::nu(const Point& x, double t) const { return nu_from_distance(crisp_norm(x), t); }

PNSpace simple_space(std::size_t dim, DistributionFunction mu, TNorm tnorm) {
    return PNSpace::simple(dim, std::move(mu), std::move(tnorm));
}

double nu_eval(const PNSpace& space, const Point& x, double t) { return space.nu(x, t); }

bool open_ball_contains(const PNSpace& space, const Point& center, double r, double t,
                        const Point& y) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("open ball: radius must lie in (0,1)");
    if (!(t > 0.0)) throw std::domain_error("open ball: t must be positive");
    return space.nu(y - center, t) > 1.0 - r;
}

PnAxiomReport check_pn_axioms(const PNSpace& space, const std::vector<PnAxiomSample>& samples,
                              double tol) {
    if (samples.empty()) throw std::invalid_argument("check_pn_axioms: no samples");

    PnAxiomReport rep;
    rep.zero_at_origin.name = "i: nu_x(0) = 0";
    rep.identity_at_zero.name = "ii: nu_0(t) = 1 for t > 0";
    rep.scaling.name = "iii: nu_{a x}(t) = nu_x(t/|a|)";
    rep.triangle.name = "iv: nu_{x+y}(s+t) >= T(nu_x(s), nu_y(t))";
    rep.value_monotone.name = "nu_x non-decreasing in t";

    auto note = [](AxiomCheck& ax, double dev, double w0, double w1, double w2, double tol_) {
        if (dev > ax.worst_deviation) {
            ax.worst_deviation = dev;
            ax.witness = {w0, w1, w2};
        }
        if (dev > tol_) ax.pass = false;
    };

    const Point origin = Point::zero(space.dim());
    for (const auto& sm : samples) {
        const double s = std::fabs(sm.s), t = std::fabs(sm.t);

        note(rep.zero_at_origin, std::fabs(space.nu(sm.x, 0.0)), space.crisp_norm(sm.x), 0.0, 0.0,
             0.0);

        const double tpos = std::max(std::max(s, t), 1e-9);
        note(rep.identity_at_zero, std::fabs(space.nu(origin, tpos) - 1.0), tpos, 0.0, 0.0, 0.0);

        if (std::fabs(sm.s) > 1e-9) {
            const double a = sm.s;
            const double lhs = space.nu(a * sm.x, sm.t);
            const double rhs = space.nu(sm.x, sm.t / std::fabs(a));
            note(rep.scaling, std::fabs(lhs - rhs), a, sm.t, space.crisp_norm(sm.x), tol);
        }

        const double lhs = space.nu(sm.x + sm.y, s + t);
        const double rhs = space.tnorm()(space.nu(sm.x, s), space.nu(sm.y, t));
        note(rep.triangle, std::max(0.0, rhs - lhs), s, t, space.crisp_norm(sm.x + sm.y), tol);

        const double lo = std::min(s, t), hi = std::max(s, t);
        note(rep.value_monotone, std::max(0.0, space.nu(sm.x, lo) - space.nu(sm.x, hi)), lo, hi,
             space.crisp_norm(sm.x), 0.0);
    }
    return rep;
}

} // namespace pnconv
