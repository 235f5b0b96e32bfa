#include "pnconv/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pnconv {

namespace {
void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::domain_error(std::string("t-norm argument outside [0,1]: ") + what + " = " +
                                std::to_string(v));
}
} // namespace

TNorm TNorm::minimum() {
    return TNorm(Kind::Min, "min", [](double s, double t) { return std::min(s, t); });
}

TNorm TNorm::product() {
    return TNorm(Kind::Product, "product", [](double s, double t) { return s * t; });
}

TNorm TNorm::custom(std::function<double(double, double)> fn, std::string label) {
    if (!fn) throw std::invalid_argument("custom t-norm: null callable");
    return TNorm(Kind::Custom, std::move(label), std::move(fn));
}

double TNorm::operator()(double s, double t) const {
    require_unit(s, "s");
    require_unit(t, "t");
    return fn_(s, t);
}

double tnorm_eval(const TNorm& t, double s, double u) { return t(s, u); }

double tconorm_eval(const TNorm& t, double s, double u) {
    require_unit(s, "s");
    require_unit(u, "t");
    return 1.0 - t(1.0 - s, 1.0 - u);
}

TNormAxiomReport check_tnorm_axioms(const TNorm& t,
                                    const std::vector<std::array<double, 3>>& samples) {
    if (samples.empty()) throw std::invalid_argument("check_tnorm_axioms: no samples");

    TNormAxiomReport rep;
    rep.commutativity.name = "T1 commutativity";
    rep.associativity.name = "T2 associativity";
    rep.monotonicity.name = "T3 monotonicity";
    rep.boundary.name = "T4 unit";

    auto note = [](AxiomCheck& ax, double dev, const std::array<double, 3>& w) {
        if (dev > ax.worst_deviation) {
            ax.worst_deviation = dev;
            ax.witness = w;
        }
        if (dev > 0.0) ax.pass = false;
    };

    for (const auto& [s, u, v] : samples) {
        note(rep.commutativity, std::fabs(t(s, u) - t(u, s)), {s, u, 0.0});
        note(rep.associativity, std::fabs(t(t(s, u), v) - t(s, t(u, v))), {s, u, v});
        const double lo = std::min(s, v), hi = std::max(s, v);
        note(rep.monotonicity, std::max(0.0, t(lo, u) - t(hi, u)), {lo, hi, u});
        note(rep.boundary, std::fabs(t(1.0, u) - u), {1.0, u, 0.0});
    }
    return rep;
}

std::vector<double> dyadic_unit_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 16; ++i) g.push_back(i / 16.0);
    for (int i : {1, 3, 5, 7}) g.push_back(i / 32.0);
    std::sort(g.begin(), g.end());
    return g;
}

} // namespace pnconv
