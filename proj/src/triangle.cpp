#include "pnconv/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pnconv {

GridDistribution triangle_eval(TriangleKind kind, const GridDistribution& f,
                               const GridDistribution& g, const TNorm& t, double* max_repair) {
    if (f.grid() != g.grid())
        throw std::invalid_argument("triangle_eval: operands must share a support grid");
    if (!f.is_distance_df() || !g.is_distance_df())
        throw std::domain_error("triangle_eval: operands must vanish at t = 0");

    const auto& fv = f.values();
    const auto& gv = g.values();
    const std::size_t n = fv.size();
    std::vector<double> raw(n, 0.0);

    switch (kind) {
        case TriangleKind::SupConv:
            for (std::size_t i = 0; i < n; ++i) {
                double best = 0.0;
                for (std::size_t j = 0; j <= i; ++j) best = std::max(best, t(fv[j], gv[i - j]));
                raw[i] = best;
            }
            break;
        case TriangleKind::InfConvDual:
            for (std::size_t i = 0; i < n; ++i) {
                double best = 1.0;
                for (std::size_t j = 0; j <= i; ++j)
                    best = std::min(best, tconorm_eval(t, fv[j], gv[i - j]));
                raw[i] = best;
            }
            break;
        case TriangleKind::Pointwise:
            for (std::size_t i = 0; i < n; ++i) raw[i] = t(fv[i], gv[i]);
            break;
    }

    double repair = 0.0;
    std::vector<double> vs = raw;
    for (std::size_t i = 1; i < n; ++i) {
        if (vs[i] < vs[i - 1]) {
            repair = std::max(repair, vs[i - 1] - vs[i]);
            vs[i] = vs[i - 1];
        }
    }
    if (max_repair) *max_repair = repair;
    return GridDistribution(f.grid(), std::move(vs));
}

} // namespace pnconv
