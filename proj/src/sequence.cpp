#include "pnconv/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace pnconv {

SequenceSource::SequenceSource(std::size_t dim, std::string label,
                               std::function<Point(std::int64_t)> gen)
    : dim_(dim), label_(std::move(label)), gen_(std::move(gen)) {
    if (dim_ < 1) throw std::invalid_argument("sequence source: dimension must be >= 1");
    if (!gen_) throw std::invalid_argument("sequence source: null generator");
}

Point SequenceSource::at(std::int64_t k) const {
    if (k < 1) throw std::domain_error("sequence source: index must be >= 1");
    return gen_(k);
}

namespace {
bool is_perfect_square(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}
} // namespace

SequenceSource square_indicator_sequence() {
    return SequenceSource(1, "indicator-of-squares", [](std::int64_t k) {
        return Point{is_perfect_square(k) ? 1.0 : 0.0};
    });
}

SequenceSource constant_sequence(Point value) {
    auto dim = value.dim();
    return SequenceSource(dim, "constant " + to_string(value),
                          [v = std::move(value)](std::int64_t) { return v; });
}

SequenceSource alternating_sequence() {
    return SequenceSource(1, "alternating",
                          [](std::int64_t k) { return Point{k % 2 == 0 ? 1.0 : -1.0}; });
}

SequenceSource reciprocal_sequence(std::size_t dim) {
    return SequenceSource(dim, "reciprocal", [dim](std::int64_t k) {
        Point p = Point::zero(dim);
        p[0] = 1.0 / static_cast<double>(k);
        return p;
    });
}

SequenceSource identity_sequence() {
    return SequenceSource(1, "identity",
                          [](std::int64_t k) { return Point{static_cast<double>(k)}; });
}

SequenceSource linear_combination(double a, const SequenceSource& x, double b,
                                  const SequenceSource& y) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("linear combination: sequence dimensions differ");
    return SequenceSource(x.dim(),
                          std::to_string(a) + "*(" + x.label() + ") + " + std::to_string(b) +
                              "*(" + y.label() + ")",
                          [a, x, b, y](std::int64_t k) { return a * x.at(k) + b * y.at(k); });
}

} // namespace pnconv
