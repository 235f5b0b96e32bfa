#pragma once

#include "pnconv/point.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace pnconv {

/// Pure deterministic sequence k -> Point (k >= 1): the same index always
/// yields the same value, so scans may be repeated or parallelized freely.
class SequenceSource {
  public:
    SequenceSource(std::size_t dim, std::string label, std::function<Point(std::int64_t)> gen);

    Point at(std::int64_t k) const;
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }

  private:
    std::size_t dim_;
    std::string label_;
    std::function<Point(std::int64_t)> gen_;
};

/// 1 at perfect squares, 0 elsewhere (dimension 1).
SequenceSource square_indicator_sequence();
SequenceSource constant_sequence(Point value);
/// (-1)^k in dimension 1.
SequenceSource alternating_sequence();
/// (1/k, 0, ..., 0).
SequenceSource reciprocal_sequence(std::size_t dim = 1);
/// k -> k as a scalar point (unbounded).
SequenceSource identity_sequence();

/// k -> a x_k + b y_k; dimension mismatch is an error.
SequenceSource linear_combination(double a, const SequenceSource& x, double b,
                                  const SequenceSource& y);

} // namespace pnconv
