#pragma once

#include "pnconv/pn_space.hpp"
#include "pnconv/point.hpp"
#include "pnconv/sequence.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pnconv {

struct SchemeDescriptor {
    enum class Kind { Geometric, Polynomial, Explicit };
    Kind kind = Kind::Geometric;
    double c = 1.0;
    double rho = 2.0;
    int p = 2;
    std::vector<std::int64_t> ks;  // explicit prefix, must start at 0
};

/// Lacunary scheme: strictly increasing block boundaries k_0 = 0 < k_1 < ...
/// with blocks J_r = (k_{r-1}, k_r] and widths h_r = k_r - k_{r-1}.
///
/// Width growth (h_r -> infinity) is not decidable from a prefix. For closed
/// forms the constructor checks, on the validation horizon, that widths are
/// non-decreasing past an initial irregular segment confined to the first
/// half, and that h_R > h_1 witnesses growth. Explicit lists only get the
/// monotonicity checks; their asymptotics are recorded as asserted by the
/// caller. Closed forms extend on demand; explicit lists fail past their end.
class LacunaryScheme {
  public:
    static LacunaryScheme geometric(double rho, double c = 1.0,
                                    std::int64_t validation_horizon = 20);
    static LacunaryScheme polynomial(int p, std::int64_t validation_horizon = 20);
    static LacunaryScheme explicit_list(std::vector<std::int64_t> ks);

    std::int64_t k(std::int64_t r) const;
    std::int64_t h(std::int64_t r) const;
    /// Half-open-below integer range (k_{r-1}, k_r]; requires r >= 1.
    std::pair<std::int64_t, std::int64_t> block_range(std::int64_t r) const;
    /// Block index r with index in J_r, or -1 when past an explicit prefix.
    std::int64_t block_of(std::int64_t index) const;

    bool closed_form() const;
    bool asymptotics_asserted() const;
    std::int64_t max_block() const;  // explicit lists: last usable r; closed forms: unbounded (-1)
    const std::string& label() const;

  private:
    struct State;
    explicit LacunaryScheme(std::shared_ptr<State> st) : st_(std::move(st)) {}
    std::shared_ptr<State> st_;
};

LacunaryScheme make_scheme(const SchemeDescriptor& d);

/// Mean of nu_{x_k - L}(eps) over J_r, clamped into the block's value range so
/// the block maximum always dominates the mean under rounding.
double block_average(const SequenceSource& seq, const PNSpace& space, const LacunaryScheme& theta,
                     std::int64_t r, const Point& L, double eps);

} // namespace pnconv
