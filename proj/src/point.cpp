#include "pnconv/point.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pnconv {

namespace {
void require_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("point dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
}
} // namespace

Point operator+(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
    return r;
}

Point operator-(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
    return r;
}

Point operator*(double a, const Point& x) {
    Point r = x;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] *= a;
    return r;
}

double euclidean_norm(const Point& x) {
    double s = 0.0;
    for (double c : x.coords) s += c * c;
    return std::sqrt(s);
}

double distance(const Point& a, const Point& b) { return euclidean_norm(a - b); }

bool all_finite(const Point& x) {
    for (double c : x.coords)
        if (!std::isfinite(c)) return false;
    return true;
}

std::string to_string(const Point& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (i) os << ", ";
        os << x[i];
    }
    os << ')';
    return os.str();
}

} // namespace pnconv
