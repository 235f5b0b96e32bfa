#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pnconv {

/// Element of a finite-dimensional real vector space.
struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c) : coords(c) {}

    static Point zero(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const Point& o) const { return coords == o.coords; }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double a, const Point& x);

double euclidean_norm(const Point& x);
double distance(const Point& a, const Point& b);
bool all_finite(const Point& x);
std::string to_string(const Point& x);

} // namespace pnconv
