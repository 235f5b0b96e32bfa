#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace pnconv {

/// Triangular norm: binary operation on [0,1] that is commutative, associative,
/// monotone in each argument and has unit 1. Built-ins are minimum and product.
class TNorm {
  public:
    enum class Kind { Min, Product, Custom };

    static TNorm minimum();
    static TNorm product();
    static TNorm custom(std::function<double(double, double)> fn, std::string label);

    /// Throws std::domain_error when an argument is outside [0,1].
    double operator()(double s, double t) const;

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }

  private:
    TNorm(Kind kind, std::string label, std::function<double(double, double)> fn)
        : kind_(kind), label_(std::move(label)), fn_(std::move(fn)) {}

    Kind kind_;
    std::string label_;
    std::function<double(double, double)> fn_;
};

double tnorm_eval(const TNorm& t, double s, double u);
/// De Morgan dual: 1 - T(1-s, 1-t).
double tconorm_eval(const TNorm& t, double s, double u);

struct AxiomCheck {
    std::string name;
    bool pass = true;
    double worst_deviation = 0.0;
    std::array<double, 3> witness{0.0, 0.0, 0.0};
};

struct TNormAxiomReport {
    AxiomCheck commutativity;  // T(s,t) = T(t,s)
    AxiomCheck associativity;  // T(T(s,t),u) = T(s,T(t,u))
    AxiomCheck monotonicity;   // s <= s' implies T(s,t) <= T(s',t)
    AxiomCheck boundary;       // T(1,t) = t
    bool all_pass() const {
        return commutativity.pass && associativity.pass && monotonicity.pass && boundary.pass;
    }
};

/// Evaluates the four t-norm axioms on the sampled triples (exact for the
/// built-in norms). Throws std::invalid_argument when samples is empty.
TNormAxiomReport check_tnorm_axioms(const TNorm& t,
                                    const std::vector<std::array<double, 3>>& samples);

/// 21 dyadic abscissae in [0,1]; products of triples are float-exact on it.
std::vector<double> dyadic_unit_grid();

} // namespace pnconv
