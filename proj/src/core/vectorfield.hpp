#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "grid.hpp"

namespace speclab {

// Symbol u defining the conjugate operator A_u. Components act
// coordinate-wise or radially; closed-form divergence is carried along so
// flows integrate det-Jacobians without finite differences.
//
// All kinds except dilation are bounded with bounded derivatives and
// satisfy x.u(x) > 0 away from 0 (the admissible class); dilation
// (u(x) = x) is kept for the negative diagnostics that need it.
class VectorField {
public:
    enum class Kind { nakamura, dilation, arctan_field, normalized, decay, custom };

    static VectorField nakamura(double a);
    static VectorField dilation();
    static VectorField arctan_field();
    static VectorField normalized();
    static VectorField decay(double nu);
    static VectorField custom(std::string name,
                              std::function<void(const double*, int, double*)> eval,
                              std::function<double(const double*, int)> divergence, double sup_u,
                              double sup_du);

    void eval(const double* x, int dim, double* u) const { eval_(x, dim, u); }
    double divergence(const double* x, int dim) const { return div_(x, dim); }

    double eval1(double x) const {
        double u;
        eval_(&x, 1, &u);
        return u;
    }

    // Componentwise sup bounds; infinite for dilation.
    double sup_u() const { return sup_u_; }
    double sup_du() const { return sup_du_; }
    bool bounded() const { return std::isfinite(sup_u_); }

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    const std::string& name() const { return name_; }

private:
    VectorField() = default;

    Kind kind_ = Kind::custom;
    double param_ = 0.0;
    std::string name_;
    std::function<void(const double*, int, double*)> eval_;
    std::function<double(const double*, int)> div_;
    double sup_u_ = 0.0;
    double sup_du_ = 0.0;
};

// Parse "nakamura:a", "dilation", "arctan", "normalized", "decay:nu".
VectorField vector_field_by_name(const std::string& text);

} // namespace speclab
