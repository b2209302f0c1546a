#include "vectorfield.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "common.hpp"

namespace speclab {

namespace {

double norm1p(const double* x, int dim) {
    double s = 1.0;
    for (int d = 0; d < dim; ++d) s += x[d] * x[d];
    return std::sqrt(s);
}

} // namespace

VectorField VectorField::nakamura(double a) {
    require(a > 0.0, errc::invalid_argument, "nakamura parameter must be positive");
    VectorField f;
    f.kind_ = Kind::nakamura;
    f.param_ = a;
    std::ostringstream os;
    os << "nakamura:" << a;
    f.name_ = os.str();
    f.eval_ = [a](const double* x, int dim, double* u) {
        for (int d = 0; d < dim; ++d) u[d] = std::sin(a * x[d]);
    };
    f.div_ = [a](const double* x, int dim) {
        double s = 0.0;
        for (int d = 0; d < dim; ++d) s += a * std::cos(a * x[d]);
        return s;
    };
    f.sup_u_ = 1.0;
    f.sup_du_ = a;
    return f;
}

VectorField VectorField::dilation() {
    VectorField f;
    f.kind_ = Kind::dilation;
    f.name_ = "dilation";
    f.eval_ = [](const double* x, int dim, double* u) {
        for (int d = 0; d < dim; ++d) u[d] = x[d];
    };
    f.div_ = [](const double*, int dim) { return static_cast<double>(dim); };
    f.sup_u_ = std::numeric_limits<double>::infinity();
    f.sup_du_ = 1.0;
    return f;
}

VectorField VectorField::arctan_field() {
    VectorField f;
    f.kind_ = Kind::arctan_field;
    f.name_ = "arctan";
    f.eval_ = [](const double* x, int dim, double* u) {
        for (int d = 0; d < dim; ++d) u[d] = std::atan(x[d]);
    };
    f.div_ = [](const double* x, int dim) {
        double s = 0.0;
        for (int d = 0; d < dim; ++d) s += 1.0 / (1.0 + x[d] * x[d]);
        return s;
    };
    f.sup_u_ = M_PI / 2.0;
    f.sup_du_ = 1.0;
    return f;
}

VectorField VectorField::normalized() {
    VectorField f;
    f.kind_ = Kind::normalized;
    f.name_ = "normalized";
    f.eval_ = [](const double* x, int dim, double* u) {
        double w = norm1p(x, dim);
        for (int d = 0; d < dim; ++d) u[d] = x[d] / w;
    };
    f.div_ = [](const double* x, int dim) {
        double w = norm1p(x, dim);
        double r2 = w * w - 1.0;
        return (dim + (dim - 1) * r2) / (w * w * w);
    };
    f.sup_u_ = 1.0;
    f.sup_du_ = 1.0;
    return f;
}

VectorField VectorField::decay(double nu) {
    require(nu > 0.0, errc::invalid_argument, "decay exponent must be positive");
    VectorField f;
    f.kind_ = Kind::decay;
    f.param_ = nu;
    std::ostringstream os;
    os << "decay:" << nu;
    f.name_ = os.str();
    const double q = nu + 1.0;
    f.eval_ = [q](const double* x, int dim, double* u) {
        double w = norm1p(x, dim);
        double s = std::pow(w, -q);
        for (int d = 0; d < dim; ++d) u[d] = x[d] * s;
    };
    f.div_ = [q](const double* x, int dim) {
        double w = norm1p(x, dim);
        double r2 = w * w - 1.0;
        return dim * std::pow(w, -q) - q * r2 * std::pow(w, -q - 2.0);
    };
    // |u| = r<r>^-q maximized near r = 1/sqrt(q); crude safe bounds
    f.sup_u_ = 1.0;
    f.sup_du_ = q + 1.0;
    return f;
}

VectorField VectorField::custom(std::string name,
                                std::function<void(const double*, int, double*)> eval,
                                std::function<double(const double*, int)> divergence, double sup_u,
                                double sup_du) {
    VectorField f;
    f.kind_ = Kind::custom;
    f.name_ = std::move(name);
    f.eval_ = std::move(eval);
    f.div_ = std::move(divergence);
    f.sup_u_ = sup_u;
    f.sup_du_ = sup_du;
    return f;
}

VectorField vector_field_by_name(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    double value = 0.0;
    bool has_value = colon != std::string::npos;
    if (has_value) {
        try {
            value = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            fail(errc::invalid_argument, "bad vector-field parameter in '" + text + "'");
        }
    }
    if (head == "nakamura") return VectorField::nakamura(has_value ? value : 1.0);
    if (head == "dilation") return VectorField::dilation();
    if (head == "arctan") return VectorField::arctan_field();
    if (head == "normalized") return VectorField::normalized();
    if (head == "decay") return VectorField::decay(has_value ? value : 2.0);
    fail(errc::invalid_argument, "unknown vector field '" + text + "'");
}

} // namespace speclab
