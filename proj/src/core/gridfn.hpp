#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "fft.hpp"
#include "grid.hpp"

namespace speclab {

// A complex-valued function sampled on a Grid, stored row-major. The
// convention throughout: GridFunction holds POSITION samples; momentum
// coefficient vectors are plain std::vector<cplx> produced by spectrum()
// or fft_forward and carry the grid's mom_weight in their inner product.
class GridFunction {
public:
    explicit GridFunction(const Grid& g) : grid_(g), v_(g.size()) {}
    GridFunction(const Grid& g, std::vector<cplx> values) : grid_(g), v_(std::move(values)) {
        require(v_.size() == g.size(), errc::invalid_argument, "grid function size mismatch");
    }

    template <class Fn>
    static GridFunction from_position(const Grid& g, Fn&& fn) {
        GridFunction f(g);
        double x[Grid::max_dim];
        for (std::size_t i = 0; i < g.size(); ++i) {
            g.position(i, x);
            f.v_[i] = fn(x);
        }
        return f;
    }

    // fn gives momentum coefficients at the grid's k-nodes; the result is
    // their position-side synthesis.
    template <class Fn>
    static GridFunction from_momentum(const Grid& g, Fn&& fn) {
        std::vector<cplx> coef(g.size());
        double k[Grid::max_dim];
        for (std::size_t i = 0; i < g.size(); ++i) {
            g.momentum(i, k);
            coef[i] = fn(k);
        }
        GridFunction f(g);
        fft_inverse(g, coef.data(), f.v_.data());
        return f;
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return v_.size(); }
    cplx* data() { return v_.data(); }
    const cplx* data() const { return v_.data(); }
    std::vector<cplx>& values() { return v_; }
    const std::vector<cplx>& values() const { return v_; }
    cplx& operator[](std::size_t i) { return v_[i]; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }

    std::vector<cplx> spectrum() const {
        std::vector<cplx> out(v_.size());
        fft_forward(grid_, v_.data(), out.data());
        return out;
    }

    static GridFunction from_spectrum(const Grid& g, const std::vector<cplx>& coef) {
        require(coef.size() == g.size(), errc::invalid_argument, "spectrum size mismatch");
        GridFunction f(g);
        fft_inverse(g, coef.data(), f.v_.data());
        return f;
    }

    double norm() const {
        double s = 0.0;
        for (const cplx& z : v_) s += std::norm(z);
        return std::sqrt(grid_.quad_weight() * s);
    }

    GridFunction& operator+=(const GridFunction& o) {
        require(v_.size() == o.v_.size(), errc::invalid_argument, "size mismatch");
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    GridFunction& operator-=(const GridFunction& o) {
        require(v_.size() == o.v_.size(), errc::invalid_argument, "size mismatch");
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    GridFunction& operator*=(cplx a) {
        for (cplx& z : v_) z *= a;
        return *this;
    }

private:
    Grid grid_;
    std::vector<cplx> v_;
};

inline cplx inner(const GridFunction& f, const GridFunction& g) {
    require(f.size() == g.size(), errc::invalid_argument, "inner product size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::conj(f[i]) * g[i];
    return f.grid().quad_weight() * s;
}

// Weighted l2 helpers for raw coefficient vectors.
inline double vec_norm(const std::vector<cplx>& v, double weight) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(weight * s);
}

inline cplx vec_inner(const std::vector<cplx>& f, const std::vector<cplx>& g, double weight) {
    require(f.size() == g.size(), errc::invalid_argument, "inner product size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::conj(f[i]) * g[i];
    return weight * s;
}

} // namespace speclab
