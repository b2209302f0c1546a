#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "common.hpp"

namespace speclab {

// Periodic tensor grid on [-L, L)^dim with N nodes per axis.
//
// Position nodes:  x_m = -L + m h + offset,  h = 2L/N,  m = 0..N-1.
// Momentum nodes:  k_s = (s - N/2) dk,       dk = pi/L, s = 0..N-1 (ascending).
// The default offset h/2 keeps coordinate singularities (1/x factors) off
// the nodes. Quadrature weights are h^dim in position and dk^dim in
// momentum; the two transforms defined in fft.hpp are unitary for these
// weights.
class Grid {
public:
    static constexpr int max_dim = 3;

    Grid(int dim, int n, double half_width, double offset);

    // offset < 0 selects the default h/2.
    static Grid make(int dim, int n, double half_width, double offset = -1.0);

    int dim() const { return dim_; }
    int n() const { return n_; }
    std::size_t size() const { return size_; }
    double half_width() const { return half_width_; }
    double offset() const { return offset_; }
    double spacing() const { return h_; }
    double dk() const { return dk_; }
    // Edge of the resolved momentum band; nodes cover [-kmax, kmax - dk].
    double kmax() const { return dk_ * (n_ / 2); }

    double x(int m) const { return -half_width_ + m * h_ + offset_; }
    double k(int s) const { return (s - n_ / 2) * dk_; }

    double quad_weight() const { return qw_; }
    double mom_weight() const { return mw_; }

    void unravel(std::size_t idx, int* mi) const {
        for (int d = dim_ - 1; d >= 0; --d) {
            mi[d] = static_cast<int>(idx % n_);
            idx /= n_;
        }
    }

    std::size_t ravel(const int* mi) const {
        std::size_t idx = 0;
        for (int d = 0; d < dim_; ++d) idx = idx * n_ + mi[d];
        return idx;
    }

    void position(std::size_t idx, double* out) const {
        int mi[max_dim];
        unravel(idx, mi);
        for (int d = 0; d < dim_; ++d) out[d] = x(mi[d]);
    }

    void momentum(std::size_t idx, double* out) const {
        int mi[max_dim];
        unravel(idx, mi);
        for (int d = 0; d < dim_; ++d) out[d] = k(mi[d]);
    }

    bool same_shape(const Grid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && half_width_ == o.half_width_ && offset_ == o.offset_;
    }

    std::string signature() const;

private:
    int dim_;
    int n_;
    double half_width_;
    double offset_;
    double h_;
    double dk_;
    double qw_;
    double mw_;
    std::size_t size_;
};

} // namespace speclab
