#pragma once

#include <complex>
#include <vector>

#include "grid.hpp"

namespace speclab {

using cplx = std::complex<double>;

// Unitary transforms between position samples and momentum coefficients,
// both stored row-major over the grid's index space.
//
// forward:  out[s] = (2 pi)^{-dim/2} h^dim  sum_m in[m] exp(-i k_s . x_m)
// inverse:  out[m] = (2 pi)^{-dim/2} dk^dim sum_s in[s] exp(+i k_s . x_m)
//
// Momentum storage is in ascending node order per axis (s = 0 is -kmax).
// With quadrature weights h^dim / dk^dim these maps are mutually inverse
// and preserve inner products exactly (h * dk = 2 pi / N per axis).
void fft_forward(const Grid& g, const cplx* in, cplx* out);
void fft_inverse(const Grid& g, const cplx* in, cplx* out);

void fft_forward(const Grid& g, const std::vector<cplx>& in, std::vector<cplx>& out);
void fft_inverse(const Grid& g, const std::vector<cplx>& in, std::vector<cplx>& out);

} // namespace speclab
