#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace speclab {

namespace {

// Plan creation is not thread-safe; new-array execution is. Plans are made
// once per (dim, n, sign) on scratch buffers and reused on caller memory,
// so every plan carries FFTW_UNALIGNED.
class PlanCache {
public:
    fftw_plan get(int dim, int n, int sign) {
        std::scoped_lock lk(mu_);
        auto key = std::make_tuple(dim, n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::size_t total = 1;
        int dims[Grid::max_dim];
        for (int d = 0; d < dim; ++d) {
            dims[d] = n;
            total *= static_cast<std::size_t>(n);
        }
        auto* a = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
        auto* b = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
        require(a && b, errc::size_cap_exceeded, "fft scratch allocation failed");
        fftw_plan p = fftw_plan_dft(dim, dims, a, b, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(a);
        fftw_free(b);
        require(p != nullptr, errc::no_convergence, "fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(fftw_plan p, const cplx* in, cplx* out) {
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

// phase[s] = exp(i pi (s - N/2) (1 - offset/L)) for one axis. The (-1)^n
// part re-centers the DFT onto x in [-L, L); the offset part shifts the
// sample comb off the cell boundaries.
std::vector<cplx> axis_phase(const Grid& g) {
    std::vector<cplx> phase(g.n());
    double c = 1.0 - g.offset() / g.half_width();
    for (int s = 0; s < g.n(); ++s) {
        double arg = M_PI * (s - g.n() / 2) * c;
        phase[s] = cplx(std::cos(arg), std::sin(arg));
    }
    return phase;
}

} // namespace

void fft_forward(const Grid& g, const cplx* in, cplx* out) {
    require(in != out, errc::invalid_argument, "fft buffers must be distinct");
    std::vector<cplx> tmp(g.size());
    execute(cache().get(g.dim(), g.n(), FFTW_FORWARD), in, tmp.data());

    const auto phase = axis_phase(g);
    double scale = std::pow(g.spacing() / std::sqrt(2.0 * M_PI), g.dim());
    const int half = g.n() / 2;
    int mi[Grid::max_dim];
    int ji[Grid::max_dim];
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        g.unravel(idx, mi);
        cplx ph = scale;
        for (int d = 0; d < g.dim(); ++d) {
            ji[d] = (mi[d] + half) % g.n();
            ph *= phase[mi[d]];
        }
        out[idx] = ph * tmp[g.ravel(ji)];
    }
}

void fft_inverse(const Grid& g, const cplx* in, cplx* out) {
    require(in != out, errc::invalid_argument, "fft buffers must be distinct");
    std::vector<cplx> tmp(g.size());
    const auto phase = axis_phase(g);
    const int half = g.n() / 2;
    int mi[Grid::max_dim];
    int ji[Grid::max_dim];
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        g.unravel(idx, mi);
        cplx ph = 1.0;
        for (int d = 0; d < g.dim(); ++d) {
            ji[d] = (mi[d] + half) % g.n();
            ph *= std::conj(phase[mi[d]]);
        }
        tmp[g.ravel(ji)] = ph * in[idx];
    }
    execute(cache().get(g.dim(), g.n(), FFTW_BACKWARD), tmp.data(), out);
    double scale = std::pow(g.dk() / std::sqrt(2.0 * M_PI), g.dim());
    for (std::size_t idx = 0; idx < g.size(); ++idx) out[idx] *= scale;
}

void fft_forward(const Grid& g, const std::vector<cplx>& in, std::vector<cplx>& out) {
    require(in.size() == g.size(), errc::invalid_argument, "fft input size mismatch");
    out.resize(g.size());
    fft_forward(g, in.data(), out.data());
}

void fft_inverse(const Grid& g, const std::vector<cplx>& in, std::vector<cplx>& out) {
    require(in.size() == g.size(), errc::invalid_argument, "fft input size mismatch");
    out.resize(g.size());
    fft_inverse(g, in.data(), out.data());
}

} // namespace speclab
