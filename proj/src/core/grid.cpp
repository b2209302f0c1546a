#include "grid.hpp"

#include <cmath>
#include <sstream>

namespace speclab {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

Grid::Grid(int dim, int n, double half_width, double offset)
    : dim_(dim), n_(n), half_width_(half_width), offset_(offset) {
    require(dim >= 1 && dim <= max_dim, errc::invalid_argument, "grid dim must be 1..3");
    require(power_of_two(n) && n >= 4, errc::invalid_argument, "grid n must be a power of two >= 4");
    require(half_width > 0.0 && std::isfinite(half_width), errc::invalid_argument,
            "grid half_width must be positive");
    h_ = 2.0 * half_width / n;
    require(offset >= 0.0 && offset < h_, errc::invalid_argument, "grid offset must lie in [0, h)");
    dk_ = M_PI / half_width;
    qw_ = 1.0;
    mw_ = 1.0;
    size_ = 1;
    for (int d = 0; d < dim; ++d) {
        qw_ *= h_;
        mw_ *= dk_;
        size_ *= static_cast<std::size_t>(n);
    }
}

Grid Grid::make(int dim, int n, double half_width, double offset) {
    double h = 2.0 * half_width / n;
    if (offset < 0.0) offset = 0.5 * h;
    return Grid(dim, n, half_width, offset);
}

std::string Grid::signature() const {
    std::ostringstream os;
    os << "grid(dim=" << dim_ << ",n=" << n_ << ",L=" << half_width_ << ",offset=" << offset_ << ")";
    return os.str();
}

} // namespace speclab
