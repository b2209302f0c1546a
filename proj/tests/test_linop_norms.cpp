#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "core/dense.hpp"
#include "core/linop.hpp"
#include "core/norms.hpp"
#include "core/rng.hpp"

using namespace speclab;

namespace {

GridFunction random_state(const Grid& g, std::uint64_t seed) {
    Rng rng(seed);
    GridFunction f(g);
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = rng.cnormal();
    return f;
}

OpPtr random_composite(const Grid& g, std::uint64_t seed) {
    Rng rng(seed);
    auto rdiag = [&] {
        std::vector<cplx> v(g.size());
        for (auto& z : v) z = rng.cnormal();
        return diagonal_op(g, std::move(v));
    };
    auto rmult = [&] {
        std::vector<cplx> v(g.size());
        for (auto& z : v) z = rng.cnormal();
        return multiplier_op(g, std::move(v));
    };
    switch (rng.integer(4)) {
        case 0: return compose(rdiag(), rmult());
        case 1: return add(rmult(), rdiag());
        case 2: return scale_op(rng.cnormal(), compose(rmult(), rdiag()));
        default: return sub(compose(rdiag(), rmult()), scale_op(cplx(0.0, 1.0), rdiag()));
    }
}

} // namespace

TEST_CASE("laplacian spectrum on the unit-spacing grid") {
    Grid g(1, 8, M_PI, 0.0);
    HermEig e = dense_eig(*laplacian(g));
    double expect[8] = {0, 1, 1, 4, 4, 9, 9, 16};
    for (int i = 0; i < 8; ++i) REQUIRE(e.evals(i) == Catch::Approx(expect[i]).margin(1e-10));
}

TEST_CASE("operators are linear and have true adjoints") {
    Grid g = Grid::make(1, 32, 10.0);
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        OpPtr op = random_composite(g, seed);
        GridFunction f = random_state(g, 100 + seed);
        GridFunction h = random_state(g, 200 + seed);

        // linearity
        cplx alpha(0.3, -1.1), beta(-0.7, 0.2);
        GridFunction combo(g);
        for (std::size_t i = 0; i < g.size(); ++i) combo[i] = alpha * f[i] + beta * h[i];
        GridFunction lhs = (*op)(combo);
        GridFunction rhs = (*op)(f);
        rhs *= alpha;
        GridFunction rhs2 = (*op)(h);
        rhs2 *= beta;
        rhs += rhs2;
        lhs -= rhs;
        REQUIRE(lhs.norm() < 1e-12 * rhs.norm());

        // adjoint pairing
        cplx a = inner((*op->adjoint())(f), h);
        cplx b = inner(f, (*op)(h));
        REQUIRE(std::abs(a - b) < 1e-12 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("functions of p commute among themselves") {
    Grid g = Grid::make(1, 32, 5.0);
    Rng rng(5);
    std::vector<cplx> s1(g.size()), s2(g.size());
    for (auto& z : s1) z = rng.cnormal();
    for (auto& z : s2) z = rng.cnormal();
    OpPtr m1 = multiplier_op(g, s1);
    OpPtr m2 = multiplier_op(g, s2);
    double comm = opnorm_dense(*commutator_op(m1, m2));
    REQUIRE(comm <= 1e-12 * opnorm_dense(*m1) * opnorm_dense(*m2));
}

TEST_CASE("power iteration matches dense svd") {
    Grid g = Grid::make(1, 32, 10.0);
    PowerOpts opts;
    opts.tol = 1e-11;
    opts.max_iters = 20000;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        OpPtr op = random_composite(g, 1000 + seed);
        double pw = opnorm_l2(*op, NormMethod::power_iteration, opts);
        double sv = opnorm_dense(*op);
        REQUIRE(pw == Catch::Approx(sv).epsilon(1e-6));
    }
}

TEST_CASE("reference operator norms") {
    Grid g = Grid::make(1, 64, 20.0);
    REQUIRE(opnorm_l2(*identity_op(g), NormMethod::dense_svd) == Catch::Approx(1.0));

    // <p>^-2 on L2: sup of the symbol, attained at the k = 0 node
    OpPtr p2 = weight_op(g, -2.0, 0.0);
    REQUIRE(opnorm_l2(*p2, NormMethod::dense_svd) == Catch::Approx(1.0).epsilon(1e-12));

    // gaussian diagonal viewed H^1 -> H^-1: the two methods must agree
    OpPtr v = diagonal_fn(g, [](const double* x) { return cplx(std::exp(-x[0] * x[0]), 0.0); });
    PowerOpts opts;
    opts.tol = 1e-10;
    opts.max_iters = 20000;
    double pw = opnorm_weighted(v, 1, 0, -1, 0, NormMethod::power_iteration, opts);
    double sv = opnorm_weighted(v, 1, 0, -1, 0, NormMethod::dense_svd);
    REQUIRE(pw == Catch::Approx(sv).epsilon(1e-6));
}

TEST_CASE("weight operators invert exactly in reverse order") {
    Grid g = Grid::make(1, 32, 10.0);
    for (auto [t, s] : {std::pair{1.0, 0.0}, {-1.0, 0.5}, {2.0, -1.5}}) {
        OpPtr w = weight_op(g, t, s);
        OpPtr winv = weight_op_inverse(g, t, s);
        GridFunction f = random_state(g, 77);
        GridFunction back = (*winv)((*w)(f));
        back -= f;
        REQUIRE(back.norm() < 1e-10 * f.norm());
    }
}

TEST_CASE("weight multiplier scales plane waves") {
    Grid g = Grid::make(1, 32, M_PI, 0.0);
    double k0 = g.k(20); // k = 4
    GridFunction f = GridFunction::from_position(g, [&](const double* x) {
        return std::exp(cplx(0.0, k0 * x[0]));
    });
    GridFunction wf = (*weight_op(g, 1.0, 0.0))(f);
    double expect = std::sqrt(1.0 + k0 * k0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE(std::abs(wf[i] - expect * f[i]) < 1e-11);
    }
}

TEST_CASE("translation shifts samples circularly when a is a lattice step") {
    Grid g = Grid::make(1, 64, 8.0);
    double a = 4.0 * g.spacing();
    GridFunction f = random_state(g, 31);
    GridFunction tf = (*translation_op(g, 0, a))(f);
    for (int m = 0; m < g.n(); ++m) {
        REQUIRE(std::abs(tf[m] - f[(m + 4) % g.n()]) < 1e-11);
    }
}

TEST_CASE("fused schrodinger apply equals laplacian plus diagonal") {
    Grid g = Grid::make(1, 64, 10.0);
    std::vector<double> v(g.size());
    Rng rng(9);
    for (auto& z : v) z = rng.uniform(-1.0, 1.0);
    std::vector<cplx> vc(v.begin(), v.end());
    OpPtr split = add(laplacian(g), diagonal_op(g, vc));
    OpPtr fused = schrodinger_op(g, v);
    GridFunction f = random_state(g, 10);
    GridFunction d = (*split)(f);
    d -= (*fused)(f);
    REQUIRE(d.norm() < 1e-12 * f.norm());
}

TEST_CASE("window states are normalized, band-limited, and inner-supported") {
    Grid g = Grid::make(1, 256, 40.0);
    auto states = window_states(g, 6, 123);
    WindowPolicy policy;
    for (const auto& f : states) {
        REQUIRE(f.norm() == Catch::Approx(1.0).epsilon(1e-12));
        double outer = 0.0;
        double seam = 0.0;
        for (int m = 0; m < g.n(); ++m) {
            double ax = std::abs(g.x(m));
            if (ax > policy.window_frac * g.half_width()) outer += std::norm(f[m]);
            if (ax > 0.9 * g.half_width()) seam += std::norm(f[m]);
        }
        REQUIRE(std::sqrt(outer * g.quad_weight()) < 2e-3);
        // the seam band is what wrap-sensitive form evaluations rely on
        REQUIRE(std::sqrt(seam * g.quad_weight()) < 1e-9);
    }
    // distinct seeds give distinct states
    GridFunction d = states[0];
    d -= states[1];
    REQUIRE(d.norm() > 0.1);
}

TEST_CASE("zero and identity norms behave") {
    Grid g = Grid::make(1, 32, 5.0);
    REQUIRE(opnorm_l2(*zero_op(g)) == 0.0);
    auto states = window_states(g, 3, 1);
    REQUIRE(form_residual(*identity_op(g), *identity_op(g), states) == 0.0);
}
