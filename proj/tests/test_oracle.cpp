#include <doctest.h>

#include <cmath>

#include "plasmah/oracle.hpp"

using namespace plasmah;

namespace {

PlasmaFieldConfig config(double g, double lambda_d, double F = 0.0, double B = 0.0,
                         double xi = 0.0) {
    PlasmaFieldConfig cfg;
    cfg.g = g;
    cfg.lambda_d = lambda_d;
    cfg.F = F;
    cfg.B = B;
    cfg.xi = xi;
    return cfg;
}

} // namespace

TEST_CASE("build_hamiltonian: stencil structure") {
    auto cfg = config(1, 20);
    cfg.A = 0.0; // kinetic + centrifugal only
    const RadialGrid grid{0.5, 2.5, 5};
    const double h = grid.spacing();
    REQUIRE(h == 0.5);
    const auto op = build_hamiltonian(grid, {0, 1}, cfg);
    REQUIRE(op.diagonal.size() == 5);
    REQUIRE(op.off_diagonal.size() == 4);
    for (int i = 0; i < 5; ++i) {
        const double r = grid.point(i);
        CHECK(op.diagonal[i]
              == doctest::Approx(1.0 / (h * h) + 0.375 / (r * r)).epsilon(1e-14));
    }
    for (double e : op.off_diagonal) CHECK(e == -0.5 / (h * h));
}

TEST_CASE("build_hamiltonian: unbounded potential guard") {
    const RadialGrid grid{0.1, 30.0, 128};
    CHECK_THROWS_AS(build_hamiltonian(grid, {0, 0}, config(1, 20, /*F=*/1.0)),
                    UnboundedPotentialError);
    CHECK_NOTHROW(build_hamiltonian(grid, {0, 0}, config(1, 20, 1.0), /*box=*/true));
    CHECK_THROWS_AS(oracle_spectrum(0, 1, config(1, 20, 1.0)), UnboundedPotentialError);
}

TEST_CASE("lowest_eigenvalues: 2x2 analytic case") {
    const TridiagonalOperator op{{2.0, 2.0}, {-1.0}};
    const auto ev = lowest_eigenvalues(op, 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK_THROWS_AS(lowest_eigenvalues(op, 3), ArgumentError);
}

TEST_CASE("lowest_eigenvalues: discrete free Laplacian spectrum") {
    const int n = 50;
    const double h = 0.1;
    TridiagonalOperator op;
    op.diagonal.assign(n, 2.0 / (h * h));
    op.off_diagonal.assign(n - 1, -1.0 / (h * h));
    const auto ev = lowest_eigenvalues(op, 5);
    for (int j = 1; j <= 5; ++j) {
        const double expected = (2.0 / (h * h)) * (1.0 - std::cos(j * M_PI / (n + 1)));
        CHECK(ev[j - 1] == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("oracle spectrum: unscreened Coulomb limit per sector") {
    const auto cfg = config(1, 1e6);
    for (int m : {0, 1, 2}) {
        const auto spec = oracle_spectrum(m, 3, cfg);
        REQUIRE(spec.eigenvalues.size() == 3);
        for (int j = 0; j < 3; ++j) {
            const double exact = -0.5 / ((j + m + 0.5) * (j + m + 0.5));
            CHECK(std::abs(spec.eigenvalues[j] - exact) < 1e-5);
        }
    }
}

TEST_CASE("oracle spectrum: ascending eigenvalues with nonnegative estimates") {
    const auto spec = oracle_spectrum(0, 4, config(1, 20));
    for (std::size_t j = 0; j + 1 < spec.eigenvalues.size(); ++j)
        CHECK(spec.eigenvalues[j] < spec.eigenvalues[j + 1]);
    for (double est : spec.converged) CHECK(est >= 0.0);
}

TEST_CASE("oracle spectrum: screened anchor close to the perturbative total") {
    const auto spec = oracle_spectrum(0, 1, config(1, 20));
    CHECK(std::abs(spec.eigenvalues[0] - (-1.95001560)) < 5e-4);
}

TEST_CASE("oracle spectrum: eigenvalues increase with the magnetic field") {
    double prev = -1e300;
    for (double B : {0.5, 1.0, 2.0}) {
        const auto spec = oracle_spectrum(0, 1, config(1, 40, 0, B, /*xi=*/2));
        CHECK(spec.eigenvalues[0] > prev);
        prev = spec.eigenvalues[0];
    }
}

TEST_CASE("grid convergence: gap to the extrapolated limit shrinks >= 3.5x") {
    // smooth sector (m = 1) on a fixed domain, plain second-difference form
    const auto cfg = config(1, 20);
    const QuantumNumbers qn{0, 1};
    const double r_max = 90.0;
    auto ground = [&](int n_points) {
        const double h = r_max / n_points;
        const RadialGrid grid{h, r_max, n_points};
        return lowest_eigenvalues(build_hamiltonian(grid, qn, cfg), 1)[0];
    };
    const double e4k = ground(4096), e8k = ground(8192), e16k = ground(16384),
                 e32k = ground(32768);
    const double limit = (4.0 * e32k - e16k) / 3.0;
    const double gap4k = std::abs(e4k - limit);
    const double gap8k = std::abs(e8k - limit);
    const double gap16k = std::abs(e16k - limit);
    CHECK(gap4k / gap8k >= 3.5);
    CHECK(gap8k / gap16k >= 3.5);
}

TEST_CASE("node counts: j-th eigenvector has j interior sign changes") {
    const auto cfg = config(1, 20);
    const double r_max = 120.0;
    const int n_points = 3000;
    const double h = r_max / n_points;
    const RadialGrid grid{h, r_max, n_points};
    const auto op = build_hamiltonian(grid, {0, 1}, cfg);
    const auto ev = lowest_eigenvalues(op, 3);
    for (int j = 0; j < 3; ++j) {
        const auto vec = tridiagonal_eigenvector(op, ev[j]);
        CHECK(count_sign_changes(vec) == j);
    }
}

TEST_CASE("compare with perturbation: inside the validity window") {
    const auto dense = compare_with_perturbation({0, 0}, config(1, 20));
    CHECK(dense.abs_gap <= 5e-4);
    CHECK_FALSE(dense.outside_validity);

    const auto weak = compare_with_perturbation({0, 0}, config(0, 20));
    CHECK(weak.perturbative.total == doctest::Approx(-1.9506173).epsilon(2e-6));
    CHECK(weak.abs_gap <= 5e-4);
}

TEST_CASE("compare with perturbation: strong screening is flagged") {
    const auto cmp = compare_with_perturbation({0, 0}, config(1, 1.0));
    CHECK(cmp.outside_validity);
}

TEST_CASE("compare with perturbation: node mapping for negative m") {
    // (n=2, m=-1) shares its sigma ladder entry with (n=0, m=1)
    const auto cfg = config(1, 20);
    const auto neg = compare_with_perturbation({2, -1}, cfg);
    const auto pos = compare_with_perturbation({0, 1}, cfg);
    CHECK(neg.oracle_energy == doctest::Approx(pos.oracle_energy).epsilon(1e-12));
    CHECK(neg.perturbative.total == pos.perturbative.total);
    // (n=0, m=-1) has no node-indexed counterpart in the exact spectrum
    CHECK_THROWS_AS(compare_with_perturbation({0, -1}, cfg), ArgumentError);
}
