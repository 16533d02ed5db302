#include <doctest.h>

#include <cmath>
#include <random>

#include "plasmah/quadrature.hpp"
#include "plasmah/susy.hpp"

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

TEST_CASE("laguerre: low orders against closed forms") {
    CHECK(laguerre(0, 0.0, 3.7) == 1.0);
    CHECK(laguerre(0, -2.5, 100.0) == 1.0);
    CHECK(laguerre(1, 0.0, 4.0 / 3.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(laguerre(2, 1.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
    for (double x : {0.0, 0.5, 2.0, 7.3}) {
        CHECK(laguerre(2, 1.0, x)
              == doctest::Approx((x * x - 6.0 * x + 6.0) / 2.0).epsilon(1e-13));
    }
}

TEST_CASE("unperturbed energy: 2D Coulomb ladder") {
    const auto cfg = config(1, 20);
    CHECK(unperturbed_energy({0, 0}, cfg) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(unperturbed_energy({0, 1}, cfg) == doctest::Approx(-1.0 / 4.5).epsilon(1e-15));
    CHECK(unperturbed_energy({3, 1}, cfg) == doctest::Approx(-1.0 / 40.5).epsilon(1e-15));
    CHECK(unperturbed_energy({0, 0}, cfg) < 0.0);
}

TEST_CASE("normalization: closed-form anchors") {
    const auto cfg = config(1, 20);
    CHECK(normalization({0, 0}, cfg) == doctest::Approx(4.0).epsilon(1e-14));
    const double n10 = normalization({1, 0}, cfg);
    CHECK(n10 * n10 == doctest::Approx(16.0 / 27.0).epsilon(1e-14));
    CHECK_THROWS_AS(normalization({0, -1}, cfg), WavefunctionUndefinedError);
}

TEST_CASE("normalization: quadrature norm equals one") {
    const auto cfg = config(1, 20);
    for (const QuantumNumbers qn : {QuantumNumbers{0, 0}, {1, 0}, {0, 1}, {3, 2}}) {
        CHECK(wavefunction_norm(qn, cfg) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("unperturbed wavefunction: values and node") {
    const auto cfg = config(1, 20);
    CHECK(unperturbed_wavefunction(0.0, {0, 0}, cfg) == 0.0);
    CHECK(unperturbed_wavefunction(1.0, {0, 0}, cfg)
          == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-14));
    // L_1^0(4r/3) vanishes at r = 3/4
    CHECK(std::abs(unperturbed_wavefunction(0.75, {1, 0}, cfg)) < 1e-14);
    CHECK_THROWS_AS(unperturbed_wavefunction(1.0, {0, -1}, cfg),
                    WavefunctionUndefinedError);
}

TEST_CASE("first-order energy: anchors") {
    CHECK(first_order_energy({0, 0}, config(1, 20, /*F=*/0, /*B=*/3, /*xi=*/2)) == 0.0);
    CHECK(first_order_energy({0, 0}, config(0, 20))
          == doctest::Approx(-6.25e-4).epsilon(1e-14));
    CHECK(first_order_energy({0, 0}, config(1, 20, /*F=*/5))
          == doctest::Approx(-2.5).epsilon(1e-14));
}

TEST_CASE("first-order energy: vanishes identically for dense mode at F = 0") {
    std::mt19937 rng(7071);
    std::uniform_real_distribution<double> ld(2.0, 500.0), field(0.0, 8.0);
    std::uniform_int_distribution<int> mdist(-3, 4), ndist(0, 5), xdist(-2, 6);
    for (int i = 0; i < 50; ++i) {
        const auto cfg = config(1, ld(rng), 0.0, field(rng), xdist(rng));
        CHECK(first_order_energy({ndist(rng), mdist(rng)}, cfg) == 0.0);
    }
}

TEST_CASE("second-order energy: anchors") {
    // bracket {5 sigma^2 - 3 (sigma_0 - 1/2)^2 + 7/4} vanishes at (0, -1)
    CHECK(second_order_energy({0, -1}, config(1, 20)) == 0.0);
    CHECK(second_order_energy({0, 0}, config(1, 20))
          == doctest::Approx(-1.5625e-5).epsilon(1e-13));
    CHECK(second_order_energy({0, 0}, config(1, 20, 0, /*B=*/5))
          == doctest::Approx(1.171859375).epsilon(1e-13));
}

TEST_CASE("superpotential coefficients: collapsed field brackets for dense mode") {
    const auto cfg = config(1, 20);
    const auto w = superpotential_coeffs({0, 0}, cfg);
    CHECK(w.w1_lin == 0.0);
    // K reduces to A/(3 lambda_D^3); leading factor -K sigma/(A^2 sqrt(2))
    const double K = 1.0 / (3.0 * 8000.0);
    const double lead = -K * 0.5 / std::sqrt(2.0);
    CHECK(w.w2_quad == doctest::Approx(lead).epsilon(1e-13));
    CHECK(w.w2_lin == doctest::Approx(lead * 0.5 * 1.5).epsilon(1e-13));
}

TEST_CASE("superpotential coefficients: linear term under a strong electric field") {
    const auto w = superpotential_coeffs({0, 0}, config(1, 20, /*F=*/5));
    CHECK(w.w1_lin == doctest::Approx(-5.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
    CHECK(w.w1_lin < 0.0);
}

TEST_CASE("superpotential coefficients: ground form and exponent antiderivative") {
    const auto cfg = config(0, 30, 0.02, 1.5, 2);
    const auto w = superpotential_coeffs({1, 0}, cfg);
    // W0 = -(1/sqrt(2)) sigma_0 / r + A/(sqrt(2) sigma_0)
    CHECK(w.w0_inv == doctest::Approx(-2.5 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(w.w0_const == doctest::Approx(1.0 / (std::sqrt(2.0) * 2.5)).epsilon(1e-14));
    // d/dr (q2 r^2 + q3 r^3) = -sqrt(2 mu)/hbar (W1 + W2)(r)
    for (double r : {0.3, 1.0, 4.2}) {
        const double lhs = 2.0 * w.q2 * r + 3.0 * w.q3 * r * r;
        const double w12 = w.w1_lin * r + w.w2_lin * r + w.w2_quad * r * r;
        CHECK(lhs == doctest::Approx(-std::sqrt(2.0) * w12).epsilon(1e-12));
    }
    CHECK(std::isfinite(w.q2));
    CHECK(std::isfinite(w.q3));
}

TEST_CASE("total energy: published anchors") {
    // dense quantum plasma, field-free
    CHECK(total_energy({0, 0}, config(1, 20)).total
          == doctest::Approx(-1.950015625).epsilon(1e-13));
    CHECK(total_energy({0, 0}, config(1, 20)).total
          == doctest::Approx(-1.95001560).epsilon(2e-6));
    // weakly coupled plasma: e1 = -6.25e-4, e2 = 7.7392578125e-6
    const auto weak = total_energy({0, 0}, config(0, 20));
    CHECK(weak.total == doctest::Approx(-2.0 + 0.05 - 6.25e-4 + 7.7392578125e-6)
                            .epsilon(1e-13));
    CHECK(weak.total == doctest::Approx(-1.9506173).epsilon(2e-6));
    // combined fields
    CHECK(total_energy({0, 0}, config(1, 20, 5, 5, 5)).total
          == doctest::Approx(-442558.77).epsilon(2e-6));
    // positive entry driven by the AB flux
    CHECK(total_energy({0, -1}, config(1, 20, 0, 0, 5)).total
          == doctest::Approx(0.0021055).scale(1.0).epsilon(1e-5));
}

TEST_CASE("total energy: m = -1 rows are independent of the electric field") {
    const double base = total_energy({0, -1}, config(1, 20)).total;
    for (double F : {0.5, 2.0, 5.0}) {
        CHECK(total_energy({0, -1}, config(1, 20, F)).total == base);
    }
    CHECK(base == doctest::Approx(-1.95).epsilon(1e-14));
}

TEST_CASE("total energy: degeneracy identity at B = 0, xi = 0") {
    for (double g : {0.0, 1.0}) {
        for (double F : {0.0, 5.0}) {
            const auto cfg = config(g, 20, F);
            for (int m = 1; m <= 3; ++m) {
                for (int n = 0; n <= 3; ++n) {
                    const double a = total_energy({n, m}, cfg).total;
                    const double b = total_energy({n + 2 * m, -m}, cfg).total;
                    CHECK(a == b); // bit-identical
                }
            }
        }
    }
}

TEST_CASE("total energy: Zeeman shift exactly linear in B") {
    const QuantumNumbers qn{1, 2};
    for (double xi : {0.0, 3.0}) {
        const double s0 = total_energy(qn, config(1, 20, 0, 0.0, xi)).shift;
        const double s1 = total_energy(qn, config(1, 20, 0, 1.0, xi)).shift;
        const double s2 = total_energy(qn, config(1, 20, 0, 2.0, xi)).shift;
        CHECK(s1 - s0 == doctest::Approx(0.5 * (2.0 + xi)).epsilon(1e-13));
        CHECK(s2 - s1 == doctest::Approx(s1 - s0).epsilon(1e-13));
    }
}

TEST_CASE("total energy: breakdown additivity") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> ld(2.0, 100.0), field(0.0, 5.0);
    for (int i = 0; i < 30; ++i) {
        const auto cfg = config(i % 2, ld(rng), field(rng), field(rng), i % 5);
        const auto b = total_energy({i % 4, (i % 3) - 1}, cfg);
        CHECK(b.total == b.e0 + b.shift + b.e1 + b.e2);
    }
}

TEST_CASE("full wavefunction: modulus independent of the angle") {
    const auto cfg = config(1, 20, 0.0001);
    const QuantumNumbers qn{0, 2};
    const double r = 1.7;
    const double a0 = std::abs(full_wavefunction(r, 0.0, qn, cfg));
    for (double phi : {0.4, 2.0, 5.9}) {
        CHECK(std::abs(full_wavefunction(r, phi, qn, cfg))
              == doctest::Approx(a0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(full_wavefunction(0.0, 0.0, qn, cfg), DomainError);
    CHECK_THROWS_AS(full_wavefunction(1.0, 0.0, {0, -1}, cfg),
                    WavefunctionUndefinedError);
}

TEST_CASE("full wavefunction: reduces to the unperturbed form without perturbations") {
    const auto cfg = config(1, 1e9); // F = B = 0, screening negligible
    const QuantumNumbers qn{0, 0};
    for (double r : {0.5, 2.0, 10.0}) {
        CHECK(moderating_function(r, qn, cfg) == doctest::Approx(1.0).epsilon(1e-15));
        const double psi = std::abs(full_wavefunction(r, 1.0, qn, cfg));
        const double p = unperturbed_wavefunction(r, qn, cfg)
                         / std::sqrt(2.0 * M_PI * r);
        CHECK(psi == doctest::Approx(p).epsilon(1e-13));
    }
}

TEST_CASE("moderating function: cubic exponent sign analysis") {
    // weakly coupled mode: the quadratic perturbation coefficient dominates
    // the squared field bracket, so q3 < 0 and Q decays beyond the turning
    // point of q2 r^2 + q3 r^3
    const auto weak = config(0, 20, 0.0001);
    const auto w = superpotential_coeffs({0, 0}, weak);
    REQUIRE(w.q3 < 0.0);
    REQUIRE(w.q2 > 0.0);
    const double turning = -2.0 * w.q2 / (3.0 * w.q3);
    double prev = moderating_function(turning, {0, 0}, weak);
    for (double r = turning + 0.5; r < turning + 5.0; r += 0.5) {
        const double q = moderating_function(r, {0, 0}, weak);
        CHECK(q < prev);
        CHECK(q > 0.0);
        prev = q;
    }
    // dense mode at the same fields: both exponent coefficients are positive
    // and Q is monotone increasing instead (no turning point)
    const auto dense = superpotential_coeffs({0, 0}, config(1, 20, 0.0001));
    CHECK(dense.q2 > 0.0);
    CHECK(dense.q3 > 0.0);
}

TEST_CASE("wavefunction samples: moderated over unperturbed recovers Q") {
    const auto cfg = config(0, 20, 0.001);
    const auto samples = wavefunction_samples(0.0, 8.0, 17, {1, 1}, cfg);
    REQUIRE(samples.size() == 17);
    for (const auto& s : samples) {
        CHECK(s.phase_m == 1);
        CHECK(s.prefactor_rule);
        if (s.unperturbed != 0.0) {
            CHECK(s.moderated / s.unperturbed
                  == doctest::Approx(moderating_function(s.r, {1, 1}, cfg))
                         .epsilon(1e-12));
            CHECK(s.moderated / s.unperturbed > 0.0);
        }
    }
}

TEST_CASE("first-order quadrature: matches the closed form") {
    // dense mode, F = 0: integrand identically zero
    CHECK(std::abs(first_order_energy_quadrature({0, 0}, config(1, 20, 0, 2)))
          <= 1e-12);
    // weakly coupled anchor
    CHECK(first_order_energy_quadrature({0, 0}, config(0, 20))
          == doctest::Approx(-6.25e-4).epsilon(1e-10));
    CHECK(first_order_energy_quadrature({0, 0}, config(0, 20))
          == doctest::Approx(first_order_energy({0, 0}, config(0, 20))).epsilon(1e-10));
    // excited state with a strong field
    const auto cfg = config(1, 20, 5);
    CHECK(first_order_energy_quadrature({1, 1}, cfg)
          == doctest::Approx(first_order_energy({1, 1}, cfg)).epsilon(1e-9));
}

TEST_CASE("second-order quadrature: matches the closed form") {
    CHECK(second_order_energy_quadrature({0, 0}, config(1, 20))
          == doctest::Approx(-1.5625e-5).epsilon(1e-8));
    CHECK(std::abs(second_order_energy_quadrature({0, 0}, config(1, 20))
                   - second_order_energy({0, 0}, config(1, 20)))
          < 1e-10);
    CHECK(second_order_energy_quadrature({0, 0}, config(1, 20, 0, 5))
          == doctest::Approx(1.171859375).epsilon(1e-8));
    const auto cfg = config(0, 20);
    CHECK(second_order_energy_quadrature({1, 0}, cfg)
          == doctest::Approx(second_order_energy({1, 0}, cfg)).epsilon(1e-8));
}

TEST_CASE("third-order quadrature: diagnostic behaviour") {
    // smaller than the second-order correction inside the validity window
    const auto cfg = config(1, 20);
    const double e3 = third_order_energy_quadrature({0, 0}, cfg);
    CHECK(std::abs(e3) < std::abs(second_order_energy({0, 0}, cfg)));
    // never enters the total
    const auto b = total_energy({0, 0}, cfg);
    CHECK(b.total == b.e0 + b.shift + b.e1 + b.e2);
    // all perturbation coefficients vanish in the Coulomb limit
    CHECK(std::abs(third_order_energy_quadrature({0, 0}, config(1, 1e6))) <= 1e-12);
}

TEST_CASE("third-order quadrature: two independent rules agree") {
    const QuantumNumbers qn{0, 0};
    const auto cfg = config(0, 20);
    const double adaptive = third_order_energy_quadrature(qn, cfg);

    // re-integrate with the composite Simpson rule
    const auto s = sigma_index(qn, cfg);
    const auto w = superpotential_coeffs(qn, cfg);
    const double c3 = series_coefficients(qn, cfg).c3;
    const double N = normalization(qn, cfg);
    const double R = radial_cutoff(s.rho, 2.0 * s.sigma_0 + 3.0, N * N);
    const auto integrand = [&](double r) {
        const double p = unperturbed_wavefunction(r, qn, cfg);
        const double w1 = w.w1_lin * r;
        const double w2 = w.w2_lin * r + w.w2_quad * r * r;
        return p * p * (c3 * r * r * r + w1 * w2);
    };
    const double simpson = integrate_simpson(integrand, 0.0, R, 1e-12);
    CHECK(adaptive == doctest::Approx(simpson).epsilon(1e-8));
}
