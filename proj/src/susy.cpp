#include "plasmah/susy.hpp"

#include <cmath>

#include "plasmah/quadrature.hpp"

namespace plasmah {

namespace {

// beta = F/A + (1/lambda_D^2)(1/2 - g^2/2), the first-order field bracket.
double field_bracket(const PlasmaFieldConfig& cfg) {
    const double g2 = cfg.g * cfg.g;
    return cfg.F / cfg.A + (0.5 - 0.5 * g2) / (cfg.lambda_d * cfg.lambda_d);
}

// c2 = (A/lambda_D^3)(1/6 - g^2/2) + mu omega_c^2 / 8, the quadratic
// perturbation coefficient.
double quadratic_coeff(const PlasmaFieldConfig& cfg) {
    const double wc = cfg.omega_c();
    const double ld = cfg.lambda_d;
    return (cfg.A / (ld * ld * ld)) * (1.0 / 6.0 - 0.5 * cfg.g * cfg.g)
           + cfg.mu * wc * wc / 8.0;
}

SigmaIndex require_wavefunction_regime(const QuantumNumbers& qn,
                                       const PlasmaFieldConfig& cfg) {
    const SigmaIndex s = sigma_index(qn, cfg);
    if (!(s.sigma_0 > 0.0))
        throw WavefunctionUndefinedError(
            "sigma_0m <= 0: r^sigma_0m diverges, wavefunction undefined "
            "(energies remain valid for this state)");
    return s;
}

} // namespace

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw ArgumentError("laguerre: n must be >= 0");
    if (n == 0) return 1.0;
    double lm = 1.0;            // L_0
    double l = 1.0 + alpha - x; // L_1
    for (int k = 1; k < n; ++k) {
        const double lp = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

double unperturbed_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    const SigmaIndex s = sigma_index(qn, cfg);
    return -cfg.mu * cfg.A * cfg.A / (2.0 * cfg.hbar * cfg.hbar * s.sigma_n * s.sigma_n);
}

double normalization(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    const SigmaIndex s = require_wavefunction_regime(qn, cfg);
    // (2 sigma_n - 1 - n)! generalized as Gamma(2 sigma_n - n); the argument
    // is 2 sigma_0 + n > 0 whenever sigma_0 > 0.
    const double gamma_arg = 2.0 * s.sigma_n - qn.n;
    const double log_bracket = std::lgamma(gamma_arg) - std::lgamma(qn.n + 1.0)
                               + std::log(cfg.hbar * cfg.hbar / (cfg.mu * cfg.A));
    return std::pow(2.0 * s.rho, s.sigma_0) / s.sigma_n * std::exp(-0.5 * log_bracket);
}

double unperturbed_wavefunction(double r, const QuantumNumbers& qn,
                                const PlasmaFieldConfig& cfg) {
    if (r < 0.0) throw DomainError("unperturbed_wavefunction: r must be >= 0");
    const SigmaIndex s = require_wavefunction_regime(qn, cfg);
    if (r == 0.0) return 0.0;
    const double N = normalization(qn, cfg);
    return N * std::pow(r, s.sigma_0) * std::exp(-s.rho * r)
           * laguerre(qn.n, 2.0 * s.sigma_0 - 1.0, 2.0 * s.rho * r);
}

double first_order_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    const SigmaIndex s = sigma_index(qn, cfg);
    const double bracket = 3.0 * s.sigma_n * s.sigma_n - s.centrifugal_sq + 0.25;
    return -(cfg.hbar * cfg.hbar / (2.0 * cfg.mu)) * bracket * field_bracket(cfg);
}

double second_order_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    const SigmaIndex s = sigma_index(qn, cfg);
    const double beta = field_bracket(cfg);
    const double s2 = s.sigma_n * s.sigma_n;
    const double h2_2mu = cfg.hbar * cfg.hbar / (2.0 * cfg.mu);
    const double lead = quadratic_coeff(cfg) - h2_2mu * s2 * beta * beta;
    const double h4 = cfg.hbar * cfg.hbar * cfg.hbar * cfg.hbar;
    const double moment = h4 * s2 / (2.0 * cfg.mu * cfg.mu * cfg.A * cfg.A);
    const double bracket = 5.0 * s2 - 3.0 * s.centrifugal_sq + 1.75;
    return lead * moment * bracket;
}

SuperpotentialCoeffs superpotential_coeffs(const QuantumNumbers& qn,
                                           const PlasmaFieldConfig& cfg) {
    const SigmaIndex s = sigma_index(qn, cfg);
    if (s.sigma_0 == 0.0)
        throw WavefunctionUndefinedError("sigma_0m = 0: ground superpotential undefined");
    const double sq2mu = std::sqrt(2.0 * cfg.mu);
    const double beta = field_bracket(cfg);

    SuperpotentialCoeffs w;
    w.w0_inv = -(cfg.hbar / sq2mu) * s.sigma_0;
    w.w0_const = std::sqrt(0.5 * cfg.mu) * cfg.A / (cfg.hbar * s.sigma_0);
    w.w1_lin = -(cfg.hbar / sq2mu) * beta * s.sigma_n;

    const double h2_2mu = cfg.hbar * cfg.hbar / (2.0 * cfg.mu);
    const double K = h2_2mu * s.sigma_n * s.sigma_n * beta * beta - quadratic_coeff(cfg);
    const double lead = -K * cfg.hbar * s.sigma_n / (cfg.mu * cfg.A * cfg.A * sq2mu);
    const double sigma_np1 = s.sigma_n + 1.0;
    w.w2_lin = lead * s.sigma_n * sigma_np1 * cfg.hbar * cfg.hbar;
    w.w2_quad = lead * cfg.mu * cfg.A;

    w.q2 = -(sq2mu / cfg.hbar) * (w.w1_lin + w.w2_lin) / 2.0;
    w.q3 = -(sq2mu / cfg.hbar) * w.w2_quad / 3.0;
    return w;
}

double moderating_function(double r, const QuantumNumbers& qn,
                           const PlasmaFieldConfig& cfg) {
    const SuperpotentialCoeffs w = superpotential_coeffs(qn, cfg);
    return std::exp(w.q2 * r * r + w.q3 * r * r * r);
}

EnergyBreakdown total_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    const SigmaIndex s = sigma_index(qn, cfg);
    (void)s;
    EnergyBreakdown b;
    b.e0 = unperturbed_energy(qn, cfg);
    b.shift = cfg.A / cfg.lambda_d
              + 0.5 * cfg.omega_c() * cfg.hbar * cfg.flux_index(qn.m);
    b.e1 = first_order_energy(qn, cfg);
    b.e2 = second_order_energy(qn, cfg);
    b.total = b.e0 + b.shift + b.e1 + b.e2;
    return b;
}

std::complex<double> full_wavefunction(double r, double phi, const QuantumNumbers& qn,
                                       const PlasmaFieldConfig& cfg) {
    if (!(r > 0.0)) throw DomainError("full_wavefunction: r must be > 0");
    const double radial = unperturbed_wavefunction(r, qn, cfg)
                          * moderating_function(r, qn, cfg)
                          / std::sqrt(2.0 * M_PI * r);
    return std::polar(radial, qn.m * phi);
}

std::vector<WavefunctionSample> wavefunction_samples(double r_min, double r_max,
                                                     int count,
                                                     const QuantumNumbers& qn,
                                                     const PlasmaFieldConfig& cfg) {
    if (!(r_min >= 0.0) || !(r_max > r_min) || count < 2)
        throw ArgumentError("wavefunction_samples: need 0 <= r_min < r_max and count >= 2");
    std::vector<WavefunctionSample> out;
    out.reserve(count);
    const double h = (r_max - r_min) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const double r = r_min + i * h;
        const double p = unperturbed_wavefunction(r, qn, cfg);
        out.push_back({r, p, p * moderating_function(r, qn, cfg), qn.m, true});
    }
    return out;
}

namespace {

// Integrates P^2(r) * weight(r) over [0, R] with the envelope-derived cutoff.
// poly_degree is the power of r in the weight (0 for the norm).
double radial_expectation(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg,
                          int poly_degree,
                          const std::function<double(double)>& weight) {
    const SigmaIndex s = require_wavefunction_regime(qn, cfg);
    const double N = normalization(qn, cfg);
    const double power = 2.0 * s.sigma_0 + 2.0 * qn.n + poly_degree;
    const double R = radial_cutoff(s.rho, power, N * N);
    const auto integrand = [&](double r) {
        const double p = unperturbed_wavefunction(r, qn, cfg);
        return p * p * weight(r);
    };
    return integrate(integrand, 0.0, R);
}

} // namespace

double first_order_energy_quadrature(const QuantumNumbers& qn,
                                     const PlasmaFieldConfig& cfg) {
    const double c1 = series_coefficients(qn, cfg).c1;
    return radial_expectation(qn, cfg, 1, [&](double r) { return c1 * r; });
}

double second_order_energy_quadrature(const QuantumNumbers& qn,
                                      const PlasmaFieldConfig& cfg) {
    const double c2 = series_coefficients(qn, cfg).c2;
    const double w1 = superpotential_coeffs(qn, cfg).w1_lin;
    return radial_expectation(qn, cfg, 2, [&](double r) {
        const double w1r = w1 * r;
        return c2 * r * r - w1r * w1r;
    });
}

double third_order_energy_quadrature(const QuantumNumbers& qn,
                                     const PlasmaFieldConfig& cfg) {
    const double c3 = series_coefficients(qn, cfg).c3;
    const SuperpotentialCoeffs w = superpotential_coeffs(qn, cfg);
    return radial_expectation(qn, cfg, 3, [&](double r) {
        const double w1r = w.w1_lin * r;
        const double w2r = w.w2_lin * r + w.w2_quad * r * r;
        return c3 * r * r * r + w1r * w2r;
    });
}

double wavefunction_norm(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    return radial_expectation(qn, cfg, 0, [](double) { return 1.0; });
}

double moderated_norm(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    const SuperpotentialCoeffs w = superpotential_coeffs(qn, cfg);
    return radial_expectation(qn, cfg, 0, [&](double r) {
        const double q = std::exp(w.q2 * r * r + w.q3 * r * r * r);
        return q * q;
    });
}

} // namespace plasmah
