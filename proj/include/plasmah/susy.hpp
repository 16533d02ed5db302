#pragma once

#include <complex>
#include <vector>

#include "plasmah/model.hpp"

namespace plasmah {

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double laguerre(int n, double alpha, double x);

/// Unperturbed 2D-Coulomb energy -mu A^2 / (2 hbar^2 sigma_nm^2).
/// Throws DegenerateIndexError when sigma_nm = 0.
double unperturbed_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

/// Normalization factor of the unperturbed radial wavefunction,
///   N = (2 rho)^{sigma_0} / sigma_n * [hbar^2 Gamma(2 sigma_n - n) / (mu n! A)]^{-1/2},
/// the half-integer factorial generalized through the Gamma function.
/// Throws WavefunctionUndefinedError when sigma_0m <= 0.
double normalization(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

/// Normalized unperturbed radial amplitude
///   P(r) = N r^{sigma_0} e^{-rho r} L_n^{2 sigma_0 - 1}(2 rho r).
/// Throws WavefunctionUndefinedError when sigma_0m <= 0.
double unperturbed_wavefunction(double r, const QuantumNumbers& qn,
                                const PlasmaFieldConfig& cfg);

/// First-order energy correction (closed form),
///   E1 = -(hbar^2/2mu) {3 sigma_n^2 - (sigma_0 - 1/2)^2 + 1/4}
///        * {F/A + (1/lambda_D^2)(1/2 - g^2/2)}.
double first_order_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

/// Second-order energy correction (closed form), see series coefficient c2:
///   E2 = {c2 - (hbar^2 sigma_n^2/2mu) beta^2}
///        * (hbar^4 sigma_n^2 / 2 mu^2 A^2) {5 sigma_n^2 - 3 (sigma_0-1/2)^2 + 7/4}
/// with beta = F/A + (1/lambda_D^2)(1/2 - g^2/2).
double second_order_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

/// Polynomial coefficients of the ground and perturbative superpotentials and
/// of the moderating-function exponent Q = exp(q2 r^2 + q3 r^3).
struct SuperpotentialCoeffs {
    double w0_inv;   ///< W0 = w0_inv / r + w0_const
    double w0_const;
    double w1_lin;   ///< W1(r) = w1_lin * r
    double w2_lin;   ///< W2(r) = w2_lin * r + w2_quad * r^2
    double w2_quad;
    double q2;       ///< -(sqrt(2mu)/hbar) (w1_lin + w2_lin) / 2
    double q3;       ///< -(sqrt(2mu)/hbar) w2_quad / 3
};

/// Throws WavefunctionUndefinedError when sigma_0m = 0 (W0 undefined).
SuperpotentialCoeffs superpotential_coeffs(const QuantumNumbers& qn,
                                           const PlasmaFieldConfig& cfg);

/// Moderating function Q(r) = exp(q2 r^2 + q3 r^3).
double moderating_function(double r, const QuantumNumbers& qn,
                           const PlasmaFieldConfig& cfg);

/// The four additive pieces of the total energy and their sum.
struct EnergyBreakdown {
    double e0;    ///< unperturbed energy
    double shift; ///< A/lambda_D + (omega_c hbar/2)(m+xi)
    double e1;    ///< first-order correction
    double e2;    ///< second-order correction
    double total; ///< e0 + shift + e1 + e2
};

/// Assembles the n-th state energy; total sums only through second order.
/// Throws DegenerateIndexError when sigma_nm = 0.
EnergyBreakdown total_energy(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

/// Full wavefunction psi(r, phi) = (1/sqrt(2 pi r)) e^{i m phi} P(r) Q(r).
/// Throws DomainError for r <= 0, WavefunctionUndefinedError for sigma_0m <= 0.
std::complex<double> full_wavefunction(double r, double phi, const QuantumNumbers& qn,
                                       const PlasmaFieldConfig& cfg);

/// One radial sample of the unperturbed and moderated amplitudes.
struct WavefunctionSample {
    double r;
    double unperturbed;  ///< P(r)
    double moderated;    ///< P(r) Q(r)
    int phase_m;         ///< m of the e^{i m phi} factor
    bool prefactor_rule; ///< full psi carries an extra 1/sqrt(2 pi r)
};

/// Uniform radial samples of P and P*Q on [r_min, r_max].
std::vector<WavefunctionSample> wavefunction_samples(double r_min, double r_max,
                                                     int count,
                                                     const QuantumNumbers& qn,
                                                     const PlasmaFieldConfig& cfg);

// Quadrature counterparts of the closed forms. Each integrates over [0, R]
// with R chosen from the exponential envelope of P^2 (see quadrature.hpp)
// and requires sigma_0m > 0.

/// E1 by numeric integration of P^2 (c1 r).
double first_order_energy_quadrature(const QuantumNumbers& qn,
                                     const PlasmaFieldConfig& cfg);

/// E2 by numeric integration of P^2 (c2 r^2 - W1^2).
double second_order_energy_quadrature(const QuantumNumbers& qn,
                                      const PlasmaFieldConfig& cfg);

/// Third-order diagnostic E3 = integral of P^2 (c3 r^3 + W1 W2). Never part
/// of EnergyBreakdown::total.
double third_order_energy_quadrature(const QuantumNumbers& qn,
                                     const PlasmaFieldConfig& cfg);

/// Norm integral of the unperturbed amplitude (== 1 for exact arithmetic).
double wavefunction_norm(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

/// Norm integral of the moderated amplitude P*Q over the same window;
/// 1/sqrt of this renormalizes the moderated wavefunction if desired.
double moderated_norm(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

} // namespace plasmah
