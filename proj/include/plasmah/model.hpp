#pragma once

#include <string>
#include <vector>

#include "plasmah/errors.hpp"

namespace plasmah {

/// Physical environment of the atom: screened Coulomb coupling, plasma mode,
/// external fields and atomic constants. Atomic units throughout
/// (e = c = 1 fixed; mu and hbar kept as explicit fields).
struct PlasmaFieldConfig {
    double A = 1.0;        ///< coupling strength Z e^2 (hartree * bohr)
    double lambda_d = 20.0; ///< Debye screening length (bohr)
    double g = 1.0;        ///< plasma mode: 0 weakly coupled, 1 dense quantum
    double F = 0.0;        ///< electric field strength (a.u.)
    double B = 0.0;        ///< magnetic field strength (a.u.)
    double xi = 0.0;       ///< AB-flux ratio Phi_AB / Phi_0 (integer-valued)
    double mu = 1.0;       ///< effective electron mass (a.u.)
    double hbar = 1.0;     ///< reduced Planck constant (a.u.)

    /// Cyclotron frequency omega_c = e B / (mu c); equals B for mu = 1.
    double omega_c() const { return B / mu; }

    /// Effective angular index m + xi.
    double flux_index(int m) const { return static_cast<double>(m) + xi; }
};

/// Hard-validates invariants (throws ArgumentError) and returns soft
/// warnings, e.g. for a non-integer AB-flux ratio used in exploratory sweeps.
std::vector<std::string> validate(const PlasmaFieldConfig& cfg);

/// State labels: radial quantum number n >= 0 and magnetic quantum number m.
struct QuantumNumbers {
    int n = 0;
    int m = 0;
};

/// The shape-invariance indices every closed-form formula consumes.
/// Signed convention: sigma_0m = m + xi + 1/2 (no absolute value); this is
/// the unique choice that reproduces the reference tables, including the
/// m = -1 rows.
struct SigmaIndex {
    double sigma_0;        ///< m + xi + 1/2
    double sigma_n;        ///< n + m + xi + 1/2 = sigma_0 + n
    double centrifugal_sq; ///< (sigma_0 - 1/2)^2 = (m + xi)^2
    double rho;            ///< A mu / (hbar^2 sigma_n)  (inverse bohr)
};

SigmaIndex sigma_index(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg);

/// Coefficients of the low-order expansion of the effective potential in
/// powers of 1/lambda_D:
///   U(r) ~ c_inv/r + c_cent/r^2 + c0 + c1 r + c2 r^2 + c3 r^3
struct SeriesCoefficients {
    double c_inv;  ///< -A
    double c_cent; ///< (hbar^2/2mu) ((m+xi)^2 - 1/4)
    double c0;     ///< A/lambda_D + (omega_c hbar / 2)(m+xi)
    double c1;     ///< -[F + (A/lambda_D^2)(1/2 - g^2/2)]
    double c2;     ///< (A/lambda_D^3)(1/6 - g^2/2) + mu omega_c^2 / 8
    double c3;     ///< -(A/lambda_D^4)(1/24 - g^2/4 + g^4/24)
};

SeriesCoefficients series_coefficients(const QuantumNumbers& qn,
                                       const PlasmaFieldConfig& cfg);

/// Exact effective potential (hartree) at radius r (bohr):
///   -(A/r) exp(-r/lambda_D) cos(g r/lambda_D) - F r
///   + (omega_c hbar/2)(m+xi) + (mu omega_c^2/8) r^2
///   + (hbar^2/2mu) ((m+xi)^2 - 1/4)/r^2
/// Throws DomainError for r <= 0.
double effective_potential(double r, const QuantumNumbers& qn,
                           const PlasmaFieldConfig& cfg);

/// Truncated series form of the effective potential (through r^3).
/// Throws DomainError for r <= 0.
double series_potential(double r, const QuantumNumbers& qn,
                        const PlasmaFieldConfig& cfg);

} // namespace plasmah
