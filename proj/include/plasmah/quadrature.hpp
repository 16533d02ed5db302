#pragma once

#include <functional>

namespace plasmah {

/// Adaptive Gauss-Kronrod integration of f over [a, b] (GSL QAG, 61-point
/// rule), absolute tolerance 1e-12 / relative 1e-12 by default.
/// Throws QuadratureError when neither tolerance can be met; the error
/// message carries the residual estimate.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs = 1e-12, double epsrel = 1e-12);

/// Composite-Simpson integration with uniform refinement until two successive
/// levels agree to tol. Deliberately independent of the adaptive rule; used
/// for two-rule agreement checks.
double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, double tol = 1e-12);

/// Outer radius R such that the integrand envelope exp(-2 rho R) R^power,
/// rescaled by norm_factor, drops below 1e-18.
double radial_cutoff(double rho, double power, double norm_factor = 1.0);

} // namespace plasmah
