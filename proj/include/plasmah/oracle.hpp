#pragma once

#include <vector>

#include "plasmah/model.hpp"
#include "plasmah/susy.hpp"

namespace plasmah {

/// Uniform radial grid. Points are r_i = r_min + i * spacing for
/// i = 0 .. n_points-1 with r_max = r_min + (n_points-1) * spacing; the
/// discretization imposes H = 0 at the ghost points r_min - spacing and
/// r_max + spacing. The default policy uses r_min = spacing so the inner
/// ghost sits exactly at r = 0.
struct RadialGrid {
    double r_min;
    double r_max;
    int n_points;

    double spacing() const { return (r_max - r_min) / (n_points - 1); }
    double point(int i) const { return r_min + i * spacing(); }
};

/// Symmetric tridiagonal operator: diagonal[i] plus one shared
/// sub/super-diagonal array.
struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    int size() const { return static_cast<int>(diagonal.size()); }
};

/// Central second-difference discretization of -(hbar^2/2mu) d^2/dr^2 + U_eff
/// on the given grid, with the exact (non-truncated) effective potential:
///   diagonal[i]     = hbar^2/(mu h^2) + U_eff(r_i)
///   off_diagonal[i] = -hbar^2/(2 mu h^2)
/// Throws UnboundedPotentialError when cfg.F > 0 and box_mode is false:
/// -F r destroys all bound states, so eigenvalues of the finite box are
/// resonance estimates only.
TridiagonalOperator build_hamiltonian(const RadialGrid& grid, const QuantumNumbers& qn,
                                      const PlasmaFieldConfig& cfg,
                                      bool box_mode = false);

/// k smallest eigenvalues of a symmetric tridiagonal operator by
/// Sturm-sequence bisection, each to absolute tolerance tol.
/// Throws ArgumentError when k > n_points.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int k,
                                       double tol = 1e-10);

/// Eigenvector for a converged eigenvalue by shifted inverse iteration.
std::vector<double> tridiagonal_eigenvector(const TridiagonalOperator& op,
                                            double eigenvalue);

/// Number of strict sign changes along a vector (tiny entries skipped);
/// by Sturm oscillation the j-th eigenvector has exactly j of them.
int count_sign_changes(const std::vector<double>& v);

/// Grid policy for the self-refining eigensolve.
struct GridPolicy {
    int initial_points = 4096;
    int max_points = 1 << 19;
    double target_estimate = 1e-6; ///< stop once Richardson estimate is below
    double r_max_factor = 40.0;    ///< r_max = factor * sigma_n^2 hbar^2/(mu A)
    double r_max_override = 0.0;   ///< > 0 forces r_max
    bool box_mode = false;
};

/// Spectrum of one magnetic sector from the exact-potential eigensolver.
struct OracleSpectrum {
    std::vector<double> eigenvalues; ///< Richardson-extrapolated, ascending;
                                     ///< index j corresponds to n = j
    std::vector<double> converged;   ///< per-eigenvalue error estimates
    RadialGrid grid;                 ///< finest grid used
    int m;                           ///< magnetic quantum number of the sector
};

/// Lowest k eigenvalues for fixed m. Solves on grids (N, 2N), doubling N
/// until the Richardson estimate |E_2N - E_N|/3 falls below the policy
/// target (or max_points is hit; then the estimates simply stay above the
/// target, which is reported, not fatal).
OracleSpectrum oracle_spectrum(int m, int k, const PlasmaFieldConfig& cfg,
                               const GridPolicy& policy = {});

/// Perturbative total vs. oracle eigenvalue for one state.
struct OracleComparison {
    EnergyBreakdown perturbative;
    double oracle_energy;
    double abs_gap;
    double rel_gap;
    double oracle_estimate;  ///< oracle's own convergence estimate
    bool outside_validity;   ///< lambda_D < 2 or |e2| > 0.5 |e0|
};

OracleComparison compare_with_perturbation(const QuantumNumbers& qn,
                                           const PlasmaFieldConfig& cfg,
                                           const GridPolicy& policy = {});

} // namespace plasmah
