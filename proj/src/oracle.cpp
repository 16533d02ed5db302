#include "plasmah/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace plasmah {

namespace {

void require_bounded(const PlasmaFieldConfig& cfg, bool box_mode) {
    if (cfg.F > 0.0 && !box_mode)
        throw UnboundedPotentialError(
            "F > 0: -F r makes the spectrum continuous; enable box mode to "
            "compute box-regularized resonance estimates instead");
}

// Sturm count: number of eigenvalues strictly below x.
int sturm_count(const TridiagonalOperator& op, double x) {
    const int n = op.size();
    constexpr double tiny = 1e-300;
    int count = 0;
    double d = 1.0;
    for (int i = 0; i < n; ++i) {
        const double off2 = i > 0 ? op.off_diagonal[i - 1] * op.off_diagonal[i - 1] : 0.0;
        d = op.diagonal[i] - x - off2 / d;
        if (d == 0.0) d = -tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

// The regularized representation used by oracle_spectrum: the substitution
// H = sqrt(r) phi turns the radial equation into the cylindrically symmetric
// form -(hbar^2/2mu)(1/r)(r phi')' + [U_eff + hbar^2/(8 mu r^2)] phi = E phi,
// which a finite-volume scheme on the half-offset grid r_i = (i - 1/2) h
// discretizes with O(h^2) accuracy for every sector, including the critical
// m + xi = 0 one where the plain H-form stencil converges only
// logarithmically. Same spectrum; eigenvectors are H_i / sqrt(r_i).
TridiagonalOperator build_regularized(double r_max, int n_points,
                                      const QuantumNumbers& qn,
                                      const PlasmaFieldConfig& cfg, bool box_mode) {
    require_bounded(cfg, box_mode);
    if (n_points < 2) throw ArgumentError("build_regularized: need n_points >= 2");
    const double h = r_max / n_points;
    const double kin = cfg.hbar * cfg.hbar / (cfg.mu * h * h);
    TridiagonalOperator op;
    op.diagonal.resize(n_points);
    op.off_diagonal.resize(n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double r = (i + 0.5) * h;
        op.diagonal[i] = kin + effective_potential(r, qn, cfg)
                         + cfg.hbar * cfg.hbar / (8.0 * cfg.mu * r * r);
        if (i + 1 < n_points)
            op.off_diagonal[i] =
                -0.5 * kin * (i + 1.0) / std::sqrt((i + 0.5) * (i + 1.5));
    }
    return op;
}

RadialGrid regularized_grid(double r_max, int n_points) {
    const double h = r_max / n_points;
    return {0.5 * h, r_max - 0.5 * h, n_points};
}

} // namespace

TridiagonalOperator build_hamiltonian(const RadialGrid& grid, const QuantumNumbers& qn,
                                      const PlasmaFieldConfig& cfg, bool box_mode) {
    require_bounded(cfg, box_mode);
    if (!(grid.r_min > 0.0) || !(grid.r_max > grid.r_min) || grid.n_points < 2)
        throw ArgumentError("build_hamiltonian: need 0 < r_min < r_max and n_points >= 2");
    const double h = grid.spacing();
    const double kin = cfg.hbar * cfg.hbar / (cfg.mu * h * h);
    TridiagonalOperator op;
    op.diagonal.resize(grid.n_points);
    op.off_diagonal.assign(grid.n_points - 1, -0.5 * kin);
    for (int i = 0; i < grid.n_points; ++i)
        op.diagonal[i] = kin + effective_potential(grid.point(i), qn, cfg);
    return op;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int k,
                                       double tol) {
    const int n = op.size();
    if (k < 1 || k > n)
        throw ArgumentError("lowest_eigenvalues: need 1 <= k <= n_points");

    // Gershgorin bounds.
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
        lo = std::min(lo, op.diagonal[i] - radius);
        hi = std::max(hi, op.diagonal[i] + radius);
    }

    std::vector<double> out(k);
    double lower = lo;
    for (int j = 0; j < k; ++j) {
        double a = lower, b = hi;
        for (int it = 0; it < 200 && b - a > tol; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(op, mid) >= j + 1)
                b = mid;
            else
                a = mid;
        }
        out[j] = 0.5 * (a + b);
        lower = a; // eigenvalues ascend; reuse the bracket
    }
    return out;
}

std::vector<double> tridiagonal_eigenvector(const TridiagonalOperator& op,
                                            double eigenvalue) {
    const int n = op.size();
    // LU factorization with partial pivoting of (T - lambda I); tridiagonal
    // plus one fill-in superdiagonal.
    std::vector<double> dl(n, 0.0), d(n), du(n, 0.0), du2(n, 0.0);
    std::vector<int> piv(n, 0);

    auto factor = [&]() {
        for (int i = 0; i < n; ++i) d[i] = op.diagonal[i] - eigenvalue;
        for (int i = 0; i + 1 < n; ++i) {
            dl[i] = op.off_diagonal[i];
            du[i] = op.off_diagonal[i];
        }
        const double safe = 1e-290;
        for (int i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (std::abs(d[i]) < safe) d[i] = safe;
                const double m = dl[i] / d[i];
                d[i + 1] -= m * du[i];
                dl[i] = m; // store multiplier
                piv[i] = 0;
            } else {
                const double m = d[i] / dl[i];
                d[i] = dl[i];
                const double tmp = d[i + 1];
                d[i + 1] = du[i] - m * tmp;
                du2[i] = i + 2 < n ? du[i + 1] : 0.0;
                du[i] = tmp;
                if (i + 2 < n) du[i + 1] = -m * du2[i];
                dl[i] = m;
                piv[i] = 1;
            }
        }
        if (std::abs(d[n - 1]) < safe) d[n - 1] = safe;
    };

    auto solve = [&](std::vector<double>& x) {
        for (int i = 0; i + 1 < n; ++i) {
            if (piv[i] == 0) {
                x[i + 1] -= dl[i] * x[i];
            } else {
                std::swap(x[i], x[i + 1]);
                x[i + 1] -= dl[i] * x[i];
            }
        }
        x[n - 1] /= d[n - 1];
        if (n > 1) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
        for (int i = n - 3; i >= 0; --i)
            x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    };

    factor();
    // Deterministic pseudo-random start vector.
    std::vector<double> x(n);
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < n; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
    }
    for (int pass = 0; pass < 3; ++pass) {
        solve(x);
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : x) v /= norm;
    }
    return x;
}

int count_sign_changes(const std::vector<double>& v) {
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    const double eps = 1e-9 * scale;
    int changes = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) <= eps) continue;
        if (prev != 0.0 && x * prev < 0.0) ++changes;
        prev = x;
    }
    return changes;
}

OracleSpectrum oracle_spectrum(int m, int k, const PlasmaFieldConfig& cfg,
                               const GridPolicy& policy) {
    if (k < 1) throw ArgumentError("oracle_spectrum: need k >= 1");
    require_bounded(cfg, policy.box_mode);

    const QuantumNumbers qn{0, m};
    const double nu = std::abs(cfg.flux_index(m));
    // Decay index of the highest requested node count; screening only
    // shortens the tail, so the Coulomb estimate is an upper bound.
    const double sigma_top = nu + (k - 1) + 0.5;
    const double r_max =
        policy.r_max_override > 0.0
            ? policy.r_max_override
            : policy.r_max_factor * sigma_top * sigma_top * cfg.hbar * cfg.hbar
                  / (cfg.mu * cfg.A);

    int n = std::max(policy.initial_points, 2 * k);
    auto solve = [&](int points) {
        return lowest_eigenvalues(
            build_regularized(r_max, points, qn, cfg, policy.box_mode), k);
    };

    std::vector<double> coarse = solve(n);
    std::vector<double> fine = solve(2 * n);
    auto estimate = [&]() {
        double worst = 0.0;
        for (int j = 0; j < k; ++j)
            worst = std::max(worst, std::abs(fine[j] - coarse[j]) / 3.0);
        return worst;
    };
    while (estimate() > policy.target_estimate && 4 * n <= policy.max_points) {
        n *= 2;
        coarse = std::move(fine);
        fine = solve(2 * n);
    }

    OracleSpectrum spec;
    spec.m = m;
    spec.grid = regularized_grid(r_max, 2 * n);
    spec.eigenvalues.resize(k);
    spec.converged.resize(k);
    for (int j = 0; j < k; ++j) {
        spec.eigenvalues[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
        spec.converged[j] = std::abs(fine[j] - coarse[j]) / 3.0;
    }
    return spec;
}

OracleComparison compare_with_perturbation(const QuantumNumbers& qn,
                                           const PlasmaFieldConfig& cfg,
                                           const GridPolicy& policy) {
    const SigmaIndex s = sigma_index(qn, cfg);
    const double nu = std::abs(s.sigma_0 - 0.5);
    // Node index of the oracle state matching this sigma ladder entry.
    const double j_real = std::abs(s.sigma_n) - nu - 0.5;
    const int j = static_cast<int>(std::lround(j_real));
    if (j < 0 || std::abs(j_real - j) > 1e-9) {
        std::ostringstream os;
        os << "state (n=" << qn.n << ", m=" << qn.m << ", xi=" << cfg.xi
           << ") has no node-indexed oracle counterpart (sigma_nm=" << s.sigma_n
           << ")";
        throw ArgumentError(os.str());
    }

    OracleComparison cmp;
    cmp.perturbative = total_energy(qn, cfg);
    const OracleSpectrum spec = oracle_spectrum(qn.m, j + 1, cfg, policy);
    cmp.oracle_energy = spec.eigenvalues[j];
    cmp.oracle_estimate = spec.converged[j];
    cmp.abs_gap = std::abs(cmp.perturbative.total - cmp.oracle_energy);
    const double denom = std::max(std::abs(cmp.perturbative.total),
                                  std::abs(cmp.oracle_energy));
    cmp.rel_gap = denom > 0.0 ? cmp.abs_gap / denom : 0.0;
    cmp.outside_validity = cfg.lambda_d < 2.0
                           || std::abs(cmp.perturbative.e2)
                                  > 0.5 * std::abs(cmp.perturbative.e0);
    return cmp;
}

} // namespace plasmah
