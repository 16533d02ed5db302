#include "plasmah/model.hpp"

#include <cmath>
#include <sstream>

namespace plasmah {

std::vector<std::string> validate(const PlasmaFieldConfig& cfg) {
    auto fail = [](const std::string& msg) { throw ArgumentError("config: " + msg); };
    if (!(cfg.lambda_d > 0.0)) fail("lambda_d must be > 0");
    if (!(cfg.mu > 0.0)) fail("mu must be > 0");
    if (!(cfg.hbar > 0.0)) fail("hbar must be > 0");
    if (!(cfg.A > 0.0)) fail("A must be > 0");
    if (cfg.g != 0.0 && cfg.g != 1.0) fail("g must be 0 (weakly coupled) or 1 (dense quantum)");
    if (cfg.F < 0.0) fail("F must be >= 0");
    if (cfg.B < 0.0) fail("B must be >= 0");

    std::vector<std::string> warnings;
    if (cfg.xi != std::floor(cfg.xi)) {
        std::ostringstream os;
        os << "xi = " << cfg.xi << " is not an integer; the AB-flux ratio is "
              "integer by convention, continuing anyway";
        warnings.push_back(os.str());
    }
    return warnings;
}

SigmaIndex sigma_index(const QuantumNumbers& qn, const PlasmaFieldConfig& cfg) {
    if (qn.n < 0) throw ArgumentError("quantum number n must be >= 0");
    SigmaIndex idx;
    idx.sigma_0 = cfg.flux_index(qn.m) + 0.5;
    idx.sigma_n = idx.sigma_0 + qn.n;
    const double mx = idx.sigma_0 - 0.5;
    idx.centrifugal_sq = mx * mx;
    if (idx.sigma_n == 0.0)
        throw DegenerateIndexError("sigma_nm = 0: rho and the unperturbed energy are singular");
    idx.rho = cfg.A * cfg.mu / (cfg.hbar * cfg.hbar * idx.sigma_n);
    return idx;
}

double effective_potential(double r, const QuantumNumbers& qn,
                           const PlasmaFieldConfig& cfg) {
    if (!(r > 0.0)) throw DomainError("effective_potential: r must be > 0");
    const double mx = cfg.flux_index(qn.m);
    const double wc = cfg.omega_c();
    const double u = r / cfg.lambda_d;
    return -(cfg.A / r) * std::exp(-u) * std::cos(cfg.g * u)
           - cfg.F * r
           + 0.5 * wc * cfg.hbar * mx
           + 0.125 * cfg.mu * wc * wc * r * r
           + (cfg.hbar * cfg.hbar / (2.0 * cfg.mu)) * (mx * mx - 0.25) / (r * r);
}

SeriesCoefficients series_coefficients(const QuantumNumbers& qn,
                                       const PlasmaFieldConfig& cfg) {
    const double mx = cfg.flux_index(qn.m);
    const double wc = cfg.omega_c();
    const double g2 = cfg.g * cfg.g;
    const double ld = cfg.lambda_d;

    SeriesCoefficients c;
    c.c_inv = -cfg.A;
    c.c_cent = (cfg.hbar * cfg.hbar / (2.0 * cfg.mu)) * (mx * mx - 0.25);
    c.c0 = cfg.A / ld + 0.5 * wc * cfg.hbar * mx;
    c.c1 = -(cfg.F + (cfg.A / (ld * ld)) * (0.5 - 0.5 * g2));
    c.c2 = (cfg.A / (ld * ld * ld)) * (1.0 / 6.0 - 0.5 * g2) + cfg.mu * wc * wc / 8.0;
    c.c3 = -(cfg.A / (ld * ld * ld * ld)) * (1.0 / 24.0 - 0.25 * g2 + g2 * g2 / 24.0);
    return c;
}

double series_potential(double r, const QuantumNumbers& qn,
                        const PlasmaFieldConfig& cfg) {
    if (!(r > 0.0)) throw DomainError("series_potential: r must be > 0");
    const SeriesCoefficients c = series_coefficients(qn, cfg);
    return c.c_inv / r + c.c_cent / (r * r) + c.c0 + c.c1 * r + c.c2 * r * r
           + c.c3 * r * r * r;
}

} // namespace plasmah
