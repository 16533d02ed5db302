#include "plasmah/quadrature.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "plasmah/errors.hpp"

namespace plasmah {

namespace {

double gsl_trampoline(double x, void* params) {
    const auto* f = static_cast<const std::function<double(double)>*>(params);
    return (*f)(x);
}

const bool gsl_handler_disabled = [] {
    gsl_set_error_handler_off();
    return true;
}();

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs, double epsrel) {
    (void)gsl_handler_disabled;
    constexpr std::size_t limit = 2048;
    std::unique_ptr<gsl_integration_workspace,
                    decltype(&gsl_integration_workspace_free)>
        ws(gsl_integration_workspace_alloc(limit), gsl_integration_workspace_free);

    gsl_function gf;
    gf.function = &gsl_trampoline;
    gf.params = const_cast<std::function<double(double)>*>(&f);

    double result = 0.0;
    double abserr = 0.0;
    const int status = gsl_integration_qag(&gf, a, b, epsabs, epsrel, limit,
                                           GSL_INTEG_GAUSS61, ws.get(), &result,
                                           &abserr);
    if (status != GSL_SUCCESS && status != GSL_EROUND) {
        std::ostringstream os;
        os << "quadrature did not converge on [" << a << ", " << b
           << "]: status=" << gsl_strerror(status) << ", residual estimate="
           << abserr;
        throw QuadratureError(os.str());
    }
    return result;
}

double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, double tol) {
    const auto composite = [&](int n) {
        const double h = (b - a) / n;
        double odd = 0.0, even = 0.0;
        for (int i = 1; i < n; i += 2) odd += f(a + i * h);
        for (int i = 2; i < n; i += 2) even += f(a + i * h);
        return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
    };
    double prev = composite(64);
    for (int n = 128; n <= (1 << 22); n *= 2) {
        const double cur = composite(n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    throw QuadratureError("composite Simpson rule did not converge");
}

double radial_cutoff(double rho, double power, double norm_factor) {
    if (!(rho > 0.0)) throw DomainError("radial_cutoff: rho must be > 0");
    // Solve 2 rho R - power * ln R = ln(1e18 * norm_factor) by fixed point.
    const double target = std::log(1e18) + std::log(std::max(norm_factor, 1.0));
    double r = (target + 40.0) / (2.0 * rho);
    for (int i = 0; i < 64; ++i) {
        const double next = (target + power * std::log(std::max(r, 1.0))) / (2.0 * rho);
        if (std::abs(next - r) < 1e-9 * r) { r = next; break; }
        r = next;
    }
    return std::max(r, 1.0 / rho);
}

} // namespace plasmah
