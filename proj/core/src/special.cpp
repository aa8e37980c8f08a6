#include "gns/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gns {

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive, got " +
                                std::to_string(x));
    }
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign); // reentrant, sign is +1 for x > 0
#else
    return std::lgamma(x);
#endif
}

double sphere_surface(int d) {
    if (d < 1) throw std::domain_error("sphere_surface: dimension must be >= 1");
    const double half_d = 0.5 * d;
    return 2.0 * std::exp(half_d * std::log(M_PI) - log_gamma(half_d));
}

double quad_tolerance() {
    static const double tol = [] {
        if (const char* env = std::getenv("GNS_QUAD_TOL")) {
            const double v = std::atof(env);
            if (v > 0.0) return v;
        }
        return 1e-9;
    }();
    return tol;
}

double golden_section_min(ScalarFn fn, double a, double b, double xtol) {
    if (!(a < b)) throw std::invalid_argument("golden_section_min: need a < b");
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    while (b - a > xtol * (std::abs(a) + std::abs(b)) + xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = fn(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace gns
