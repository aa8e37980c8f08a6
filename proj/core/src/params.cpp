#include "gns/params.hpp"

#include "gns/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gns {

namespace {

constexpr double kCriticalTol = 1e-13;

void check_range(int d, double p) {
    if (d < 2) {
        throw std::domain_error("derive_params: dimension d must be >= 2, got " +
                                std::to_string(d));
    }
    if (!(p > 1.0)) {
        throw std::domain_error("derive_params: exponent p must exceed 1, got " +
                                std::to_string(p));
    }
    if (d >= 3) {
        const double p_crit = static_cast<double>(d) / (d - 2);
        if (std::abs(p - p_crit) <= kCriticalTol * p_crit) {
            throw std::domain_error("derive_params: critical case unsupported (p = d/(d-2))");
        }
        if (p > p_crit) {
            throw std::domain_error("derive_params: p must be below d/(d-2) = " +
                                    std::to_string(p_crit) + ", got " + std::to_string(p));
        }
    }
    if (!std::isfinite(p)) {
        throw std::domain_error("derive_params: p must be finite");
    }
}

} // namespace

double m_from_p(double p) { return (p + 1.0) / (2.0 * p); }
double p_from_m(double m) { return 1.0 / (2.0 * m - 1.0); }

double reference_mass(int d, double p) {
    const double a = (d - p * (d - 4.0)) / (2.0 * (p - 1.0));
    const double b = 2.0 * p / (p - 1.0);
    return std::exp(0.5 * d * std::log(M_PI) + log_gamma(a) - log_gamma(b));
}

Params derive_params(int d, double p, double mass) {
    check_range(d, p);
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::domain_error("derive_params: mass must be positive, got " +
                                std::to_string(mass));
    }
    Params q;
    q.d = d;
    q.p = p;
    q.m = m_from_p(p);
    q.gamma = (d + 2.0 - p * (d - 2.0)) / (d - p * (d - 4.0));
    q.theta = (p - 1.0) / p * d / (d + 2.0 - p * (d - 2.0));
    q.m_c = (d - 2.0) / d;
    q.m_1 = (d - 1.0) / d;
    q.m_tilde_1 = static_cast<double>(d) / (d + 2.0);
    q.alpha = d / p + 2.0 - d;
    q.beta = d * (p - 1.0) / (2.0 * p);
    q.eta = 1.0 / (p * (d + 2.0 - p * (d - 2.0)));
    q.mass = mass;
    return q;
}

Params derive_params(int d, double p) {
    check_range(d, p);
    return derive_params(d, p, reference_mass(d, p));
}

Params derive_params_m(int d, double m, double mass) {
    if (!(m > 0.5) || !(m < 1.0)) {
        throw std::domain_error("derive_params_m: m must lie in (1/2, 1), got " +
                                std::to_string(m));
    }
    return derive_params(d, p_from_m(m), mass);
}

Params derive_params_m(int d, double m) {
    if (!(m > 0.5) || !(m < 1.0)) {
        throw std::domain_error("derive_params_m: m must lie in (1/2, 1), got " +
                                std::to_string(m));
    }
    return derive_params(d, p_from_m(m));
}

} // namespace gns
