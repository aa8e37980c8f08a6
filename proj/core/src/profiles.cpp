#include "gns/profiles.hpp"

#include "gns/special.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace gns {

BarenblattConstants barenblatt_constants(const Params& params, double M) {
    if (!(M > 0.0)) throw std::domain_error("barenblatt_constants: mass must be positive");
    BarenblattConstants c;
    c.m_star = reference_mass(params.d, params.p);
    const double g = params.gamma;
    c.c_1 = std::pow(c.m_star, 1.0 - g);
    const double denom = (params.d + 2.0) * params.m - params.d;
    c.k_1 = params.d * (1.0 - params.m) / denom * c.c_1;
    c.c_m = c.c_1 * std::pow(M, g - 1.0);
    c.k_m = c.k_1 * std::pow(M, g);
    c.ib1m = 2.0 * params.m / denom * c.c_1 * std::pow(M, g);
    return c;
}

double barenblatt_value(const Params& params, double M, double sigma, double r) {
    const BarenblattConstants c = barenblatt_constants(params, M);
    return std::pow(sigma, -0.5 * params.d) *
           std::pow(c.c_m + r * r / sigma, 1.0 / (params.m - 1.0));
}

RadialFunction barenblatt(const Params& params, double M, double sigma, GridPtr grid) {
    if (!(sigma > 0.0)) throw std::domain_error("barenblatt: sigma must be positive");
    if (!(M > 0.0)) throw std::domain_error("barenblatt: mass must be positive");
    const BarenblattConstants c = barenblatt_constants(params, M);
    const double pref = std::pow(sigma, -0.5 * params.d);
    const double e = 1.0 / (params.m - 1.0);
    std::vector<double> v(grid->size());
    for (int i = 0; i < grid->size(); ++i) {
        const double r = grid->node(i);
        v[i] = pref * std::pow(c.c_m + r * r / sigma, e);
    }
    return RadialFunction{std::move(grid), std::move(v), 2.0 / (params.m - 1.0)};
}

RadialFunction optimal_f(const Params& params, double M, double sigma, GridPtr grid) {
    if (!(sigma > 0.0)) throw std::domain_error("optimal_f: sigma must be positive");
    const BarenblattConstants c = barenblatt_constants(params, M);
    const double pref = std::pow(sigma, -0.25 * params.d / params.p);
    const double e = -1.0 / (params.p - 1.0);
    std::vector<double> v(grid->size());
    for (int i = 0; i < grid->size(); ++i) {
        const double r = grid->node(i);
        v[i] = pref * std::pow(c.c_m + r * r / sigma, e);
    }
    return RadialFunction{std::move(grid), std::move(v), -2.0 / (params.p - 1.0)};
}

RadialFunction rescale_mass_preserving(const RadialFunction& u, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("rescale_mass_preserving: lambda must be positive");
    const RadialGrid& g = *u.grid;
    GridPtr scaled = build_grid(g.dim(), g.size(), g.radius() / lambda, g.grading());
    const double pref = std::pow(lambda, g.dim());
    std::vector<double> v(u.values);
    for (double& x : v) x *= pref;
    return RadialFunction{std::move(scaled), std::move(v), u.tail_exponent};
}

RadialFunction rescale_homogeneous(const RadialFunction& u, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("rescale_homogeneous: lambda must be positive");
    std::vector<double> v(u.values);
    for (double& x : v) x *= lambda;
    return RadialFunction{u.grid, std::move(v), u.tail_exponent};
}

double homogeneous_sigma_factor(const Params& params, double lambda) {
    return std::pow(lambda, 2.0 * (1.0 - params.m) / (params.d * (params.m - params.m_c)));
}

double barenblatt_tail_deficit(const Params& params, double M, double sigma, double R) {
    const BarenblattConstants c = barenblatt_constants(params, M);
    // B_sigma ~ sigma^{1/(1-m)-d/2} r^{2/(m-1)} for r^2 >> sigma c_m, so the
    // second-moment tail is S_d sigma^{1/(1-m)-d/2} R^{-e} / e with
    // e = 2/(1-m) - d - 2 (> 0 in the admissible range).
    const double e = 2.0 / (1.0 - params.m) - params.d - 2.0;
    const double tail = sphere_surface(params.d) *
                        std::pow(sigma, 1.0 / (1.0 - params.m) - 0.5 * params.d) *
                        std::pow(R, -e) / e;
    return tail / (sigma * c.k_m);
}

double default_radius(const Params& params, double sigma, double M, double tail_budget) {
    const BarenblattConstants c = barenblatt_constants(params, M);
    const double e = 2.0 / (1.0 - params.m) - params.d - 2.0;
    if (!(e > 0.0)) throw std::domain_error("default_radius: second moment tail diverges");
    const double num = sphere_surface(params.d) *
                       std::pow(sigma, 1.0 / (1.0 - params.m) - 0.5 * params.d);
    return std::pow(num / (e * tail_budget * sigma * c.k_m), 1.0 / e);
}

} // namespace gns
