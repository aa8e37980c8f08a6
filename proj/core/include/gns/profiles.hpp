#pragma once

#include "gns/params.hpp"
#include "gns/radial.hpp"

namespace gns {

/// Explicit profile constants at mass M: the manifold member with scale
/// sigma and mass M is sigma^{-d/2} (c_m + r^2/sigma)^{1/(m-1)}.
struct BarenblattConstants {
    double m_star; ///< reference mass
    double c_1;    ///< m_star^{1-gamma}
    double k_1;    ///< second moment of the unit-mass profile
    double c_m;    ///< c_1 * M^{gamma-1}
    double k_m;    ///< k_1 * M^gamma, second moment of B_1 at mass M
    double ib1m;   ///< int B_1^m = 2m/((d+2)m-d) * c_1 * M^gamma
};

/// Closed-form constants of the Barenblatt family at mass M.
BarenblattConstants barenblatt_constants(const Params& params, double M);

/// Barenblatt profile B_sigma at mass M sampled on `grid`;
/// tail exponent is the exact 2/(m-1).
RadialFunction barenblatt(const Params& params, double M, double sigma, GridPtr grid);

/// Evaluate B_sigma at one radius (no grid).
double barenblatt_value(const Params& params, double M, double sigma, double r);

/// Optimal profile f with f^{2p} = B_sigma pointwise:
/// f = sigma^{-d/(4p)} (c_m + r^2/sigma)^{-1/(p-1)}.
RadialFunction optimal_f(const Params& params, double M, double sigma, GridPtr grid);

/// Mass-preserving scaling u_lambda(x) = lambda^d u(lambda x). Returned on the
/// rescaled grid (nodes r_i/lambda) so the transport is exact; the second
/// moment is divided by lambda^2 and a Barenblatt B_sigma maps to B_{sigma/lambda^2}.
RadialFunction rescale_mass_preserving(const RadialFunction& u, double lambda);

/// Homogeneous scaling u -> lambda*u on the same grid (mass becomes lambda*M).
RadialFunction rescale_homogeneous(const RadialFunction& u, double lambda);

/// Best-match scale factor induced by u -> lambda*u:
/// sigma_lambda = lambda^{2(1-m)/(d(m-m_c))} * sigma.
double homogeneous_sigma_factor(const Params& params, double lambda);

/// Fraction of the second moment of B_sigma lying beyond radius R
/// (power-law estimate of the truncated tail, relative to sigma*k_m).
double barenblatt_tail_deficit(const Params& params, double M, double sigma, double R);

/// Smallest domain radius R such that barenblatt_tail_deficit <= tail_budget.
double default_radius(const Params& params, double sigma, double M,
                      double tail_budget = 1e-10);

} // namespace gns
