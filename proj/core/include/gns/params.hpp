#pragma once

namespace gns {

/// All exponents of the functional-inequality family, derived from the
/// dimension d and the exponent p. Single source of truth: every other
/// module takes a Params and never re-derives these.
///
/// Admissible range: d >= 2, p > 1, and p < d/(d-2) for d >= 3. In terms of
/// the diffusion exponent m = (p+1)/(2p) this is m in (m_1, 1).
struct Params {
    int d = 0;            ///< space dimension
    double p = 0;         ///< interpolation exponent, p > 1
    double m = 0;         ///< diffusion exponent, m = (p+1)/(2p)
    double gamma = 0;     ///< (d+2-p(d-2)) / (d-p(d-4))
    double theta = 0;     ///< ((p-1)/p) * d/(d+2-p(d-2)), in (0, 1]
    double m_c = 0;       ///< (d-2)/d
    double m_1 = 0;       ///< (d-1)/d
    double m_tilde_1 = 0; ///< d/(d+2)
    double alpha = 0;     ///< d/p + 2 - d, scaling exponent of the gradient term
    double beta = 0;      ///< d(p-1)/(2p), scaling exponent of the L^{p+1} term
    double eta = 0;       ///< 1/(p(d+2-p(d-2)))
    double mass = 0;      ///< reference mass M > 0 (defaults to M*)

    /// d(m - m_c)/2, the exponent of sigma in the diffusion coefficient.
    double sigma_exponent() const { return 0.5 * d * (m - m_c); }
    /// d(1 - m)/2, the exponent scaling the entropy improvement term.
    double entropy_exponent() const { return 0.5 * d * (1.0 - m); }
};

/// Conversions between p and m (exact rational round trip).
double m_from_p(double p);
double p_from_m(double m);

/// Derive the full exponent set from (d, p) with the reference mass M*.
Params derive_params(int d, double p);

/// Same, with an explicit reference mass M > 0.
Params derive_params(int d, double p, double mass);

/// Derive from (d, m) instead; m must lie in (m_1, 1).
Params derive_params_m(int d, double m);
Params derive_params_m(int d, double m, double mass);

/// Reference mass M* = pi^{d/2} Gamma((d-p(d-4))/(2(p-1)))/Gamma(2p/(p-1)),
/// the mass of (1+|x|^2)^{1/(m-1)}.
double reference_mass(int d, double p);

} // namespace gns
