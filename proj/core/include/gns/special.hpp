#pragma once

namespace gns {

/// Natural log of the Gamma function for x > 0.
/// Relative error is at the libm level (a couple of ulp); throws
/// std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

/// Surface measure of the unit (d-1)-sphere, 2*pi^{d/2}/Gamma(d/2).
double sphere_surface(int d);

/// Type-erased view of a callable double -> double. Only valid for the
/// duration of the call it is passed to (it keeps a pointer to the callable).
class ScalarFn {
public:
    template <class F>
    ScalarFn(const F& f)
        : fn_(&f),
          call_([](const void* p, double x) { return (*static_cast<const F*>(p))(x); }) {}
    double operator()(double x) const { return call_(fn_, x); }

private:
    const void* fn_;
    double (*call_)(const void*, double);
};

/// Golden-section minimizer of a strictly unimodal function on [a, b].
/// Returns the abscissa of the minimum located to within xtol*|x| + xtol.
double golden_section_min(ScalarFn fn, double a, double b, double xtol);

/// Quadrature tolerance used by internal convergence checks; defaults to
/// 1e-9, overridable through the GNS_QUAD_TOL environment variable
/// (read once per process).
double quad_tolerance();

} // namespace gns
