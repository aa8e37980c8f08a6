#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gns {

/// Graded radial grid on [0, R]: nodes r_i = R*(i/(n-1))^q.
///
/// The grid owns precomputed quadrature weights for integrals over [0, R]
/// (trapezoid in the map coordinate with third-order end corrections, so the
/// rule is fourth-order on smooth integrands while keeping all weights
/// positive) and the surface measure of the unit (d-1)-sphere.
class RadialGrid {
public:
    RadialGrid(int d, int n, double R, double q);

    int dim() const { return d_; }
    int size() const { return n_; }
    double radius() const { return R_; }
    double grading() const { return q_; }
    double sphere_factor() const { return sphere_factor_; }
    const std::vector<double>& nodes() const { return nodes_; }
    double node(int i) const { return nodes_[i]; }
    /// Weight of node i in the line quadrature  int_0^R F(r) dr ~ sum w_i F(r_i).
    const std::vector<double>& line_weights() const { return weights_; }

private:
    int d_;
    int n_;
    double R_;
    double q_;
    double sphere_factor_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Build a graded grid; n >= 3, R > 0, q >= 1.
GridPtr build_grid(int d, int n, double R, double q);

/// A sampled radial function. `tail_exponent` is the power-law decay rate
/// assumed beyond R for the analytic tail correction; -inf means the
/// function is treated as identically zero beyond R.
struct RadialFunction {
    GridPtr grid;
    std::vector<double> values;
    double tail_exponent;

    double operator[](int i) const { return values[i]; }
    int size() const { return static_cast<int>(values.size()); }
};

/// Construct a RadialFunction by sampling; no sign restriction.
RadialFunction make_radial(GridPtr grid, std::vector<double> values, double tail_exponent);

/// int_{R^d} |x|^k g dx  =  sphere_factor * ( int_0^R g r^{k+d-1} dr + tail ).
/// Throws std::domain_error if the tail correction would diverge
/// (tail_exponent + k + d >= 0 with a nonzero boundary value).
double integrate_radial(const RadialFunction& g, int k = 0);

/// Radial derivative g'(r): second-order finite differences on the
/// (non-uniform) nodes, one-sided at the ends, forced to 0 at r = 0.
RadialFunction differentiate(const RadialFunction& g);

/// Pointwise power g^e (values must be nonnegative); tail scales to e*tail.
RadialFunction pow_radial(const RadialFunction& g, double e);

/// Fit a power-law decay exponent on the last decade of nodes (r in [R/10, R]).
/// Returns -inf if the data there is not positive.
double fit_tail_exponent(const RadialGrid& grid, const std::vector<double>& values);

/// Load a profile from CSV with header "r,u" (strictly increasing r) and
/// resample onto `grid` by monotone cubic interpolation; clamps to >= 0.
RadialFunction load_profile_csv(const std::string& path, GridPtr grid);

/// Write a profile as CSV with header "r,u".
void save_profile_csv(const RadialFunction& g, const std::string& path);

/// Monotone cubic (Fritsch-Carlson) interpolation of (x_i, y_i) at xq;
/// constant extrapolation of the end values outside [x_front, x_back].
double pchip_eval(const std::vector<double>& x, const std::vector<double>& y, double xq);

} // namespace gns
