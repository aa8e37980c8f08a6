#include "gns/radial.hpp"

#include "gns/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gns {

RadialGrid::RadialGrid(int d, int n, double R, double q)
    : d_(d), n_(n), R_(R), q_(q) {
    if (d < 2) throw std::domain_error("RadialGrid: dimension must be >= 2");
    if (n < 3) throw std::domain_error("RadialGrid: need at least 3 nodes, got " +
                                       std::to_string(n));
    if (!(R > 0.0)) throw std::domain_error("RadialGrid: R must be positive");
    if (!(q >= 1.0)) throw std::domain_error("RadialGrid: grading exponent q must be >= 1");

    sphere_factor_ = sphere_surface(d);
    nodes_.resize(n);
    weights_.resize(n);

    const double h = 1.0 / (n - 1);
    // Map-space derivative r'(x) = R q x^{q-1}; trapezoid weights in x times r'.
    std::vector<double> map_deriv(n);
    for (int i = 0; i < n; ++i) {
        const double x = i * h;
        nodes_[i] = R * std::pow(x, q);
        map_deriv[i] = R * q * std::pow(x, q - 1.0);
    }
    nodes_[0] = 0.0;
    nodes_[n - 1] = R;

    std::vector<double> c(n, 1.0);
    c[0] = 0.5;
    c[n - 1] = 0.5;
    if (n >= 6) {
        // Euler-Maclaurin end correction -h^2/12 (G'(1) - G'(0)) with one-sided
        // second-order derivative stencils; all resulting weights stay positive.
        c[0] += -3.0 / 24.0;
        c[1] += 4.0 / 24.0;
        c[2] += -1.0 / 24.0;
        c[n - 1] += -3.0 / 24.0;
        c[n - 2] += 4.0 / 24.0;
        c[n - 3] += -1.0 / 24.0;
    }
    for (int i = 0; i < n; ++i) weights_[i] = h * c[i] * map_deriv[i];
}

GridPtr build_grid(int d, int n, double R, double q) {
    return std::make_shared<const RadialGrid>(d, n, R, q);
}

} // namespace gns
