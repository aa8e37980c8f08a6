#include "gns/radial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gns {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

RadialFunction make_radial(GridPtr grid, std::vector<double> values, double tail_exponent) {
    if (!grid) throw std::invalid_argument("make_radial: null grid");
    if (static_cast<int>(values.size()) != grid->size()) {
        throw std::invalid_argument("make_radial: value count does not match grid size");
    }
    return RadialFunction{std::move(grid), std::move(values), tail_exponent};
}

double integrate_radial(const RadialFunction& g, int k) {
    if (k < 0) throw std::domain_error("integrate_radial: weight power k must be >= 0");
    const RadialGrid& grid = *g.grid;
    const int n = grid.size();
    const double w_exp = k + grid.dim() - 1;

    double line = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = grid.node(i);
        if (r > 0.0) line += grid.line_weights()[i] * g.values[i] * std::pow(r, w_exp);
    }

    double tail = 0.0;
    const double g_last = g.values[n - 1];
    if (g_last != 0.0 && g.tail_exponent != -kInf) {
        const double decay = g.tail_exponent + k + grid.dim();
        if (!(decay < 0.0)) {
            throw std::domain_error(
                "integrate_radial: non-integrable weight, tail_exponent = " +
                std::to_string(g.tail_exponent) + " with |x|^" + std::to_string(k) +
                " in dimension " + std::to_string(grid.dim()));
        }
        // g ~ g(R) (r/R)^s beyond R:  int_R^inf g r^{k+d-1} dr = g(R) R^{k+d} / (-decay)
        tail = g_last * std::pow(grid.radius(), k + grid.dim()) / (-decay);
    }
    return grid.sphere_factor() * (line + tail);
}

RadialFunction differentiate(const RadialFunction& g) {
    const RadialGrid& grid = *g.grid;
    const int n = grid.size();
    if (n < 3) throw std::domain_error("differentiate: need at least 3 nodes");
    const std::vector<double>& r = grid.nodes();
    const std::vector<double>& v = g.values;
    std::vector<double> dv(n);

    dv[0] = 0.0; // radial symmetry
    for (int i = 1; i + 1 < n; ++i) {
        const double hl = r[i] - r[i - 1];
        const double hr = r[i + 1] - r[i];
        dv[i] = (hl * hl * v[i + 1] - hr * hr * v[i - 1] + (hr * hr - hl * hl) * v[i]) /
                (hl * hr * (hl + hr));
    }
    {
        // one-sided, exact on quadratics
        const double h1 = r[n - 2] - r[n - 3];
        const double h2 = r[n - 1] - r[n - 2];
        dv[n - 1] = (v[n - 3] * h2 / (h1 * (h1 + h2)) - v[n - 2] * (h1 + h2) / (h1 * h2) +
                     v[n - 1] * (h1 + 2.0 * h2) / (h2 * (h1 + h2)));
    }
    const double tail =
        (g.tail_exponent == -kInf) ? -kInf : g.tail_exponent - 1.0;
    return RadialFunction{g.grid, std::move(dv), tail};
}

RadialFunction pow_radial(const RadialFunction& g, double e) {
    std::vector<double> v(g.values.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (g.values[i] < 0.0) {
            throw std::domain_error("pow_radial: negative value at node " + std::to_string(i));
        }
        v[i] = std::pow(g.values[i], e);
    }
    double tail;
    if (g.tail_exponent == -kInf) {
        tail = e > 0.0 ? -kInf : 0.0;
    } else {
        tail = e * g.tail_exponent;
    }
    return RadialFunction{g.grid, std::move(v), tail};
}

double fit_tail_exponent(const RadialGrid& grid, const std::vector<double>& values) {
    const int n = grid.size();
    const double r_lo = grid.radius() / 10.0;
    // least squares slope of log v against log r over the last decade
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int i = 0; i < n; ++i) {
        if (grid.node(i) < r_lo) continue;
        if (!(values[i] > 0.0)) return -kInf;
        const double lx = std::log(grid.node(i));
        const double ly = std::log(values[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++cnt;
    }
    if (cnt < 2) return -kInf;
    const double denom = cnt * sxx - sx * sx;
    if (denom == 0.0) return -kInf;
    return (cnt * sxy - sx * sy) / denom;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y, double xq) {
    const int n = static_cast<int>(x.size());
    if (n < 2 || y.size() != x.size()) {
        throw std::invalid_argument("pchip_eval: need matching arrays with >= 2 points");
    }
    if (xq <= x.front()) return y.front();
    if (xq >= x.back()) return y.back();

    // Fritsch-Carlson monotone slopes
    auto slope = [&](int i) { return (y[i + 1] - y[i]) / (x[i + 1] - x[i]); };
    auto deriv = [&](int i) -> double {
        if (i == 0) {
            const double h0 = x[1] - x[0], h1 = x[2] - x[1];
            double d0 = ((2 * h0 + h1) * slope(0) - h0 * slope(1)) / (h0 + h1);
            if (d0 * slope(0) <= 0) d0 = 0;
            else if (std::abs(d0) > 3 * std::abs(slope(0))) d0 = 3 * slope(0);
            return d0;
        }
        if (i == n - 1) {
            const double h0 = x[n - 2] - x[n - 3], h1 = x[n - 1] - x[n - 2];
            double dn = ((2 * h1 + h0) * slope(n - 2) - h1 * slope(n - 3)) / (h0 + h1);
            if (dn * slope(n - 2) <= 0) dn = 0;
            else if (std::abs(dn) > 3 * std::abs(slope(n - 2))) dn = 3 * slope(n - 2);
            return dn;
        }
        const double s0 = slope(i - 1), s1 = slope(i);
        if (s0 * s1 <= 0.0) return 0.0;
        const double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
        const double w1 = 2 * h1 + h0, w2 = h1 + 2 * h0;
        return (w1 + w2) / (w1 / s0 + w2 / s1);
    };

    int lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        (x[mid] <= xq ? lo : hi) = mid;
    }
    const double h = x[lo + 1] - x[lo];
    const double t = (xq - x[lo]) / h;
    const double d0 = (n == 2) ? slope(0) : deriv(lo);
    const double d1 = (n == 2) ? slope(0) : deriv(lo + 1);
    const double t2 = t * t, t3 = t2 * t;
    return y[lo] * (2 * t3 - 3 * t2 + 1) + h * d0 * (t3 - 2 * t2 + t) +
           y[lo + 1] * (-2 * t3 + 3 * t2) + h * d1 * (t3 - t2);
}

RadialFunction load_profile_csv(const std::string& path, GridPtr grid) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_profile_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_profile_csv: empty file " + path);
    if (line.rfind("r,u", 0) != 0) {
        throw std::runtime_error("load_profile_csv: " + path + ":1: expected header \"r,u\"");
    }
    std::vector<double> xs, ys;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        double r, u;
        char comma;
        if (!(ss >> r >> comma >> u) || comma != ',') {
            throw std::runtime_error("load_profile_csv: " + path + ":" +
                                     std::to_string(lineno) + ": malformed row");
        }
        if (!xs.empty() && r <= xs.back()) {
            throw std::runtime_error("load_profile_csv: " + path + ":" +
                                     std::to_string(lineno) + ": r must be strictly increasing");
        }
        if (u < 0.0) {
            throw std::runtime_error("load_profile_csv: " + path + ":" +
                                     std::to_string(lineno) + ": negative value");
        }
        xs.push_back(r);
        ys.push_back(u);
    }
    if (xs.size() < 2) throw std::runtime_error("load_profile_csv: " + path + ": need >= 2 rows");

    std::vector<double> v(grid->size());
    for (int i = 0; i < grid->size(); ++i) {
        const double r = grid->node(i);
        v[i] = (r > xs.back()) ? 0.0 : std::max(0.0, pchip_eval(xs, ys, r));
    }
    const double tail = fit_tail_exponent(*grid, v);
    return RadialFunction{std::move(grid), std::move(v), tail};
}

void save_profile_csv(const RadialFunction& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_profile_csv: cannot open " + path);
    out << "r,u\n";
    char buf[64];
    for (int i = 0; i < g.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", g.grid->node(i), g.values[i]);
        out << buf;
    }
}

} // namespace gns
