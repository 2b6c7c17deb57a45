#pragma once

#include <vector>

namespace qtrans {

/// Uniform spatial grid on [x_min, x_max], n_x nodes (endpoints included).
struct SpatialGrid {
    double x_min = -250.0;
    double x_max = 250.0;
    int n_x = 2001;

    double dx() const { return (x_max - x_min) / (n_x - 1); }
    double x(int i) const { return x_min + i * dx(); }
    double length() const { return x_max - x_min; }
    std::vector<double> nodes() const;

    /// Nearest node index, clamped to [0, n_x-1].
    int nearest(double x_val) const;

    void validate() const;
    bool operator==(const SpatialGrid&) const = default;
};

/// Photon quadrature grid, symmetric about 0.
struct QuadratureGrid {
    double q_max = 0.0;
    int n_q = 128;

    double q_min() const { return -q_max; }
    double dq() const { return 2.0 * q_max / (n_q - 1); }
    double q(int i) const { return -q_max + i * dq(); }
    std::vector<double> nodes() const;

    /// Default extent 8*sqrt(hbar/omega): ground-state tails < 1e-12.
    static QuadratureGrid for_mode(double omega, double hbar, int n_q = 128,
                                   double span_factor = 8.0);

    void validate() const;
    bool operator==(const QuadratureGrid&) const = default;
};

} // namespace qtrans
