#include "qtrans/wavepacket.hpp"

#include <cmath>
#include <string>

#include "qtrans/errors.hpp"

namespace qtrans {

ComplexField1D build_gaussian_packet(const SpatialGrid& grid, const PhysicalConstants& pc,
                                     double x0, double sigma_x, double e_central,
                                     Direction direction, const PotentialProfile* potential) {
    grid.validate();
    pc.validate();
    if (sigma_x <= 0) throw ConfigError("packet.sigma_nm must be positive");
    if (e_central < 0) throw ConfigError("packet.energy_eV must be >= 0");
    const double guard = 3.0 * sigma_x;
    if (x0 - guard < grid.x_min || x0 + guard > grid.x_max)
        throw ConfigError("packet overlaps the grid boundary (needs 3 sigma of clearance)");
    if (potential) {
        const double ahw = potential->active_half_width();
        if (ahw > 0 && std::abs(x0) - guard < ahw)
            throw ConfigError("packet overlaps the active region (needs 3 sigma of clearance)");
    }

    const double k0 = (direction == Direction::left_to_right ? 1.0 : -1.0) *
                      pc.wavevector(e_central);
    ComplexField1D psi;
    psi.v.resize(grid.n_x);
    const double inv4s2 = 1.0 / (4.0 * sigma_x * sigma_x);
    for (int i = 0; i < grid.n_x; ++i) {
        const double x = grid.x(i);
        const double env = std::exp(-(x - x0) * (x - x0) * inv4s2);
        psi.v[i] = env * std::polar(1.0, k0 * x);
    }
    normalize(psi, grid.dx());
    return psi;
}

std::pair<ComplexField1D, ComplexField1D>
build_photon_states(const QuadratureGrid& qgrid, const PhysicalConstants& pc, double omega) {
    qgrid.validate();
    if (omega <= 0) throw ConfigError("photon mode frequency must be positive");
    const double hbar = pc.hbar;
    // tail check: |psi0(q_max)|^2 = sqrt(omega/(pi hbar)) exp(-omega q_max^2/hbar)
    const double tail = std::sqrt(omega / (M_PI * hbar)) *
                        std::exp(-omega * qgrid.q_max * qgrid.q_max / hbar);
    if (tail > 1e-12)
        throw ConfigError("quadrature grid too narrow: ground-state tail exceeds 1e-12");

    ComplexField1D g, e;
    g.v.resize(qgrid.n_q);
    e.v.resize(qgrid.n_q);
    const double a = std::pow(omega / (M_PI * hbar), 0.25);
    const double s = std::sqrt(2.0 * omega / hbar);
    for (int i = 0; i < qgrid.n_q; ++i) {
        const double q = qgrid.q(i);
        const double gauss = a * std::exp(-omega * q * q / (2.0 * hbar));
        g.v[i] = gauss;
        e.v[i] = s * q * gauss;
    }
    normalize(g, qgrid.dq());
    normalize(e, qgrid.dq());
    return {std::move(g), std::move(e)};
}

} // namespace qtrans
