#pragma once

#include <array>
#include <vector>

#include "qtrans/evolution.hpp"
#include "qtrans/field.hpp"
#include "qtrans/spectral.hpp"

namespace qtrans {

/// Level populations from active-region energy projections of both channels,
/// split at e_split on |E| and jointly normalized:
/// returns {P_A1, P_A2, P_B1, P_B2} and the unnormalized total weight.
struct LevelPopulations {
    std::array<double, 4> p{};  // A1, A2, B1, B2
    double raw_total = 0.0;
};

LevelPopulations level_populations(const TwoChannelState& s, const EnergyBasis& basis,
                                   double e_split, double region_half_width = -1.0,
                                   int threads = 1);

struct PopulationSeries {
    std::vector<double> t;
    std::vector<double> p_a1, p_a2, p_b1, p_b2;
    std::vector<double> raw_total;
};

/// |psi_A|^2 + |psi_B|^2.
std::vector<double> presence_density(const TwoChannelState& s);
/// integral over q of |Psi(x,q)|^2 dq.
std::vector<double> presence_density(const JointState2D& s, const QuadratureGrid& qgrid);
std::vector<double> presence_density(const ComplexField1D& psi);

/// q-marginal of |Psi|^2 (for quadrature-side diagnostics).
std::vector<double> q_marginal(const JointState2D& s, const SpatialGrid& grid);

} // namespace qtrans
