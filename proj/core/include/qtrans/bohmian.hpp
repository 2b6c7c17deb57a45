#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qtrans/constants.hpp"
#include "qtrans/field.hpp"
#include "qtrans/grid.hpp"

namespace qtrans {

/// Guidance velocity v = J/|psi|^2 on the grid; nodes (|psi|^2 below
/// 1e-12 * max) are flagged invalid and trajectories keep their previous
/// velocity there.
struct VelocityField1D {
    std::vector<double> v;
    std::vector<uint8_t> valid;
};

struct VelocityField2D {
    int n_x = 0;
    int n_q = 0;
    std::vector<double> vx, vq;
    std::vector<uint8_t> valid;
};

VelocityField1D velocity_1d(const ComplexField1D& psi, const SpatialGrid& grid,
                            const PhysicalConstants& pc);

VelocityField2D velocity_2d(const JointState2D& s, const SpatialGrid& grid,
                            const QuadratureGrid& qgrid, const PhysicalConstants& pc);

/// Velocity field of Psi = psi_A psi0 + psi_B psi1 evaluated on the joint grid
/// without materializing Psi (same formulas as velocity_2d).
VelocityField2D velocity_two_channel(const ComplexField1D& psi_a, const ComplexField1D& psi_b,
                                     const ComplexField1D& psi0, const ComplexField1D& psi1,
                                     const SpatialGrid& grid, const QuadratureGrid& qgrid,
                                     const PhysicalConstants& pc, int threads = 1);

/// W trajectories; q empty for 1D configuration spaces.
struct TrajectoryEnsemble {
    int W = 0;
    uint64_t seed = 0;
    std::vector<double> x;
    std::vector<double> q;
    std::vector<double> vx_hold;  ///< last valid velocity per experiment
    std::vector<double> vq_hold;

    bool two_dimensional() const { return !q.empty(); }
};

/// Inverse-CDF sampling of |psi|^2 on the grid; deterministic given seed.
TrajectoryEnsemble sample_quantum_equilibrium(std::span<const double> density,
                                              const SpatialGrid& grid, int W, uint64_t seed);

/// 2D sampling: x from the x-marginal, then q from the conditional at the
/// sampled x (densities interpolated between the adjacent grid columns).
TrajectoryEnsemble sample_quantum_equilibrium_2d(const JointState2D& density_source,
                                                 const SpatialGrid& grid,
                                                 const QuadratureGrid& qgrid, int W,
                                                 uint64_t seed);
TrajectoryEnsemble sample_quantum_equilibrium_2d(std::span<const double> density_xq,
                                                 const SpatialGrid& grid,
                                                 const QuadratureGrid& qgrid, int W,
                                                 uint64_t seed);

/// Explicit midpoint step with linear space interpolation and linear time
/// interpolation between the fields at t and t+dt. Positions clamp to the
/// grid interior.
void advance_trajectories(TrajectoryEnsemble& ens, const VelocityField1D& v_t,
                          const VelocityField1D& v_tdt, const SpatialGrid& grid, double dt);

void advance_trajectories(TrajectoryEnsemble& ens, const VelocityField2D& v_t,
                          const VelocityField2D& v_tdt, const SpatialGrid& grid,
                          const QuadratureGrid& qgrid, double dt, int threads = 1);

/// Conditional slice psi(x) = Psi(x, Q), linear interpolation in q. Not
/// normalized.
ComplexField1D slice_bcwf(const JointState2D& s, const QuadratureGrid& qgrid, double Q);

/// Ensemble terminal current I_j = (e/L) * v_j for the (single) electron of
/// experiment j when |x_j| < L/2, else 0.
std::vector<double> ramo_current(const TrajectoryEnsemble& ens, const VelocityField1D& v,
                                 const SpatialGrid& grid, const PhysicalConstants& pc,
                                 double device_length);

/// Kolmogorov-Smirnov statistic of samples against the density on the grid.
double ks_statistic(std::span<const double> samples, std::span<const double> density,
                    const SpatialGrid& grid);
double ks_statistic_nodes(std::span<const double> samples, std::span<const double> density,
                          std::span<const double> nodes);

} // namespace qtrans
