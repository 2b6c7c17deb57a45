#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qtrans/constants.hpp"
#include "qtrans/field.hpp"
#include "qtrans/grid.hpp"
#include "qtrans/potential.hpp"

namespace qtrans {

/// Polynomial complex absorbing layer -i W(x) in the outer `width` nm.
struct AbsorbingLayer {
    bool enabled = false;
    double width = 40.0;     ///< nm
    double strength = 0.1;   ///< eV at the grid edge
    int order = 3;
};

namespace detail {
/// Prefactored complex tridiagonal Crank-Nicolson step for a fixed Hamiltonian.
class TridiagCn {
public:
    void configure(std::vector<cdouble> diag, cdouble off, double dt, double hbar);
    void apply(cdouble* psi, int n) const;  ///< in place
private:
    int n_ = 0;
    cdouble off_a_;                    // lambda * off (A side)
    cdouble off_b_;                    // -lambda * off (B side)
    std::vector<cdouble> diag_a_;      // 1 + lambda * H_ii
    std::vector<cdouble> diag_b_;      // 1 - lambda * H_ii
    std::vector<cdouble> denom_inv_;   // Thomas forward-elimination factors
    mutable std::vector<cdouble> work_;
};
} // namespace detail

/// Crank-Nicolson propagator for i hbar dpsi/dt = (-hbar^2/2m d2/dx2 + V) psi
/// with hard walls at the grid edges. Unconditionally stable; exactly
/// norm-preserving for real V (no absorbing layer).
class Cn1dStepper {
public:
    Cn1dStepper(const SpatialGrid& grid, const PotentialProfile& V,
                const PhysicalConstants& pc, double dt,
                const AbsorbingLayer& cap = {});

    void step(ComplexField1D& psi) const;
    double dt() const { return dt_; }
    const SpatialGrid& grid() const { return grid_; }

    /// <psi|H|psi> with the same finite-difference H (real V part only).
    double energy_expectation(const ComplexField1D& psi) const;

private:
    SpatialGrid grid_;
    PhysicalConstants pc_;
    double dt_;
    std::vector<double> v_real_;
    std::vector<double> v_imag_;  // absorbing part (negative imaginary potential)
    detail::TridiagCn cn_;
};

/// One CN step as a free function (convenience for one-off propagation).
ComplexField1D step_1d(const ComplexField1D& psi, const SpatialGrid& grid,
                       const PotentialProfile& V, const PhysicalConstants& pc, double dt);

/// Electron-photon coupling: off-diagonal alpha*x restricted to
/// |x| <= coupling_half_width (the cavity overlaps the active region only);
/// channel offsets hbar*omega/2 and 3 hbar*omega/2 are global.
struct CouplingParams {
    double alpha = 0.0;        ///< eV/nm
    double alpha_prime = 0.0;  ///< eV/(nm * q-unit): alpha = alpha' * <psi0| q |psi1>
    double omega = 0.0;        ///< rad/fs
    double coupling_half_width = 0.0;  ///< nm

    /// <psi0| q |psi1> = sqrt(hbar/(2 omega)).
    static double oscillator_dipole(double omega, double hbar);
    static CouplingParams from_alpha(double alpha, double omega,
                                     const PhysicalConstants& pc,
                                     double coupling_half_width);
    static CouplingParams from_alpha_prime(double alpha_prime, double omega,
                                           const PhysicalConstants& pc,
                                           double coupling_half_width);
};

struct TwoChannelState {
    ComplexField1D psi_a;  ///< zero-photon channel
    ComplexField1D psi_b;  ///< one-photon channel
    double t = 0.0;
};

double total_norm2(const TwoChannelState& s, double dx);

/// Strang-split stepper for the coupled channel equations: half-step CN per
/// channel with V only, exact pointwise 2x2 unitary for
/// [[hw/2, a x],[a x, 3hw/2]], half-step CN.
class TwoChannelStepper {
public:
    TwoChannelStepper(const SpatialGrid& grid, const PotentialProfile& V,
                      const PhysicalConstants& pc, const CouplingParams& coupling,
                      double dt, const AbsorbingLayer& cap = {});

    void step(TwoChannelState& s) const;
    double dt() const { return dt_; }

    /// <H> including channel offsets and the coupling term.
    double energy_expectation(const TwoChannelState& s) const;

private:
    SpatialGrid grid_;
    PhysicalConstants pc_;
    CouplingParams coupling_;
    double dt_;
    std::vector<double> v_real_;
    detail::TridiagCn cn_half_;
    // pointwise 2x2 unitary, diagonal mean phase folded in
    std::vector<cdouble> u11_, u12_, u22_;
};

/// Symmetric ADI stepper for the joint equation:
/// half CN in q (oscillator), half CN in x (device), full pointwise phase for
/// the windowed alpha' x q coupling, then the halves mirrored.
class Joint2dStepper {
public:
    Joint2dStepper(const SpatialGrid& grid, const QuadratureGrid& qgrid,
                   const PotentialProfile& V, const PhysicalConstants& pc,
                   const CouplingParams& coupling, double dt);

    void step(JointState2D& s, int threads = 1) const;
    double dt() const { return dt_; }
    const QuadratureGrid& qgrid() const { return qgrid_; }

private:
    SpatialGrid grid_;
    QuadratureGrid qgrid_;
    PhysicalConstants pc_;
    CouplingParams coupling_;
    double dt_;
    detail::TridiagCn cn_x_half_;
    detail::TridiagCn cn_q_half_;
    std::vector<cdouble> phase_;  // exp(-i dt a' x q chi(x) / hbar), row-major
    mutable std::vector<cdouble> scratch_;
};

/// Quadrature projections psi_A = <psi0|Psi>, psi_B = <psi1|Psi> and the
/// residual norm ||Psi - psi_A psi0 - psi_B psi1|| (outside-span content).
struct ChannelProjection {
    TwoChannelState state;
    double residual_norm = 0.0;
};

ChannelProjection project_channels(const JointState2D& s, const ComplexField1D& psi0,
                                   const ComplexField1D& psi1, const SpatialGrid& grid,
                                   const QuadratureGrid& qgrid);

} // namespace qtrans
