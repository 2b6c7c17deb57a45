#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qtrans/constants.hpp"
#include "qtrans/field.hpp"
#include "qtrans/grid.hpp"
#include "qtrans/potential.hpp"

namespace qtrans {

enum class Injection { from_left, from_right };

/// Stationary scattering state of the device Hamiltonian at energy E > 0.
/// Delta-normalized in energy: the incident plane wave carries amplitude
/// sqrt(m*/(2 pi hbar^2 k)) with phase zero at x = 0.
struct ScatteringState {
    double energy = 0.0;               ///< eV, kinetic energy in the leads
    Injection direction = Injection::from_left;
    double signed_energy = 0.0;        ///< +E from_left, -E from_right
    std::vector<cdouble> amplitudes;   ///< sampled on the grid
    double transmission = 0.0;
    double reflection = 0.0;
};

ScatteringState solve_scattering_state(const SpatialGrid& grid, const PotentialProfile& V,
                                       const PhysicalConstants& pc, double energy,
                                       Injection direction);

struct SpectrumPoint {
    double energy;
    double transmission;
    double reflection;
};

std::vector<SpectrumPoint> transmission_spectrum(const SpatialGrid& grid,
                                                 const PotentialProfile& V,
                                                 const PhysicalConstants& pc,
                                                 std::span<const double> energies,
                                                 int threads = 1);

/// Local maxima of T(E) inside [e_lo, e_hi], refined to `tolerance` eV by
/// bisection on the sign change of dT/dE. Empty result if no maxima.
std::vector<double> resonance_search(const SpatialGrid& grid, const PotentialProfile& V,
                                     const PhysicalConstants& pc, double e_lo, double e_hi,
                                     double tolerance, double scan_step = 1e-3);

/// Signed-energy-ordered basis of scattering states over
/// [-e_max, -e_min] U [e_min, e_max] with uniform step dE on |E|.
class EnergyBasis {
public:
    static EnergyBasis build(const SpatialGrid& grid, const PotentialProfile& V,
                             const PhysicalConstants& pc, double e_min, double e_max,
                             double de, int threads = 1);

    /// Analytic plane-wave basis, valid for flat potentials only.
    static EnergyBasis plane_waves(const SpatialGrid& grid, const PhysicalConstants& pc,
                                   double e_min, double e_max, double de);

    int size() const { return static_cast<int>(signed_energies_.size()); }
    int branch_size() const { return size() / 2; }
    double de() const { return de_; }
    const std::vector<double>& signed_energies() const { return signed_energies_; }
    const SpatialGrid& grid() const { return grid_; }
    const PhysicalConstants& constants() const { return pc_; }
    double active_half_width() const { return active_half_width_; }
    const std::vector<double>& transmissions() const { return transmissions_; }

    std::span<const cdouble> state(int i) const {
        return {states_.data() + static_cast<size_t>(i) * grid_.n_x,
                static_cast<size_t>(grid_.n_x)};
    }

private:
    SpatialGrid grid_;
    PhysicalConstants pc_;
    double de_ = 0.0;
    double active_half_width_ = 0.0;
    std::vector<double> signed_energies_;  // ascending
    std::vector<double> transmissions_;    // per state
    std::vector<cdouble> states_;          // row per state
};

enum class ProjectionRegion { whole_grid, active_region };

/// c(E) = integral of psi(x) phi_E^*(x) over the region, per basis state.
struct SpectralCoefficients {
    std::vector<cdouble> c;
    double de = 0.0;
    ProjectionRegion region = ProjectionRegion::whole_grid;
    double region_half_width = 0.0;

    double total_weight() const;  ///< sum |c|^2 dE
};

SpectralCoefficients project_energy(const ComplexField1D& psi, const EnergyBasis& basis,
                                    ProjectionRegion region,
                                    double region_half_width = -1.0, int threads = 1);

/// psi(x) = sum_E c(E) phi_E(x) dE.
ComplexField1D synthesize(const SpectralCoefficients& c, const EnergyBasis& basis,
                          int threads = 1);

/// Weight fraction on the signed-negative branch.
double negative_branch_weight(const SpectralCoefficients& c, const EnergyBasis& basis);

/// Mean of |E| under |c(E)|^2.
double mean_abs_energy(const SpectralCoefficients& c, const EnergyBasis& basis);

/// Length of the central signed-energy interval holding `fraction` of the weight.
double support_width(const SpectralCoefficients& c, const EnergyBasis& basis,
                     double fraction = 0.90);

} // namespace qtrans
