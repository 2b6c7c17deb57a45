#pragma once

#include <utility>

#include "qtrans/constants.hpp"
#include "qtrans/field.hpp"
#include "qtrans/grid.hpp"
#include "qtrans/potential.hpp"

namespace qtrans {

enum class Direction { left_to_right, right_to_left };

/// Normalized Gaussian wave packet exp(-(x-x0)^2/(4 sigma^2)) exp(i k0 x),
/// k0 = +-sqrt(2 m* E)/hbar. x0 must keep 3 sigma clear of the grid edges and
/// of the potential's active region.
ComplexField1D build_gaussian_packet(const SpatialGrid& grid, const PhysicalConstants& pc,
                                     double x0, double sigma_x, double e_central,
                                     Direction direction,
                                     const PotentialProfile* potential = nullptr);

/// Ground and first excited oscillator states of the mode Hamiltonian
/// H = -(hbar^2/2) d^2/dq^2 + (omega^2/2) q^2, sampled on qgrid and normalized.
std::pair<ComplexField1D, ComplexField1D>
build_photon_states(const QuadratureGrid& qgrid, const PhysicalConstants& pc, double omega);

} // namespace qtrans
