#pragma once

#include <utility>
#include <vector>

#include "qtrans/constants.hpp"
#include "qtrans/field.hpp"
#include "qtrans/grid.hpp"
#include "qtrans/potential.hpp"

namespace qtrans {

struct BoxEigenpair {
    double energy = 0.0;
    ComplexField1D state;   ///< on the full grid, zero outside the box
    double weight_in_well = 0.0;  ///< probability inside |x| < well half-width (if any)
};

/// Lowest-n eigenpairs of the finite-difference Hamiltonian with hard walls at
/// [x_lo, x_hi] (defaults to the full grid). Symmetric tridiagonal eigensolve.
std::vector<BoxEigenpair> box_eigenstates(const SpatialGrid& grid, const PotentialProfile& V,
                                          const PhysicalConstants& pc, int n,
                                          double x_lo, double x_hi);

std::vector<BoxEigenpair> box_eigenstates(const SpatialGrid& grid, const PotentialProfile& V,
                                          const PhysicalConstants& pc, int n);

/// The two quasi-bound well states of a double-barrier profile, selected by
/// well probability from a box diagonalization over the active region plus a
/// 1 nm margin. Returns (ground, excited).
std::pair<BoxEigenpair, BoxEigenpair> well_quasibound_pair(const SpatialGrid& grid,
                                                           const PotentialProfile& V,
                                                           const PhysicalConstants& pc);

/// Dipole matrix element <a| x |b> over the full grid.
double dipole_matrix_element(const BoxEigenpair& a, const BoxEigenpair& b,
                             const SpatialGrid& grid);

} // namespace qtrans
