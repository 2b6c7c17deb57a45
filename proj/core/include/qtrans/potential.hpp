#pragma once

#include <string>
#include <vector>

#include "qtrans/grid.hpp"

namespace qtrans {

enum class PotentialKind { flat, double_barrier, custom };

/// Potential energy V(x) in eV sampled on a SpatialGrid.
struct PotentialProfile {
    PotentialKind kind = PotentialKind::flat;
    std::vector<double> values;

    // double_barrier geometry (nm / eV); zero otherwise
    double well_width = 0.0;
    double barrier_thickness = 0.0;
    double barrier_height = 0.0;
    double custom_half_width_ = 0.0;

    /// Half-width of the structured (active) region; 0 for flat profiles.
    double active_half_width() const;
    bool is_flat() const { return kind == PotentialKind::flat; }
};

PotentialProfile flat_potential(const SpatialGrid& grid);

/// Symmetric double barrier centered at x=0: barriers of `barrier_thickness`
/// at both sides of a `well_width` flat well, `barrier_height` tall.
/// Requires >= 20 nm of flat lead on each side.
PotentialProfile build_double_barrier(const SpatialGrid& grid, double well_width,
                                      double barrier_thickness, double barrier_height);

PotentialProfile custom_potential(const SpatialGrid& grid, std::vector<double> values,
                                  double active_half_width = 0.0);

} // namespace qtrans
