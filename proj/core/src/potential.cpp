#include "qtrans/potential.hpp"

#include <cmath>
#include <string>

#include "qtrans/errors.hpp"

namespace qtrans {

double PotentialProfile::active_half_width() const {
    if (kind == PotentialKind::double_barrier)
        return 0.5 * well_width + barrier_thickness;
    if (kind == PotentialKind::custom) return custom_half_width_;
    return 0.0;
}

PotentialProfile flat_potential(const SpatialGrid& grid) {
    grid.validate();
    PotentialProfile p;
    p.kind = PotentialKind::flat;
    p.values.assign(grid.n_x, 0.0);
    return p;
}

PotentialProfile build_double_barrier(const SpatialGrid& grid, double well_width,
                                      double barrier_thickness, double barrier_height) {
    grid.validate();
    if (well_width < 0 || barrier_thickness < 0)
        throw ConfigError("double barrier geometry must be nonnegative");
    const double half = 0.5 * well_width + barrier_thickness;
    const double lead_left = -half - grid.x_min;
    const double lead_right = grid.x_max - half;
    if (lead_left < 20.0 || lead_right < 20.0)
        throw ConfigError("double barrier does not leave >= 20 nm of flat lead on each side");

    PotentialProfile p;
    p.kind = PotentialKind::double_barrier;
    p.well_width = well_width;
    p.barrier_thickness = barrier_thickness;
    p.barrier_height = barrier_height;
    p.values.assign(grid.n_x, 0.0);
    // barrier edges snap to the nearest grid node
    for (int i = 0; i < grid.n_x; ++i) {
        const double ax = std::abs(grid.x(i));
        if (ax >= 0.5 * well_width && ax <= half) p.values[i] = barrier_height;
    }
    return p;
}

PotentialProfile custom_potential(const SpatialGrid& grid, std::vector<double> values,
                                  double active_half_width) {
    grid.validate();
    if (static_cast<int>(values.size()) != grid.n_x)
        throw ConfigError("custom potential sample count does not match the grid");
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigError("custom potential must be finite everywhere");
    PotentialProfile p;
    p.kind = PotentialKind::custom;
    p.values = std::move(values);
    p.custom_half_width_ = active_half_width;
    return p;
}

} // namespace qtrans
