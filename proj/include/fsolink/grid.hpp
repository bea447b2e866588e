// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fsolink/geometry.hpp"

namespace fsolink {

// Uniform 1D array of scattering cells along a line segment. Cells are
// centred on the segment: cell i sits at tangent coordinate
// (i - (N-1)/2) * spacing, so length = cell_count * spacing.
struct UnitCellGrid {
    Point2D center{0.0, 0.0};
    double normal_rad = 0.0; // bearing of the surface normal
    int cell_count = 0;
    double cell_spacing = 0.0; // m

    Vec2 normal() const { return dir_from_bearing(normal_rad); }
    Vec2 tangent() const
    {
        Vec2 n = normal();
        return {n.y, -n.x};
    }
    double length() const { return cell_count * cell_spacing; }
    double cell_coord(int i) const
    {
        return (static_cast<double>(i) - 0.5 * (cell_count - 1)) * cell_spacing;
    }
    Point2D cell_position(int i) const
    {
        Vec2 t = tangent();
        return center + cell_coord(i) * t;
    }
};

// Throws std::invalid_argument on non-positive count or spacing.
UnitCellGrid make_grid(Point2D center, double normal_rad, int cell_count, double cell_spacing);

// Grid covering approximately the requested length (N = round(length/spacing),
// at least one cell).
UnitCellGrid make_grid_for_length(Point2D center, double normal_rad, double length,
                                  double cell_spacing);

// Same segment rotated about its centre so the normal bearing becomes
// normal_rad - tilt_rad (positive tilt turns a +y normal toward -x).
UnitCellGrid with_tilt(const UnitCellGrid &grid, double tilt_rad);

// All cell positions, mostly for tests and plotting.
std::vector<Point2D> cell_positions(const UnitCellGrid &grid);

} // namespace fsolink
