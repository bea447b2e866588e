// SPDX-License-Identifier: Apache-2.0

#include "fsolink/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fsolink {

UnitCellGrid make_grid(Point2D center, double normal_rad, int cell_count, double cell_spacing)
{
    if (cell_count < 1)
        throw std::invalid_argument("make_grid: cell_count must be >= 1");
    if (cell_spacing <= 0.0)
        throw std::invalid_argument("make_grid: cell_spacing must be positive");
    return {center, normal_rad, cell_count, cell_spacing};
}

UnitCellGrid make_grid_for_length(Point2D center, double normal_rad, double length,
                                  double cell_spacing)
{
    if (length <= 0.0)
        throw std::invalid_argument("make_grid_for_length: length must be positive");
    int n = static_cast<int>(std::llround(length / cell_spacing));
    if (n < 1)
        n = 1;
    return make_grid(center, normal_rad, n, cell_spacing);
}

UnitCellGrid with_tilt(const UnitCellGrid &grid, double tilt_rad)
{
    UnitCellGrid out = grid;
    out.normal_rad = grid.normal_rad - tilt_rad;
    return out;
}

std::vector<Point2D> cell_positions(const UnitCellGrid &grid)
{
    std::vector<Point2D> out;
    out.reserve(grid.cell_count);
    for (int i = 0; i < grid.cell_count; ++i)
        out.push_back(grid.cell_position(i));
    return out;
}

} // namespace fsolink
