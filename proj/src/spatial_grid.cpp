#include "wsncov/spatial_grid.hpp"

#include <algorithm>
#include <cmath>

#include "wsncov/error.hpp"

namespace wsncov {

namespace {

// Caps the grid at roughly kMaxCellsPerAxis^2 cells when reach is tiny
// relative to the point spread. Larger cells stay correct, only slower.
constexpr double kMaxCellsPerAxis = 2048.0;

}  // namespace

SpatialGrid::SpatialGrid(std::span<const Point> points, double reach) {
    if (!(reach > 0.0) || !std::isfinite(reach)) {
        throw DomainError("spatial grid reach must be positive");
    }
    if (points.empty()) return;

    double max_x = points[0].x;
    double max_y = points[0].y;
    min_x_ = points[0].x;
    min_y_ = points[0].y;
    for (const Point& p : points) {
        min_x_ = std::min(min_x_, p.x);
        min_y_ = std::min(min_y_, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const double extent = std::max(max_x - min_x_, max_y - min_y_);
    // Widened slightly so closed-disk slack and division rounding can never
    // push a true neighbor two cells away.
    cell_size_ = std::max(reach * (1.0 + 1e-9), extent / kMaxCellsPerAxis);
    cells_x_ = static_cast<std::int64_t>(std::floor((max_x - min_x_) / cell_size_)) + 1;
    cells_y_ = static_cast<std::int64_t>(std::floor((max_y - min_y_) / cell_size_)) + 1;

    // Counting sort of point indices by cell; indices stay ascending within a cell.
    const auto cell_count = static_cast<std::size_t>(cells_x_ * cells_y_);
    std::vector<std::size_t> cell_of(points.size());
    cell_start_.assign(cell_count + 1, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::int64_t cx = std::min(cell_coord(points[i].x, min_x_), cells_x_ - 1);
        const std::int64_t cy = std::min(cell_coord(points[i].y, min_y_), cells_y_ - 1);
        cell_of[i] = static_cast<std::size_t>(cy * cells_x_ + cx);
        ++cell_start_[cell_of[i] + 1];
    }
    for (std::size_t c = 0; c < cell_count; ++c) {
        cell_start_[c + 1] += cell_start_[c];
    }
    entries_.resize(points.size());
    std::vector<std::size_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        entries_[cursor[cell_of[i]]++] = i;
    }
}

std::int64_t SpatialGrid::cell_coord(double v, double origin) const {
    const double c = std::floor((v - origin) / cell_size_);
    // Clamp far-away queries so the 3x3 scan simply finds nothing.
    return static_cast<std::int64_t>(std::clamp(c, -2.0, static_cast<double>(cells_x_ + cells_y_) + 2.0));
}

}  // namespace wsncov
