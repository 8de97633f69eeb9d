#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wsncov/geometry.hpp"

namespace wsncov {

// Uniform bucket grid over a point set. Cells are at least `reach` wide, so
// every point within `reach` of a query lies in the 3x3 block of cells around it.
class SpatialGrid {
public:
    SpatialGrid(std::span<const Point> points, double reach);

    // Calls visit(index) for every stored point in the 3x3 neighborhood of q.
    // Candidates only; the caller applies the exact distance test.
    template <typename Visitor>
    void for_each_candidate(Point q, Visitor&& visit) const {
        if (cells_x_ == 0) return;
        const std::int64_t cx = cell_coord(q.x, min_x_);
        const std::int64_t cy = cell_coord(q.y, min_y_);
        for (std::int64_t gy = cy - 1; gy <= cy + 1; ++gy) {
            if (gy < 0 || gy >= cells_y_) continue;
            for (std::int64_t gx = cx - 1; gx <= cx + 1; ++gx) {
                if (gx < 0 || gx >= cells_x_) continue;
                const std::size_t cell = static_cast<std::size_t>(gy * cells_x_ + gx);
                for (std::size_t k = cell_start_[cell]; k < cell_start_[cell + 1]; ++k) {
                    visit(entries_[k]);
                }
            }
        }
    }

    double cell_size() const { return cell_size_; }

private:
    std::int64_t cell_coord(double v, double origin) const;

    double min_x_ = 0.0;
    double min_y_ = 0.0;
    double cell_size_ = 1.0;
    std::int64_t cells_x_ = 0;
    std::int64_t cells_y_ = 0;
    std::vector<std::size_t> cell_start_;
    std::vector<std::size_t> entries_;
};

}  // namespace wsncov
