#include "wsncov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsncov/error.hpp"

namespace wsncov {

SensingField::SensingField(double width, double height, Point origin)
    : width_(width), height_(height), origin_(origin) {
    if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
        throw DomainError("field width and height must be positive and finite");
    }
    if (!std::isfinite(origin.x) || !std::isfinite(origin.y)) {
        throw DomainError("field origin must be finite");
    }
}

bool SensingField::contains(Point p) const {
    return p.x >= min_x() && p.x <= max_x() && p.y >= min_y() && p.y <= max_y();
}

std::array<Point, 4> SensingField::corners() const {
    return {Point{min_x(), min_y()}, Point{max_x(), min_y()}, Point{max_x(), max_y()},
            Point{min_x(), max_y()}};
}

double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double squared_distance(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool within_closed_disk(Point center, double radius, Point z) {
    return squared_distance(center, z) <= radius * radius * (1.0 + kBoundaryRelTol);
}

double lens_area(double d, double rs) {
    if (!(rs > 0.0)) {
        throw DomainError("sensing radius must be positive");
    }
    if (!(d >= 0.0)) {
        throw DomainError("center distance must be nonnegative");
    }
    if (d >= 2.0 * rs) {
        return 0.0;
    }
    const double half = std::clamp(d / (2.0 * rs), -1.0, 1.0);
    return rs * rs * (2.0 * std::acos(half) - (d / rs) * std::sqrt(1.0 - half * half));
}

double field_diameter(const SensingField& field) {
    return std::hypot(field.width(), field.height());
}

}  // namespace wsncov
