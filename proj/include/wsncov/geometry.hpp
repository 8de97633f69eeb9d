#pragma once

#include <array>

namespace wsncov {

// Planar point in field units. All lengths in the library are
// dimensionless multiples of one caller-chosen unit.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Axis-aligned rectangular region of interest, anchored at its lower-left corner.
class SensingField {
public:
    SensingField(double width, double height, Point origin = {});

    double width() const { return width_; }
    double height() const { return height_; }
    Point origin() const { return origin_; }

    double min_x() const { return origin_.x; }
    double min_y() const { return origin_.y; }
    double max_x() const { return origin_.x + width_; }
    double max_y() const { return origin_.y + height_; }
    double area() const { return width_ * height_; }
    Point centroid() const { return {origin_.x + 0.5 * width_, origin_.y + 0.5 * height_}; }

    bool contains(Point p) const;
    std::array<Point, 4> corners() const;

    friend bool operator==(const SensingField&, const SensingField&) = default;

private:
    double width_;
    double height_;
    Point origin_;
};

// Relative slack applied to closed-disk tests so that lattice points whose
// exact distance equals the radius are not lost to rounding.
inline constexpr double kBoundaryRelTol = 1e-12;

double distance(Point a, Point b);
double squared_distance(Point a, Point b);

// True iff |z - center| <= radius, closed disk.
bool within_closed_disk(Point center, double radius, Point z);

// Intersection area of two disks of radius rs whose centers are d apart.
// Exactly zero once the disks no longer overlap (d >= 2 rs).
double lens_area(double d, double rs);

// Supremum of pairwise distances inside the field (its diagonal).
double field_diameter(const SensingField& field);

}  // namespace wsncov
