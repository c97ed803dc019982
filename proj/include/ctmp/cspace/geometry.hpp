#pragma once

#include <cmath>
#include <variant>

namespace ctmp {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const noexcept { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const noexcept { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const noexcept { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) noexcept { return std::hypot(a.x, a.y); }

struct Circle {
    Vec2 center;
    double radius = 0.0;
    bool operator==(const Circle&) const = default;
};

/// Closed axis-aligned rectangle [min.x, max.x] x [min.y, max.y].
struct Rect {
    Vec2 min;
    Vec2 max;
    bool operator==(const Rect&) const = default;

    [[nodiscard]] bool contains(Vec2 p) const noexcept {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
    [[nodiscard]] double area() const noexcept { return (max.x - min.x) * (max.y - min.y); }
};

using Obstacle = std::variant<Circle, Rect>;

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) noexcept;

/// True iff the closed segment [a, b] touches the closed rectangle.
bool segment_intersects_rect(Vec2 a, Vec2 b, const Rect& r) noexcept;

/// Euclidean distance between segment [a, b] and rectangle r (0 if they meet).
double segment_rect_distance(Vec2 a, Vec2 b, const Rect& r) noexcept;

/// Exact test: does a segment swept by a disc of radius `inflate` touch the obstacle?
bool segment_hits(Vec2 a, Vec2 b, double inflate, const Obstacle& obstacle) noexcept;

bool point_inside(Vec2 p, const Obstacle& obstacle) noexcept;

}  // namespace ctmp
