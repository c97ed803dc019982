#include "ctmp/cspace/geometry.hpp"

#include <algorithm>
#include <array>

namespace ctmp {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) noexcept {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return norm(p - a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm(p - (a + ab * t));
}

bool segment_intersects_rect(Vec2 a, Vec2 b, const Rect& r) noexcept {
    // Liang-Barsky clipping of the parametric segment against the slab pair.
    double t0 = 0.0;
    double t1 = 1.0;
    const Vec2 d = b - a;
    const std::array<double, 4> p{-d.x, d.x, -d.y, d.y};
    const std::array<double, 4> q{a.x - r.min.x, r.max.x - a.x, a.y - r.min.y, r.max.y - a.y};
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double t = q[i] / p[i];
        if (p[i] < 0.0) {
            t0 = std::max(t0, t);
        } else {
            t1 = std::min(t1, t);
        }
        if (t0 > t1) return false;
    }
    return true;
}

double segment_rect_distance(Vec2 a, Vec2 b, const Rect& r) noexcept {
    if (segment_intersects_rect(a, b, r)) return 0.0;
    auto clamp_point = [&r](Vec2 p) {
        return Vec2{std::clamp(p.x, r.min.x, r.max.x), std::clamp(p.y, r.min.y, r.max.y)};
    };
    // Disjoint convex sets: the closest pair involves an endpoint of the
    // segment or a corner of the rectangle.
    double best = std::min(norm(a - clamp_point(a)), norm(b - clamp_point(b)));
    const std::array<Vec2, 4> corners{r.min, Vec2{r.max.x, r.min.y}, r.max, Vec2{r.min.x, r.max.y}};
    for (const Vec2& c : corners) best = std::min(best, point_segment_distance(c, a, b));
    return best;
}

bool segment_hits(Vec2 a, Vec2 b, double inflate, const Obstacle& obstacle) noexcept {
    if (const auto* c = std::get_if<Circle>(&obstacle)) {
        return point_segment_distance(c->center, a, b) <= c->radius + inflate;
    }
    const auto& rect = std::get<Rect>(obstacle);
    if (inflate <= 0.0) return segment_intersects_rect(a, b, rect);
    return segment_rect_distance(a, b, rect) <= inflate;
}

bool point_inside(Vec2 p, const Obstacle& obstacle) noexcept {
    if (const auto* c = std::get_if<Circle>(&obstacle)) {
        return norm(p - c->center) <= c->radius;
    }
    return std::get<Rect>(obstacle).contains(p);
}

}  // namespace ctmp
