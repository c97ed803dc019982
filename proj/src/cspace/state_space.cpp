#include "ctmp/cspace/state_space.hpp"

#include <cmath>
#include <cstdlib>

#include "ctmp/errors.hpp"

namespace ctmp {

OpCounters& op_counters() noexcept {
    thread_local OpCounters counters;
    return counters;
}

std::vector<Vec2> forward_kinematics(const ArmModel& arm, const Config& q) {
    std::vector<Vec2> points;
    points.reserve(arm.link_lengths.size() + 1);
    points.push_back(arm.base);
    double heading = 0.0;
    Vec2 p = arm.base;
    for (std::size_t j = 0; j < arm.link_lengths.size(); ++j) {
        heading += joint_angle(arm, j, q.coords.at(j));
        p = p + Vec2{std::cos(heading), std::sin(heading)} * arm.link_lengths[j];
        points.push_back(p);
    }
    return points;
}

Vec2 end_effector(const Scenario& scenario, const Config& q) {
    if (scenario.kind == DomainKind::kGrid) {
        return {q.coords.at(0) + 0.5, q.coords.at(1) + 0.5};
    }
    return forward_kinematics(scenario.arm, q).back();
}

bool is_valid(const Scenario& scenario, const Config& q) {
    StateSpace space(scenario);
    if (!space.lattice().contains(q)) return false;
    return space.valid(space.id(q));
}

std::vector<Successor> successors(const Scenario& scenario, const Config& q) {
    StateSpace space(scenario);
    std::vector<StateId> ids;
    space.successors(space.id(q), ids);
    std::vector<Successor> out;
    out.reserve(ids.size());
    for (StateId id : ids) out.push_back({space.config(id), StateSpace::edge_cost()});
    return out;
}

double heuristic(const Scenario& scenario, const Config& q, const Config& goal) {
    StateSpace space(scenario);
    return space.heuristic(space.id(q), space.id(goal));
}

double navigation_value(const Scenario& scenario, const Config& q, const Config& attractor) {
    StateSpace space(scenario);
    return space.navigation(space.id(q), space.id(attractor));
}

bool in_region(const Scenario& scenario, const RegionSpec& region, const Config& q) {
    StateSpace space(scenario);
    if (!space.lattice().contains(q)) return false;
    return space.in_region(region, space.id(q));
}

StateSpace::StateSpace(const Scenario& scenario) : scenario_(&scenario), lattice_(make_lattice(scenario)) {}

bool StateSpace::collision_free(const Config& q) const {
    const Scenario& s = *scenario_;
    const std::vector<Vec2> pts = forward_kinematics(s.arm, q);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        for (const Obstacle& o : s.obstacles) {
            if (segment_hits(pts[k], pts[k + 1], s.arm.link_radius, o)) return false;
        }
    }
    return true;
}

bool StateSpace::valid(StateId id) const {
    ++op_counters().collision_checks;
    if (scenario_->kind == DomainKind::kGrid) {
        const Vec2 center{lattice_.coord(id, 0) + 0.5, lattice_.coord(id, 1) + 0.5};
        for (const Obstacle& o : scenario_->obstacles) {
            if (point_inside(center, o)) return false;
        }
        return true;
    }
    return collision_free(lattice_.decode(id));
}

void StateSpace::successors(StateId id, std::vector<StateId>& out) const {
    out.clear();
    lattice_.for_each_neighbor(id, [&](StateId n) {
        if (valid(n)) out.push_back(n);
    });
}

double StateSpace::heuristic(StateId q, StateId goal) const noexcept {
    int total = 0;
    for (std::size_t d = 0; d < lattice_.dof(); ++d) {
        total += std::abs(lattice_.delta(lattice_.coord(q, d), lattice_.coord(goal, d), d));
    }
    return static_cast<double>(total);
}

double StateSpace::navigation(StateId q, StateId attractor) const noexcept {
    long long sum = 0;
    for (std::size_t d = 0; d < lattice_.dof(); ++d) {
        const long long diff = lattice_.delta(lattice_.coord(q, d), lattice_.coord(attractor, d), d);
        sum += diff * diff;
    }
    return std::sqrt(static_cast<double>(sum));
}

bool StateSpace::in_region(const RegionSpec& region, StateId id) const {
    if (!valid(id)) return false;
    return region.box.contains(end_effector(*scenario_, lattice_.decode(id)));
}

}  // namespace ctmp
