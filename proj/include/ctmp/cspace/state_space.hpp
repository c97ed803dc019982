#pragma once

#include <vector>

#include "ctmp/cspace/config.hpp"
#include "ctmp/cspace/counters.hpp"
#include "ctmp/cspace/scenario.hpp"

namespace ctmp {

/// Base followed by the N link endpoints, in workspace coordinates.
std::vector<Vec2> forward_kinematics(const ArmModel& arm, const Config& q);

/// End-effector point: last FK endpoint for arms, cell center for grids.
Vec2 end_effector(const Scenario& scenario, const Config& q);

/// Joint limits respected and no link (or cell) touches an obstacle.
/// Every call counts as one collision check.
bool is_valid(const Scenario& scenario, const Config& q);

struct Successor {
    Config config;
    double cost = 1.0;
    bool operator==(const Successor&) const = default;
};

/// Valid single-DOF +-1 moves out of q, unit cost each.
std::vector<Successor> successors(const Scenario& scenario, const Config& q);

/// Lattice Manhattan distance with per-joint wrapping.
double heuristic(const Scenario& scenario, const Config& q, const Config& goal);

/// Euclidean distance between lattice coordinate vectors, wrapped per joint.
double navigation_value(const Scenario& scenario, const Config& q, const Config& attractor);

bool in_region(const Scenario& scenario, const RegionSpec& region, const Config& q);

/// Id-based view of a scenario used by the search and preprocessing code.
/// Holds a reference; the scenario must outlive it.
class StateSpace {
public:
    explicit StateSpace(const Scenario& scenario);

    [[nodiscard]] const Scenario& scenario() const noexcept { return *scenario_; }
    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] std::size_t size() const noexcept { return lattice_.size(); }

    [[nodiscard]] StateId id(const Config& q) const { return lattice_.encode(q); }
    [[nodiscard]] Config config(StateId id) const { return lattice_.decode(id); }

    /// Collision check; increments op_counters().collision_checks.
    [[nodiscard]] bool valid(StateId id) const;

    /// Appends the valid neighbours of id to out (cleared first).
    void successors(StateId id, std::vector<StateId>& out) const;

    [[nodiscard]] static constexpr double edge_cost() noexcept { return 1.0; }

    [[nodiscard]] double heuristic(StateId q, StateId goal) const noexcept;
    [[nodiscard]] double navigation(StateId q, StateId attractor) const noexcept;

    [[nodiscard]] bool in_region(const RegionSpec& region, StateId id) const;

private:
    // Arm domain only.
    [[nodiscard]] bool collision_free(const Config& q) const;

    const Scenario* scenario_;
    Lattice lattice_;
};

}  // namespace ctmp
