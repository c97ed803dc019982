#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctmp/cspace/config.hpp"
#include "ctmp/cspace/geometry.hpp"

namespace ctmp {

enum class DomainKind { kArm, kGrid };

/// Joint range in radians; index i maps to lo + i * (2*pi / joints_per_rev)
/// and indices at or beyond hi do not exist. A limited joint never wraps.
struct JointLimit {
    double lo = 0.0;
    double hi = 0.0;
    bool operator==(const JointLimit&) const = default;
};

/// Planar serial arm with revolute joints. Joint angles are relative to the
/// previous link; the first joint is relative to the +x axis.
struct ArmModel {
    std::vector<double> link_lengths;
    Vec2 base;
    int joints_per_rev = 16;
    /// Empty, or one entry per joint (nullopt = continuous joint).
    std::vector<std::optional<JointLimit>> joint_limits;
    /// Links are swept discs of this radius; 0 means thin segments.
    double link_radius = 0.0;

    bool operator==(const ArmModel&) const = default;
};

/// Unit cells; cell (x, y) spans [x, x+1] x [y, y+1] with center (x+.5, y+.5).
struct GridModel {
    int width = 0;
    int height = 0;
    bool operator==(const GridModel&) const = default;
};

/// A local goal region: the end-effector point (grid: the cell center) must
/// lie in the closed workspace box.
struct RegionSpec {
    std::string id;
    Rect box;
    bool operator==(const RegionSpec&) const = default;
};

struct Scenario {
    std::string name;
    DomainKind kind = DomainKind::kGrid;
    ArmModel arm;
    GridModel grid;
    std::vector<Obstacle> obstacles;
    Config home;
    std::vector<RegionSpec> regions;
    std::string action_set = "single_dof_unit";
    std::string cost_model = "unit";

    bool operator==(const Scenario&) const = default;
};

inline constexpr int kScenarioFormatVersion = 1;

/// Number of lattice indices along an arm joint.
int joint_steps(const ArmModel& arm, std::size_t joint);
double joint_angle(const ArmModel& arm, std::size_t joint, int index);

Lattice make_lattice(const Scenario& scenario);

/// Structural checks (shapes, positive sizes, home on the lattice, at least
/// one region). Throws Error{kInvalidScenario}. Does not check collisions.
void validate_structure(const Scenario& scenario);

/// 64-bit FNV-1a over the canonical serialized form.
std::uint64_t fingerprint(const Scenario& scenario);

}  // namespace ctmp
