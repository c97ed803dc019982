#include "ctmp/cspace/scenario.hpp"

#include <numbers>

#include "ctmp/cspace/scenario_io.hpp"
#include "ctmp/errors.hpp"
#include "ctmp/hash.hpp"

namespace ctmp {

namespace {

double joint_step_size(const ArmModel& arm) {
    return 2.0 * std::numbers::pi / static_cast<double>(arm.joints_per_rev);
}

const std::optional<JointLimit>& limit_of(const ArmModel& arm, std::size_t joint) {
    static const std::optional<JointLimit> kNone;
    return arm.joint_limits.empty() ? kNone : arm.joint_limits.at(joint);
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidScenario, what); }

}  // namespace

int joint_steps(const ArmModel& arm, std::size_t joint) {
    const auto& lim = limit_of(arm, joint);
    if (!lim) return arm.joints_per_rev;
    const double step = joint_step_size(arm);
    int n = 0;
    while (n < arm.joints_per_rev && lim->lo + step * n < lim->hi) ++n;
    return n;
}

double joint_angle(const ArmModel& arm, std::size_t joint, int index) {
    const auto& lim = limit_of(arm, joint);
    const double base = lim ? lim->lo : 0.0;
    return base + joint_step_size(arm) * index;
}

Lattice make_lattice(const Scenario& scenario) {
    if (scenario.kind == DomainKind::kGrid) {
        return Lattice({scenario.grid.width, scenario.grid.height}, {false, false});
    }
    const std::size_t n = scenario.arm.link_lengths.size();
    std::vector<int> dims(n);
    std::vector<bool> wraps(n);
    for (std::size_t j = 0; j < n; ++j) {
        dims[j] = joint_steps(scenario.arm, j);
        wraps[j] = !limit_of(scenario.arm, j).has_value();
    }
    return Lattice(std::move(dims), std::move(wraps));
}

void validate_structure(const Scenario& scenario) {
    if (scenario.action_set != "single_dof_unit") invalid("unsupported action set '" + scenario.action_set + "'");
    if (scenario.cost_model != "unit") invalid("unsupported cost model '" + scenario.cost_model + "'");
    if (scenario.kind == DomainKind::kGrid) {
        if (scenario.grid.width <= 0 || scenario.grid.height <= 0) invalid("grid dimensions must be positive");
    } else {
        const ArmModel& arm = scenario.arm;
        if (arm.link_lengths.empty()) invalid("arm needs at least one link");
        for (double l : arm.link_lengths) {
            if (!(l > 0.0)) invalid("link lengths must be positive");
        }
        if (arm.joints_per_rev < 4) invalid("joints_per_rev must be >= 4");
        if (!arm.joint_limits.empty() && arm.joint_limits.size() != arm.link_lengths.size()) {
            invalid("joint_limits must be empty or have one entry per joint");
        }
        for (std::size_t j = 0; j < arm.joint_limits.size(); ++j) {
            const auto& lim = arm.joint_limits[j];
            if (lim && !(lim->hi > lim->lo)) invalid("joint limit must satisfy lo < hi");
            if (lim && joint_steps(arm, j) == 0) invalid("joint limit admits no lattice index");
        }
        if (arm.link_radius < 0.0) invalid("link_radius must be non-negative");
    }
    for (const Obstacle& o : scenario.obstacles) {
        if (const auto* c = std::get_if<Circle>(&o); c && !(c->radius > 0.0)) invalid("circle radius must be positive");
        if (const auto* r = std::get_if<Rect>(&o); r && !(r->max.x >= r->min.x && r->max.y >= r->min.y)) {
            invalid("rectangle min must not exceed max");
        }
    }
    if (scenario.regions.empty()) invalid("at least one region is required");
    for (std::size_t i = 0; i < scenario.regions.size(); ++i) {
        const RegionSpec& r = scenario.regions[i];
        if (r.id.empty()) invalid("region id must be non-empty");
        if (!(r.box.area() > 0.0) || r.box.max.x < r.box.min.x) invalid("region '" + r.id + "' must have positive area");
        for (std::size_t k = 0; k < i; ++k) {
            if (scenario.regions[k].id == r.id) invalid("duplicate region id '" + r.id + "'");
        }
    }
    if (!make_lattice(scenario).contains(scenario.home)) invalid("home configuration is off the lattice");
}

std::uint64_t fingerprint(const Scenario& scenario) {
    return fnv1a64(serialize_scenario(scenario));
}

}  // namespace ctmp
