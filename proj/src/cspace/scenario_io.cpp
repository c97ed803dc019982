#include "ctmp/cspace/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "ctmp/errors.hpp"
#include "json.hpp"

namespace ctmp {

using nlohmann::json;

namespace {

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

Vec2 vec_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::kInvalidScenario, "expected [x, y]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json rect_json(const Rect& r) { return {{"min", vec_json(r.min)}, {"max", vec_json(r.max)}}; }
Rect rect_from(const json& j) { return {vec_from(j.at("min")), vec_from(j.at("max"))}; }

json to_json(const Scenario& s) {
    json j;
    j["format_version"] = kScenarioFormatVersion;
    j["name"] = s.name;
    j["action_set"] = s.action_set;
    j["cost_model"] = s.cost_model;
    if (s.kind == DomainKind::kGrid) {
        j["domain"] = "grid";
        j["grid"] = {{"width", s.grid.width}, {"height", s.grid.height}};
    } else {
        j["domain"] = "arm";
        json arm;
        arm["link_lengths"] = s.arm.link_lengths;
        arm["base"] = vec_json(s.arm.base);
        arm["joints_per_rev"] = s.arm.joints_per_rev;
        arm["link_radius"] = s.arm.link_radius;
        if (!s.arm.joint_limits.empty()) {
            json limits = json::array();
            for (const auto& lim : s.arm.joint_limits) {
                limits.push_back(lim ? json::array({lim->lo, lim->hi}) : json(nullptr));
            }
            arm["joint_limits"] = std::move(limits);
        }
        j["arm"] = std::move(arm);
    }
    json obstacles = json::array();
    for (const Obstacle& o : s.obstacles) {
        if (const auto* c = std::get_if<Circle>(&o)) {
            obstacles.push_back({{"type", "circle"}, {"center", vec_json(c->center)}, {"radius", c->radius}});
        } else {
            const auto& r = std::get<Rect>(o);
            obstacles.push_back({{"type", "rect"}, {"min", vec_json(r.min)}, {"max", vec_json(r.max)}});
        }
    }
    j["obstacles"] = std::move(obstacles);
    j["home"] = s.home.coords;
    json regions = json::array();
    for (const RegionSpec& r : s.regions) regions.push_back({{"id", r.id}, {"box", rect_json(r.box)}});
    j["regions"] = std::move(regions);
    return j;
}

Scenario from_json(const json& j) {
    const int version = j.at("format_version").get<int>();
    if (version != kScenarioFormatVersion) {
        throw Error(ErrorCode::kUnsupportedVersion, "scenario format_version " + std::to_string(version));
    }
    Scenario s;
    s.name = j.value("name", std::string{});
    s.action_set = j.value("action_set", std::string{"single_dof_unit"});
    s.cost_model = j.value("cost_model", std::string{"unit"});
    const std::string domain = j.at("domain").get<std::string>();
    if (domain == "grid") {
        s.kind = DomainKind::kGrid;
        s.grid.width = j.at("grid").at("width").get<int>();
        s.grid.height = j.at("grid").at("height").get<int>();
    } else if (domain == "arm") {
        s.kind = DomainKind::kArm;
        const json& arm = j.at("arm");
        s.arm.link_lengths = arm.at("link_lengths").get<std::vector<double>>();
        s.arm.base = vec_from(arm.at("base"));
        s.arm.joints_per_rev = arm.at("joints_per_rev").get<int>();
        s.arm.link_radius = arm.value("link_radius", 0.0);
        if (arm.contains("joint_limits")) {
            for (const json& lim : arm.at("joint_limits")) {
                if (lim.is_null()) {
                    s.arm.joint_limits.emplace_back(std::nullopt);
                } else {
                    s.arm.joint_limits.emplace_back(JointLimit{lim.at(0).get<double>(), lim.at(1).get<double>()});
                }
            }
        }
    } else {
        throw Error(ErrorCode::kInvalidScenario, "unknown domain '" + domain + "'");
    }
    for (const json& o : j.at("obstacles")) {
        const std::string type = o.at("type").get<std::string>();
        if (type == "circle") {
            s.obstacles.emplace_back(Circle{vec_from(o.at("center")), o.at("radius").get<double>()});
        } else if (type == "rect") {
            s.obstacles.emplace_back(Rect{vec_from(o.at("min")), vec_from(o.at("max"))});
        } else {
            throw Error(ErrorCode::kInvalidScenario, "unknown obstacle type '" + type + "'");
        }
    }
    s.home = Config(j.at("home").get<std::vector<int>>());
    for (const json& r : j.at("regions")) {
        s.regions.push_back({r.at("id").get<std::string>(), rect_from(r.at("box"))});
    }
    validate_structure(s);
    return s;
}

}  // namespace

std::string serialize_scenario(const Scenario& scenario) { return to_json(scenario).dump(2) + "\n"; }

Scenario parse_scenario(std::string_view text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::kInvalidScenario, e.what());
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot open scenario " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write scenario " + path.string());
    out << serialize_scenario(scenario);
}

}  // namespace ctmp
