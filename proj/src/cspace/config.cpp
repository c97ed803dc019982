#include "ctmp/cspace/config.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "ctmp/errors.hpp"

namespace ctmp {

std::string to_string(const Config& q) {
    std::string out;
    for (std::size_t i = 0; i < q.coords.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(q.coords[i]);
    }
    return out;
}

Config parse_config(const std::string& text) {
    std::string cleaned;
    for (char ch : text) {
        if (ch == ',' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
            cleaned += ' ';
        } else {
            cleaned += ch;
        }
    }
    std::istringstream in(cleaned);
    std::vector<int> coords;
    std::string token;
    while (in >> token) {
        char* end = nullptr;
        const long v = std::strtol(token.c_str(), &end, 10);
        if (end == token.c_str() || *end != '\0') {
            throw Error(ErrorCode::kInvalidConfig, "not an integer coordinate: '" + token + "'");
        }
        coords.push_back(static_cast<int>(v));
    }
    if (coords.empty()) throw Error(ErrorCode::kInvalidConfig, "empty configuration");
    return Config(std::move(coords));
}

Lattice::Lattice(std::vector<int> dims, std::vector<bool> wraps)
    : dims_(std::move(dims)), wraps_(std::move(wraps)) {
    if (dims_.size() != wraps_.size() || dims_.empty()) {
        throw Error(ErrorCode::kInvalidScenario, "lattice dims/wraps mismatch");
    }
    strides_.assign(dims_.size(), 1);
    std::uint64_t total = 1;
    for (std::size_t d = dims_.size(); d-- > 0;) {
        if (dims_[d] <= 0) throw Error(ErrorCode::kInvalidScenario, "lattice dimension must be positive");
        strides_[d] = static_cast<StateId>(total);
        total *= static_cast<std::uint64_t>(dims_[d]);
        if (total > std::numeric_limits<StateId>::max()) {
            throw Error(ErrorCode::kInvalidScenario, "lattice too large");
        }
    }
    size_ = static_cast<std::size_t>(total);
}

bool Lattice::contains(const Config& q) const noexcept {
    if (q.coords.size() != dims_.size()) return false;
    for (std::size_t d = 0; d < dims_.size(); ++d) {
        if (q.coords[d] < 0 || q.coords[d] >= dims_[d]) return false;
    }
    return true;
}

StateId Lattice::encode(const Config& q) const {
    if (!contains(q)) {
        throw Error(ErrorCode::kInvalidConfig, "configuration (" + to_string(q) + ") is off the lattice");
    }
    StateId id = 0;
    for (std::size_t d = 0; d < dims_.size(); ++d) {
        id += static_cast<StateId>(q.coords[d]) * strides_[d];
    }
    return id;
}

Config Lattice::decode(StateId id) const {
    std::vector<int> coords(dims_.size());
    for (std::size_t d = 0; d < dims_.size(); ++d) coords[d] = coord(id, d);
    return Config(std::move(coords));
}

int Lattice::delta(int a, int b, std::size_t d) const noexcept {
    int diff = b - a;
    if (wraps_[d]) {
        const int n = dims_[d];
        diff %= n;
        if (diff < 0) diff += n;
        if (diff > n / 2) diff -= n;
    }
    return diff;
}

}  // namespace ctmp
