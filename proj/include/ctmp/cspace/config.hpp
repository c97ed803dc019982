#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ctmp {

/// A point on the discrete joint-space lattice. Ordering is lexicographic
/// over coordinates, which is the deterministic tie-break used everywhere.
struct Config {
    std::vector<int> coords;

    Config() = default;
    Config(std::initializer_list<int> c) : coords(c) {}
    explicit Config(std::vector<int> c) : coords(std::move(c)) {}

    [[nodiscard]] std::size_t dof() const noexcept { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }

    auto operator<=>(const Config&) const = default;
    bool operator==(const Config&) const = default;
};

/// "3 4" style rendering, used by CSV output and the CLI.
std::string to_string(const Config& q);

/// Parses "3,4", "3 4" or "(3, 4)".
Config parse_config(const std::string& text);

/// Dense index of a lattice point. The first coordinate is the most
/// significant digit, so id order equals lexicographic Config order.
using StateId = std::uint32_t;

/// Shape of the lattice: per-dimension resolution and whether the dimension
/// wraps (continuous revolute joint).
class Lattice {
public:
    Lattice() = default;
    Lattice(std::vector<int> dims, std::vector<bool> wraps);

    [[nodiscard]] std::size_t dof() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
    [[nodiscard]] const std::vector<bool>& wraps() const noexcept { return wraps_; }

    [[nodiscard]] bool contains(const Config& q) const noexcept;
    [[nodiscard]] StateId encode(const Config& q) const;
    [[nodiscard]] Config decode(StateId id) const;
    [[nodiscard]] int coord(StateId id, std::size_t d) const noexcept {
        return static_cast<int>((id / strides_[d]) % static_cast<StateId>(dims_[d]));
    }

    /// Signed shortest displacement from a to b along dimension d.
    [[nodiscard]] int delta(int a, int b, std::size_t d) const noexcept;

    /// Calls fn(neighbor) for every single-DOF +-1 move that stays on the
    /// lattice; order is (dim 0, -1), (dim 0, +1), (dim 1, -1), ...
    template <typename Fn>
    void for_each_neighbor(StateId id, Fn&& fn) const {
        for (std::size_t d = 0; d < dims_.size(); ++d) {
            const int c = coord(id, d);
            const StateId stride = strides_[d];
            const int n = dims_[d];
            if (c > 0) {
                fn(id - stride);
            } else if (wraps_[d]) {
                fn(id + stride * static_cast<StateId>(n - 1));
            }
            if (c + 1 < n) {
                fn(id + stride);
            } else if (wraps_[d]) {
                fn(id - stride * static_cast<StateId>(n - 1));
            }
        }
    }

    bool operator==(const Lattice&) const = default;

private:
    std::vector<int> dims_;
    std::vector<bool> wraps_;
    std::vector<StateId> strides_;
    std::size_t size_ = 0;
};

struct ConfigHash {
    std::size_t operator()(const Config& q) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int c : q.coords) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace ctmp
