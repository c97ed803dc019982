#pragma once

#include <cstdint>

namespace ctmp {

/// Instrumentation counters. Thread-local, so concurrent runs do not mix;
/// callers take a snapshot before and subtract after.
struct OpCounters {
    std::uint64_t collision_checks = 0;
    std::uint64_t expansions = 0;
    std::uint64_t elementary_steps = 0;

    OpCounters operator-(const OpCounters& o) const noexcept {
        return {collision_checks - o.collision_checks, expansions - o.expansions,
                elementary_steps - o.elementary_steps};
    }
    bool operator==(const OpCounters&) const = default;
};

OpCounters& op_counters() noexcept;

}  // namespace ctmp
