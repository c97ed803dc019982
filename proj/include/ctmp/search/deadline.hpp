#pragma once

#include <chrono>

namespace ctmp {

using Clock = std::chrono::steady_clock;
using Millis = std::chrono::duration<double, std::milli>;

/// Wall-clock instant after which a search must stop.
class Deadline {
public:
    static Deadline never() noexcept { return Deadline(Clock::time_point::max()); }
    static Deadline at(Clock::time_point t) noexcept { return Deadline(t); }
    static Deadline after(Millis budget) {
        return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget));
    }

    [[nodiscard]] bool passed() const noexcept {
        return when_ != Clock::time_point::max() && Clock::now() >= when_;
    }
    [[nodiscard]] Clock::time_point when() const noexcept { return when_; }
    [[nodiscard]] bool unlimited() const noexcept { return when_ == Clock::time_point::max(); }

private:
    explicit Deadline(Clock::time_point t) noexcept : when_(t) {}
    Clock::time_point when_;
};

inline double elapsed_ms(Clock::time_point since) {
    return Millis(Clock::now() - since).count();
}

}  // namespace ctmp
