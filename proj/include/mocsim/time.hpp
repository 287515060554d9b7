#pragma once

#include <cassert>
#include <cstdint>

namespace mocsim {

/// Virtual time in integer milliseconds since simulation start.
using SimTime = std::int64_t;

constexpr SimTime milliseconds(std::int64_t n) { return n; }
constexpr SimTime seconds(std::int64_t n) { return n * 1000; }
constexpr SimTime minutes(std::int64_t n) { return n * 60'000; }
constexpr SimTime hours(std::int64_t n) { return n * 3'600'000; }

/// ceil(a / b) for non-negative a, positive b.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    assert(a >= 0 && b > 0);
    return (a + b - 1) / b;
}

/// Per-core throughput multiplier, stored in thousandths (1000 = reference speed).
using SpeedMill = std::int64_t;

/// Execution time of a task of `length_ms` (reference-core milliseconds)
/// on a core of the given speed, rounded up to whole milliseconds.
constexpr SimTime exec_time_ms(SimTime length_ms, SpeedMill speed) {
    assert(speed > 0);
    return ceil_div(length_ms * 1000, speed);
}

} // namespace mocsim
