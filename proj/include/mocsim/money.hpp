#pragma once

#include <cstdint>
#include <string>

#include "mocsim/time.hpp"

namespace mocsim {

/// Currency unit: millicents (cents * 1000). 100,000 mc = one dollar.
/// All billing arithmetic is exact integer arithmetic in this unit.
using Millicents = std::int64_t;

constexpr Millicents MC_PER_DOLLAR = 100'000;

/// Renders millicents as dollars with three decimals, e.g. 76500 -> "0.765".
inline std::string format_usd(Millicents mc) {
    std::string sign = mc < 0 ? "-" : "";
    std::int64_t v = mc < 0 ? -mc : mc;
    std::int64_t dollars = v / MC_PER_DOLLAR;
    std::int64_t thousandths = (v % MC_PER_DOLLAR) / 100;
    std::string frac = std::to_string(thousandths);
    frac.insert(frac.begin(), 3 - frac.size(), '0');
    return sign + std::to_string(dollars) + "." + frac;
}

} // namespace mocsim
