#pragma once

#include <complex>
#include <string>

namespace rf {

// Floats are always printed with 17 significant digits; this round-trips
// IEEE doubles exactly and keeps every text output byte-reproducible.
std::string num17(double v);
std::string num17(std::uint64_t v);
std::string num17(std::int64_t v);

}  // namespace rf
