#include "rf/format.hpp"

#include <cstdio>

namespace rf {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string num17(std::uint64_t v) { return std::to_string(v); }

std::string num17(std::int64_t v) { return std::to_string(v); }

}  // namespace rf
