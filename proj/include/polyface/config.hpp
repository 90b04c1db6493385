#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace polyface {

/**
 * Size cap applied to lattice element counts and GF(2) matrix widths.
 *
 * Defaults to 20000 and can be overridden through the POLYFACE_SIZE_LIMIT
 * environment variable (re-read on each call so tests can adjust it).
 * Operations that would exceed the cap abort with a SizeLimit error instead
 * of grinding away at an infeasible computation.
 */
inline std::size_t size_limit() {
    if (const char* env = std::getenv("POLYFACE_SIZE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20000;
}

} // namespace polyface
