#pragma once

// Shared scalar types and errors for the zadic library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zadic {

// All values are arbitrary precision; nothing in the library silently wraps.
using Int = boost::multiprecision::cpp_int;

// Closed integer interval [lo, hi] over which exhaustive checks run.
struct Window {
    long long lo = 0;
    long long hi = 0;

    Window() = default;
    Window(long long lo_, long long hi_) : lo(lo_), hi(hi_) {
        if (lo > hi) throw std::invalid_argument("Window: lo > hi");
    }

    long long size() const { return hi - lo + 1; }
    bool contains(long long x) const { return lo <= x && x <= hi; }
};

struct InvalidBase : std::invalid_argument {
    explicit InvalidBase(long long g)
        : std::invalid_argument("base must be >= 2, got " + std::to_string(g)) {}
};

// Raised when a capped search exhausts its depth budget without finding a
// representation.  Carries how deep the search went before giving up.
struct UnreachableWithinCap : std::runtime_error {
    long long explored_depth;
    explicit UnreachableWithinCap(long long depth)
        : std::runtime_error("no representation found within cap (explored depth " +
                             std::to_string(depth) + ")"),
          explored_depth(depth) {}
};

inline Int int_pow(long long base, long long exp) {
    Int r = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace zadic
