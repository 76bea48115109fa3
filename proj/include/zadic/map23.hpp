#pragma once

// The canonical length-preserving bijection between (Z, d_2) and (Z, d_3).
//
// A nonzero integer's minimum-length base-2 digits are ±1 at exponents
// k_0 < k_1 < ... with gaps >= 2; compressing the exponents to k_i - i
// gives a strictly increasing sequence, and evaluating the same signs in
// base 3 yields an integer of equal length.  Balanced-ternary digits are
// always ±1, so the inverse decompresses every integer.

#include "gadic.hpp"
#include "types.hpp"

#include <vector>

namespace zadic::map23 {

// Support of a unit-digit representation: signs and strictly increasing
// exponents; compressed() shifts exponent i down by its index.
struct ExponentProfile {
    std::vector<int> signs;
    std::vector<long long> exponents;

    ExponentProfile compressed() const {
        ExponentProfile p{signs, exponents};
        for (std::size_t i = 0; i < p.exponents.size(); ++i)
            p.exponents[i] -= static_cast<long long>(i);
        return p;
    }
    ExponentProfile decompressed() const {
        ExponentProfile p{signs, exponents};
        for (std::size_t i = 0; i < p.exponents.size(); ++i)
            p.exponents[i] += static_cast<long long>(i);
        return p;
    }

    Int evaluate(long long base) const {
        Int v = 0;
        for (std::size_t i = 0; i < signs.size(); ++i)
            v += Int(signs[i]) * int_pow(base, exponents[i]);
        return v;
    }

    static ExponentProfile of(const gadic::SignedDigitRepr& rep) {
        ExponentProfile p;
        for (std::size_t i = 0; i < rep.digits.size(); ++i) {
            if (rep.digits[i] == 0) continue;
            p.signs.push_back(rep.digits[i] > 0 ? +1 : -1);
            p.exponents.push_back(static_cast<long long>(i));
        }
        return p;
    }
};

// f(Σ ε_i 2^{k_i}) = Σ ε_i 3^{k_i - i}; length-preserving.
inline Int apply(const Int& n) {
    return ExponentProfile::of(gadic::canonical_repr(2, n)).compressed().evaluate(3);
}

// Inverse via the balanced-ternary profile; total on Z.
inline Int inverse(const Int& t) {
    return ExponentProfile::of(gadic::canonical_repr(3, t)).decompressed().evaluate(2);
}

// m = Σ_{i<=r} 2^{3i} and n = m - 1 are adjacent in d_2 but their images
// are 2r+1 apart in d_3.
struct DistortionWitness {
    long long r = 0;
    Int m;
    Int n;
    long long d2 = 0;
    long long d3 = 0;
};

inline DistortionWitness distortion_witness(long long r) {
    if (r < 1) throw std::invalid_argument("distortion witness needs r >= 1");
    DistortionWitness w;
    w.r = r;
    w.m = 0;
    for (long long i = 0; i <= r; ++i) w.m += int_pow(2, 3 * i);
    w.n = 0;
    for (long long i = 0; i < r; ++i) w.n += int_pow(2, 3 * (i + 1));
    w.d2 = gadic::length(2, w.m - w.n);
    w.d3 = gadic::length(3, apply(w.m) - apply(w.n));
    return w;
}

} // namespace zadic::map23
