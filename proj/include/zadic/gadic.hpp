#pragma once

// Minimum-length signed-digit representations of integers over the
// generating set A_g = {0} ∪ {±g^i}, for any base g >= 2.
//
// canonical_repr builds the unique digit vector directly by balanced
// base-g division; shorten reduces an arbitrary multiset of signed powers
// to the same form by local rewrites.  The two routes are independent and
// cross-checked in the test suite.

#include "types.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace zadic::gadic {

// Digit vector is little-endian (index = exponent) with no trailing zeros;
// the value 0 is the empty vector.
struct SignedDigitRepr {
    long long base = 2;
    std::vector<long long> digits;

    Int value() const {
        Int v = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
        return v;
    }

    // ℓ_g(value) = Σ|ε_i|
    long long length() const {
        long long s = 0;
        for (long long d : digits) s += std::llabs(d);
        return s;
    }

    // Index of the leading (highest) nonzero digit; -1 for the value 0.
    long long leading_index() const { return static_cast<long long>(digits.size()) - 1; }

    // Checks the base-parity canonicity conditions: digit bound, no trailing
    // zero, and for even bases the half-digit adjacency rule.
    bool is_canonical() const {
        if (base < 2) return false;
        if (!digits.empty() && digits.back() == 0) return false;
        const long long bound = base / 2; // == (g-1)/2 for odd g
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (std::llabs(digits[i]) > bound) return false;
            if (base % 2 == 0 && std::llabs(digits[i]) == bound) {
                const long long next = (i + 1 < digits.size()) ? digits[i + 1] : 0;
                if (std::llabs(next) >= bound) return false;
                if ((digits[i] > 0 && next < 0) || (digits[i] < 0 && next > 0)) return false;
            }
        }
        return true;
    }

    bool operator==(const SignedDigitRepr&) const = default;
};

// A word over A_g: multiset of signed powers plus explicit zero summands.
struct RawRepresentation {
    long long base = 2;
    // exponent -> (count of +g^i, count of -g^i)
    std::map<long long, std::pair<long long, long long>> terms;
    long long zero_summands = 0;

    void add(int sign, long long exp, long long count = 1) {
        if (exp < 0) throw std::invalid_argument("exponent must be >= 0");
        if (count < 1) throw std::invalid_argument("count must be >= 1");
        auto& [pos, neg] = terms[exp];
        (sign > 0 ? pos : neg) += count;
    }

    long long term_count() const {
        long long c = zero_summands;
        for (const auto& [e, pn] : terms) c += pn.first + pn.second;
        return c;
    }

    Int value() const {
        Int v = 0;
        for (const auto& [e, pn] : terms) v += Int(pn.first - pn.second) * int_pow(base, e);
        return v;
    }
};

// ±g^exp.
struct SignedPower {
    int sign = 1;
    long long exp = 0;

    Int value(long long g) const { return Int(sign) * int_pow(g, exp); }
    bool operator==(const SignedPower&) const = default;
};

// Unique minimum-length g-adic representation of n.
//
// Balanced division: each digit is the residue of n folded into
// [-g/2, g/2].  For even g the residue g/2 is ambiguous; the adjacency
// condition forces the sign, and the forcing is local: take the quotient
// q = (n - g/2)/g and pick +g/2 exactly when q's own balanced residue is
// in [0, g/2).  (If q's residue is again the tie value, +g/2 would put a
// half-digit next to a half-digit, so -g/2 is forced; otherwise the sign
// of the next digit is the sign of q's residue and the rule matches it.)
inline SignedDigitRepr canonical_repr(long long g, Int n) {
    if (g < 2) throw InvalidBase(g);
    SignedDigitRepr rep;
    rep.base = g;
    const long long half = g / 2;
    const bool even = (g % 2 == 0);
    const Int big_g = g;
    Int q, r;
    while (n != 0) {
        boost::multiprecision::divide_qr(n, big_g, q, r); // trunc: sign(r) = sign(n)
        long long rr = r.convert_to<long long>();
        const long long m = rr < 0 ? rr + g : rr; // residue in [0, g)
        long long eps;
        if (even && m == half) {
            Int q_tie = q + (rr - half) / g; // (n - g/2)/g
            long long mq = (q_tie % g).convert_to<long long>();
            if (mq < 0) mq += g;
            eps = (mq < half) ? half : -half;
        } else if (m > g / 2) { // above the midpoint for either parity
            eps = m - g;
        } else {
            eps = m;
        }
        rep.digits.push_back(eps);
        n = q + (rr - eps) / g; // rr - eps ∈ {-g, 0, g}
    }
    return rep;
}

// ℓ_g(n); zero iff n = 0.
inline long long length(long long g, const Int& n) { return canonical_repr(g, n).length(); }

namespace detail {

// One rewrite pass of the standardizing-and-shortening algorithm.  Returns
// false when no operation applies (the representation is canonical).
// Scan order: operation (a) first, then (b)-(d) ((e) and run elimination
// for even bases), each at its lowest applicable index.
inline bool shorten_step(RawRepresentation& w) {
    const long long g = w.base;
    const long long half = g / 2;
    const bool even = (g % 2 == 0);

    // (a) delete zero summands
    if (w.zero_summands > 0) {
        w.zero_summands = 0;
        return true;
    }
    // (b) cancel +g^i / -g^i pairs
    for (auto& [e, pn] : w.terms) {
        auto& [pos, neg] = pn;
        if (pos > 0 && neg > 0) {
            const long long exp = e;
            const long long k = std::min(pos, neg);
            pos -= k;
            neg -= k;
            if (pos == 0 && neg == 0) w.terms.erase(exp);
            return true;
        }
    }
    // (c) carry m >= g occurrences of ±g^i: m = qg + s, move q to level i+1
    for (auto& [e, pn] : w.terms) {
        auto& [pos, neg] = pn;
        if (pos >= g) {
            const long long exp = e;
            const long long q = pos / g;
            pos -= q * g;
            if (pos == 0 && neg == 0) w.terms.erase(exp);
            w.add(+1, exp + 1, q);
            return true;
        }
        if (neg >= g) {
            const long long exp = e;
            const long long q = neg / g;
            neg -= q * g;
            if (pos == 0 && neg == 0) w.terms.erase(exp);
            w.add(-1, exp + 1, q);
            return true;
        }
    }
    // (d) fold m occurrences with g/2 < m < g: m g^i -> (g-m)(-g^i) + g^{i+1}
    for (auto& [e, pn] : w.terms) {
        auto& [pos, neg] = pn;
        if (pos > g / 2 && pos < g) {
            const long long m = pos;
            pos = 0;
            neg += g - m;
            const long long exp = e;
            w.add(+1, exp + 1);
            return true;
        }
        if (neg > g / 2 && neg < g) {
            const long long m = neg;
            neg = 0;
            pos += g - m;
            const long long exp = e;
            w.add(-1, exp + 1);
            return true;
        }
    }
    if (!even) return false;

    // From here on every level holds a single-signed count <= g/2, so the
    // word is a coefficient vector.
    auto coeff = [&](long long e) -> long long {
        auto it = w.terms.find(e);
        if (it == w.terms.end()) return 0;
        return it->second.first - it->second.second;
    };
    auto set_coeff = [&](long long e, long long c) {
        if (c == 0)
            w.terms.erase(e);
        else if (c > 0)
            w.terms[e] = {c, 0};
        else
            w.terms[e] = {0, -c};
    };

    // (e) half-digit with an opposite-signed neighbour above it
    for (auto& [e, pn] : w.terms) {
        const long long c = pn.first - pn.second;
        if (std::llabs(c) != half) continue;
        const long long up = coeff(e + 1);
        if (c == -half && up >= 1) {
            set_coeff(e, half);
            set_coeff(e + 1, up - 1);
            return true;
        }
        if (c == half && up <= -1) {
            set_coeff(e, -half);
            set_coeff(e + 1, up + 1);
            return true;
        }
    }
    // run elimination: k >= 2 consecutive half-digits of equal sign
    for (auto& [e, pn] : w.terms) {
        const long long c = pn.first - pn.second;
        if (std::llabs(c) != half) continue;
        if (coeff(e + 1) != c) continue;
        long long k = 2;
        while (coeff(e + k) == c) ++k;
        const long long s = c > 0 ? 1 : -1;
        set_coeff(e, -s * half);
        for (long long j = 1; j < k; ++j) set_coeff(e + j, -s * (half - 1));
        set_coeff(e + k, coeff(e + k) + s);
        return true;
    }
    return false;
}

} // namespace detail

// Applies the shortening operations until none fires; the result is the
// canonical representation of the word's value.  The observer, when given,
// sees the term count after every individual rewrite (and once up front);
// it never increases.
inline SignedDigitRepr shorten(RawRepresentation w,
                               const std::function<void(long long)>& observe = nullptr) {
    if (w.base < 2) throw InvalidBase(w.base);
    if (observe) observe(w.term_count());
    while (detail::shorten_step(w)) {
        if (observe) observe(w.term_count());
    }
    SignedDigitRepr rep;
    rep.base = w.base;
    if (!w.terms.empty()) {
        const long long top = w.terms.rbegin()->first;
        rep.digits.assign(top + 1, 0);
        for (const auto& [e, pn] : w.terms) rep.digits[e] = pn.first - pn.second;
    }
    return rep;
}

// A generator a = ±g^k with length(g, n+a) = length(g, n) + 1.  The new
// power lands two places above the leading digit, so the digit vector of
// n+a is the digit vector of n plus one new unit digit and stays canonical.
inline SignedPower extend_length(long long g, const Int& n) {
    if (g < 2) throw InvalidBase(g);
    const SignedDigitRepr rep = canonical_repr(g, n);
    const long long k = rep.digits.empty() ? 2 : rep.leading_index() + 2;
    return SignedPower{n >= 0 ? +1 : -1, k};
}

} // namespace zadic::gadic
