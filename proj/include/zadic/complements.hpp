#pragma once

// Additive complements of finite sets against eventually periodic sets.
//
// Restricting C to eventually periodic sets makes W + C = Z decidable:
// the sumset of a finite set with an eventually periodic set is again
// eventually periodic with the same period, computed exactly below.
// Pruning toward a minimal complement follows the removal chain
// C_0 ⊇ C_1 ⊇ ... over a window; removability of c only depends on
// membership within diameter(W) of c + W, so decisions inside the core
// window are final once the window is enlarged by twice the diameter.

#include "types.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace zadic::complements {

struct NotAComplement : std::invalid_argument {
    NotAComplement() : std::invalid_argument("C is not a complement to W") {}
};

// Nonempty sorted set of distinct integers.
struct FiniteSet {
    std::vector<long long> elements;

    static FiniteSet of(std::vector<long long> xs) {
        if (xs.empty()) throw std::invalid_argument("finite set must be nonempty");
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return FiniteSet{std::move(xs)};
    }

    long long min() const { return elements.front(); }
    long long max() const { return elements.back(); }
    long long diameter() const { return max() - min(); }
    bool contains(long long x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
};

// Integer set with an explicit core window and periodic tails on both
// sides.  Membership is total: the core table decides inside [lo, hi],
// pos_residues decides x > hi, neg_residues decides x < lo.
struct EventuallyPeriodicSet {
    long long period = 1;
    long long core_lo = 0;
    long long core_hi = 0;
    std::vector<bool> core;         // size core_hi - core_lo + 1
    std::vector<bool> pos_residues; // size period
    std::vector<bool> neg_residues; // size period

    bool contains(long long x) const {
        if (x >= core_lo && x <= core_hi) return core[x - core_lo];
        return x > core_hi ? pos_residues[mod(x)] : neg_residues[mod(x)];
    }

    bool contains(const Int& x) const {
        if (x >= core_lo && x <= core_hi) return core[(x - core_lo).convert_to<long long>()];
        const long long r = (((x % period).convert_to<long long>()) % period + period) % period;
        return x > core_hi ? pos_residues[r] : neg_residues[r];
    }

    long long mod(long long x) const {
        long long r = x % period;
        return r < 0 ? r + period : r;
    }

    void check() const {
        if (period < 1) throw std::invalid_argument("period must be >= 1");
        if (core_lo > core_hi) throw std::invalid_argument("core window is empty");
        if (core.size() != static_cast<std::size_t>(core_hi - core_lo + 1) ||
            pos_residues.size() != static_cast<std::size_t>(period) ||
            neg_residues.size() != static_cast<std::size_t>(period))
            throw std::invalid_argument("table sizes do not match the declared bounds");
    }

    // --- builders ---

    static EventuallyPeriodicSet all_integers() { return from_residues(1, {0}); }

    // union of residue classes r + mZ
    static EventuallyPeriodicSet from_residues(long long m, const std::vector<long long>& rs) {
        if (m < 1) throw std::invalid_argument("period must be >= 1");
        EventuallyPeriodicSet s;
        s.period = m;
        s.pos_residues.assign(m, false);
        for (long long r : rs) s.pos_residues[((r % m) + m) % m] = true;
        s.neg_residues = s.pos_residues;
        s.core_lo = s.core_hi = 0;
        s.core = {s.pos_residues[0]};
        return s;
    }

    // Rebuilds with a core covering at least [lo, hi]; membership unchanged.
    EventuallyPeriodicSet widened(long long lo, long long hi) const {
        lo = std::min(lo, core_lo);
        hi = std::max(hi, core_hi);
        EventuallyPeriodicSet s;
        s.period = period;
        s.pos_residues = pos_residues;
        s.neg_residues = neg_residues;
        s.core_lo = lo;
        s.core_hi = hi;
        s.core.resize(hi - lo + 1);
        for (long long x = lo; x <= hi; ++x) s.core[x - lo] = contains(x);
        return s;
    }

    // Copy with x flipped in or out (widening the core first if needed).
    EventuallyPeriodicSet with(long long x, bool member) const {
        EventuallyPeriodicSet s = widened(std::min(x, core_lo), std::max(x, core_hi));
        s.core[x - s.core_lo] = member;
        return s;
    }

    // C + t
    EventuallyPeriodicSet translated(long long t) const {
        EventuallyPeriodicSet s;
        s.period = period;
        s.core_lo = core_lo + t;
        s.core_hi = core_hi + t;
        s.core = core;
        s.pos_residues.assign(period, false);
        s.neg_residues.assign(period, false);
        for (long long r = 0; r < period; ++r) {
            if (pos_residues[r]) s.pos_residues[s.mod(r + t)] = true;
            if (neg_residues[r]) s.neg_residues[s.mod(r + t)] = true;
        }
        return s;
    }

    bool full() const {
        if (!std::all_of(core.begin(), core.end(), [](bool b) { return b; })) return false;
        if (!std::all_of(pos_residues.begin(), pos_residues.end(), [](bool b) { return b; }))
            return false;
        return std::all_of(neg_residues.begin(), neg_residues.end(), [](bool b) { return b; });
    }
};

// Exact W + C.  Same period; the core widens by diameter(W); tail residues
// are the residue sumsets.
inline EventuallyPeriodicSet sumset(const FiniteSet& w, const EventuallyPeriodicSet& c) {
    c.check();
    EventuallyPeriodicSet s;
    s.period = c.period;
    s.core_lo = c.core_lo + w.min();
    s.core_hi = c.core_hi + w.max();
    s.core.resize(s.core_hi - s.core_lo + 1);
    for (long long x = s.core_lo; x <= s.core_hi; ++x) {
        bool m = false;
        for (long long wi : w.elements) {
            if (c.contains(x - wi)) {
                m = true;
                break;
            }
        }
        s.core[x - s.core_lo] = m;
    }
    s.pos_residues.assign(s.period, false);
    s.neg_residues.assign(s.period, false);
    for (long long r = 0; r < s.period; ++r) {
        for (long long wi : w.elements) {
            if (c.pos_residues[r]) s.pos_residues[s.mod(r + wi)] = true;
            if (c.neg_residues[r]) s.neg_residues[s.mod(r + wi)] = true;
        }
    }
    return s;
}

// W + C = Z, decided exactly.
inline bool is_complement(const FiniteSet& w, const EventuallyPeriodicSet& c) {
    return sumset(w, c).full();
}

struct AsymptoticResult {
    bool asymptotic = false;
    // Z \ (W+C), explicit and finite, when asymptotic
    std::vector<long long> exceptional;
    // a residue class missed infinitely often otherwise: (residue, +1/-1 tail)
    std::optional<std::pair<long long, int>> infinite_witness;
};

// |Z \ (W+C)| < ∞ iff both tails of the sumset cover every residue.
inline AsymptoticResult is_asymptotic_complement(const FiniteSet& w,
                                                 const EventuallyPeriodicSet& c) {
    const EventuallyPeriodicSet s = sumset(w, c);
    AsymptoticResult res;
    for (long long r = 0; r < s.period; ++r) {
        if (!s.pos_residues[r]) {
            res.infinite_witness = {r, +1};
            return res;
        }
        if (!s.neg_residues[r]) {
            res.infinite_witness = {r, -1};
            return res;
        }
    }
    res.asymptotic = true;
    for (long long x = s.core_lo; x <= s.core_hi; ++x)
        if (!s.core[x - s.core_lo]) res.exceptional.push_back(x);
    return res;
}

using MembershipFn = std::function<bool(long long)>;

namespace detail {

// Every n ∈ c + W keeps a representation n = w + c2 with c2 ≠ c.  The
// candidate range [n - max(W), n - min(W)] is finite.
inline bool removable_impl(const FiniteSet& w, const MembershipFn& member, long long c) {
    for (long long wi : w.elements) {
        const long long n = c + wi;
        bool covered = false;
        for (long long c2 = n - w.max(); c2 <= n - w.min(); ++c2) {
            if (c2 == c) continue;
            if (member(c2) && w.contains(n - c2)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

// A target n ∈ c + W whose only representation uses c, if any.
inline std::optional<long long> lone_target(const FiniteSet& w, const MembershipFn& member,
                                            long long c) {
    for (long long wi : w.elements) {
        const long long n = c + wi;
        bool covered = false;
        for (long long c2 = n - w.max(); c2 <= n - w.min(); ++c2) {
            if (c2 == c) continue;
            if (member(c2) && w.contains(n - c2)) {
                covered = true;
                break;
            }
        }
        if (!covered) return n;
    }
    return std::nullopt;
}

} // namespace detail

// Witness that removing `element` breaks coverage of `target`.
struct MinimalityCertificate {
    long long element = 0;
    long long target = 0;

    bool validate(const FiniteSet& w, const MembershipFn& member) const {
        if (!w.contains(target - element) || !member(element)) return false;
        for (long long c2 = target - w.max(); c2 <= target - w.min(); ++c2) {
            if (c2 == element) continue;
            if (member(c2) && w.contains(target - c2)) return false;
        }
        return true;
    }
};

inline bool removable(const FiniteSet& w, const EventuallyPeriodicSet& c, long long elem) {
    if (!c.contains(elem)) throw std::invalid_argument("element is not in C");
    return detail::removable_impl(w, [&c](long long x) { return c.contains(x); }, elem);
}

struct PruneResult {
    Window core_window;
    std::vector<bool> core_members;
    std::vector<MinimalityCertificate> certificates; // one per retained core member
    Window enlarged_window;                          // core widened by 2*diameter(W)
    std::vector<bool> enlarged_members;

    // Membership of the pruned state; falls back to C outside the
    // enlarged window, where nothing was removed.
    bool contains(long long x, const EventuallyPeriodicSet& original) const {
        if (x >= enlarged_window.lo && x <= enlarged_window.hi)
            return enlarged_members[x - enlarged_window.lo];
        return original.contains(x);
    }
};

// Removal chain over the enlarged window: candidates c ∈ C in ascending
// |c| (negative first on ties), each removed iff the current state keeps
// every n ∈ c + W covered without it.  Returns the limit's membership on
// the core window plus a certificate for every retained core element.
inline PruneResult prune_minimal(const FiniteSet& w, const EventuallyPeriodicSet& c, Window win) {
    if (!is_complement(w, c)) throw NotAComplement();
    const long long margin = 2 * w.diameter();
    const long long elo = win.lo - margin, ehi = win.hi + margin;

    std::vector<bool> present(ehi - elo + 1);
    for (long long x = elo; x <= ehi; ++x) present[x - elo] = c.contains(x);
    auto member = [&](long long x) {
        if (x >= elo && x <= ehi) return static_cast<bool>(present[x - elo]);
        return c.contains(x);
    };

    auto consider = [&](long long cand) {
        if (cand < elo || cand > ehi) return;
        if (!present[cand - elo]) return;
        if (detail::removable_impl(w, member, cand)) present[cand - elo] = false;
    };
    const long long kmax = std::max(std::llabs(elo), std::llabs(ehi));
    consider(0);
    for (long long k = 1; k <= kmax; ++k) {
        consider(-k);
        consider(k);
    }

    PruneResult res;
    res.core_window = win;
    res.enlarged_window = Window{elo, ehi};
    res.enlarged_members = present;
    res.core_members.resize(win.size());
    for (long long x = win.lo; x <= win.hi; ++x) {
        const bool m = present[x - elo];
        res.core_members[x - win.lo] = m;
        if (m) {
            auto target = detail::lone_target(w, member, x);
            // retained elements were non-removable at their turn, and later
            // removals cannot restore an alternative
            if (!target) throw std::logic_error("retained element lost its lone target");
            res.certificates.push_back({x, *target});
        }
    }
    return res;
}

struct MinimalityReport {
    bool minimal = true;
    std::vector<MinimalityCertificate> certificates;
    std::optional<long long> removable_element;
};

// True iff no c ∈ (membership ∩ window) is removable; certificates attached
// for every checked element when minimal.
inline MinimalityReport is_minimal_on_window(const FiniteSet& w, const MembershipFn& member,
                                             Window win) {
    MinimalityReport rep;
    for (long long c = win.lo; c <= win.hi; ++c) {
        if (!member(c)) continue;
        auto target = detail::lone_target(w, member, c);
        if (!target) {
            rep.minimal = false;
            rep.removable_element = c;
            rep.certificates.clear();
            return rep;
        }
        rep.certificates.push_back({c, *target});
    }
    return rep;
}

inline MinimalityReport is_minimal_on_window(const FiniteSet& w, const EventuallyPeriodicSet& c,
                                             Window win) {
    return is_minimal_on_window(w, [&c](long long x) { return c.contains(x); }, win);
}

} // namespace zadic::complements
