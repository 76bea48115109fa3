#pragma once

// Word lengths over mixed power generating sets: A_g, A_P = {0} ∪ {±p^i},
// and A_{S(P)} = {0} ∪ {±s : s in the multiplicative semigroup of P}.
//
// Exponents are capped at B, so multi-base results are upper bounds that
// are exhaustive below the cap; they carry capped=true.  Single-base
// results are exact whenever the cap covers the canonical representation.
//
// Search is meet-in-the-middle: sums of ceil(h/2) and floor(h/2)
// generators, hash-joined, with iterative deepening on h.

#include "gadic.hpp"
#include "types.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

namespace zadic::wordlen {

enum class SetKind { single_base, prime_powers, semigroup };

struct Generator {
    Int base;           // for semigroup elements, base == magnitude and exp == 1
    long long exp = 0;
    Int magnitude;      // base^exp

    bool operator==(const Generator&) const = default;
};

struct WitnessTerm {
    int sign = 1;
    Generator gen;

    Int value() const { return sign > 0 ? gen.magnitude : Int(-gen.magnitude); }
    bool operator==(const WitnessTerm&) const = default;
};

struct LengthResult {
    Int n;
    long long length = 0;
    std::vector<WitnessTerm> witness;
    bool capped = true;
    long long cap = 0;
};

struct DioSolution {
    long long a = 0;
    long long b = 0;
    Int target;
    bool operator==(const DioSolution&) const = default;
};

namespace detail {
inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
} // namespace detail

struct GeneratingSetSpec {
    SetKind kind = SetKind::single_base;
    long long base = 2;            // single_base only
    std::vector<long long> primes; // prime_powers / semigroup
    long long cap = 20;            // exponent cap B
    long long max_depth = 6;       // deepening budget h_max

    static GeneratingSetSpec single(long long g, long long cap = 20) {
        if (g < 2) throw InvalidBase(g);
        GeneratingSetSpec s;
        s.kind = SetKind::single_base;
        s.base = g;
        s.cap = cap;
        return s;
    }
    static GeneratingSetSpec prime_powers_of(std::vector<long long> ps, long long cap = 20) {
        GeneratingSetSpec s;
        s.kind = SetKind::prime_powers;
        s.primes = normalize_primes(std::move(ps));
        s.cap = cap;
        return s;
    }
    static GeneratingSetSpec semigroup_of(std::vector<long long> ps, long long cap = 20) {
        GeneratingSetSpec s;
        s.kind = SetKind::semigroup;
        s.primes = normalize_primes(std::move(ps));
        s.cap = cap;
        return s;
    }

    // Single-base behaviour also covers A_P with one prime.
    bool single_base_like() const {
        return kind == SetKind::single_base ||
               (kind == SetKind::prime_powers && primes.size() == 1);
    }
    long long effective_base() const {
        return kind == SetKind::single_base ? base : primes.at(0);
    }

    // Largest generator magnitude admitted under the cap.
    Int magnitude_cap() const {
        if (kind == SetKind::single_base) return int_pow(base, cap);
        if (primes.empty()) return 1;
        return int_pow(primes.back(), cap);
    }

    // Positive generator magnitudes, deduplicated, ordered by (exp, base);
    // the symmetric ± closure and the 0 element are implied.
    std::vector<Generator> generators() const {
        std::vector<Generator> out;
        switch (kind) {
        case SetKind::single_base:
            for (long long i = 0; i <= cap; ++i) out.push_back({base, i, int_pow(base, i)});
            break;
        case SetKind::prime_powers: {
            out.push_back({primes.at(0), 0, 1});
            for (long long i = 1; i <= cap; ++i)
                for (long long p : primes) out.push_back({p, i, int_pow(p, i)});
            break;
        }
        case SetKind::semigroup: {
            const Int limit = magnitude_cap();
            std::vector<Int> elems;
            auto dfs = [&](auto&& self, std::size_t idx, Int v) -> void {
                if (v > 1) elems.push_back(v);
                for (std::size_t j = idx; j < primes.size(); ++j) {
                    Int nv = v * primes[j];
                    if (nv > limit) continue;
                    self(self, j, nv);
                }
            };
            if (!primes.empty()) dfs(dfs, 0, Int(1));
            std::sort(elems.begin(), elems.end());
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
            for (const Int& s : elems) out.push_back({s, 1, s});
            break;
        }
        }
        std::sort(out.begin(), out.end(), [](const Generator& a, const Generator& b) {
            return std::tie(a.exp, a.base) < std::tie(b.exp, b.base);
        });
        return out;
    }

private:
    static std::vector<long long> normalize_primes(std::vector<long long> ps) {
        if (ps.empty()) throw std::invalid_argument("prime list must be nonempty");
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        for (long long p : ps)
            if (!detail::is_prime(p))
                throw std::invalid_argument("not a prime: " + std::to_string(p));
        return ps;
    }
};

// Reusable search state for one generating set.  The generator table is
// fixed at construction; half-sum tables grow on demand, so share one
// engine per thread (or use the free functions, which are pure).
class Engine {
public:
    explicit Engine(GeneratingSetSpec spec) : spec_(std::move(spec)), gens_(spec_.generators()) {
        levels_.push_back({});
        levels_[0].emplace(Int(0), Entry{0, {}});
    }

    const GeneratingSetSpec& spec() const { return spec_; }
    const std::vector<Generator>& generators() const { return gens_; }

    LengthResult word_length(const Int& n) {
        const Int m = spec_.magnitude_cap();
        if (abs_int(n) > m * spec_.max_depth) throw UnreachableWithinCap(0);
        for (long long h = 0; h <= spec_.max_depth; ++h) {
            auto hit = probe(n, h);
            if (!hit) continue;
            LengthResult res;
            res.n = n;
            res.length = hit->count;
            res.witness = decode(hit->wit);
            res.cap = spec_.cap;
            res.capped = true;
            if (spec_.single_base_like()) {
                const auto rep = gadic::canonical_repr(spec_.effective_base(), n);
                res.capped = rep.leading_index() > spec_.cap;
            }
            return res;
        }
        throw UnreachableWithinCap(spec_.max_depth);
    }

    // Least h' <= h with an h'-term representation, or nullopt if ℓ > h.
    std::optional<long long> length_up_to(const Int& n, long long h) {
        for (long long d = 0; d <= h; ++d)
            if (probe(n, d)) return d;
        return std::nullopt;
    }

    // All n in the window of capped length exactly h, ascending.
    std::vector<long long> sphere(long long h, Window win, int threads = 1) {
        if (h < 0) throw std::invalid_argument("sphere: radius must be >= 0");
        ensure_depth((h + 1) / 2);
        const long long count = win.size();
        std::vector<char> in_sphere(count, 0);
        auto worker = [&](long long begin, long long end) {
            for (long long i = begin; i < end; ++i) {
                auto l = length_up_to(Int(win.lo + i), h);
                if (l && *l == h) in_sphere[i] = 1;
            }
        };
        run_chunked(count, threads, worker);
        std::vector<long long> out;
        for (long long i = 0; i < count; ++i)
            if (in_sphere[i]) out.push_back(win.lo + i);
        return out;
    }

    // Smallest positive n <= search_limit of capped length exactly h.
    std::optional<long long> lambda(long long h, long long search_limit) {
        if (h < 1) throw std::invalid_argument("lambda: h must be >= 1");
        for (long long n = 1; n <= search_limit; ++n) {
            auto l = length_up_to(Int(n), h);
            if (l && *l == h) return n;
        }
        return std::nullopt;
    }

    // True iff every contiguous sub-sum of the witness has capped word
    // length equal to its term count.
    bool geodesic_subword_check(const std::vector<WitnessTerm>& witness) {
        const std::size_t r = witness.size();
        for (std::size_t i = 0; i < r; ++i) {
            Int sum = 0;
            for (std::size_t j = i; j < r; ++j) {
                sum += witness[j].value();
                const long long want = static_cast<long long>(j - i + 1);
                auto l = length_up_to(sum, want);
                if (!l || *l != want) return false;
            }
        }
        return true;
    }

private:
    struct Entry {
        std::int32_t count = 0;
        std::vector<std::int32_t> wit; // sorted signed generator codes
    };
    using Table = std::unordered_map<Int, Entry, boost::hash<Int>>;

    GeneratingSetSpec spec_;
    std::vector<Generator> gens_;
    std::vector<Table> levels_; // levels_[k]: best entry per value reachable in <= k terms

    // code 2*id for +gens_[id], 2*id+1 for -gens_[id]; ascending code order
    // is the (exponent, base, sign) tie-break order
    Int code_value(std::int32_t c) const {
        const Int& m = gens_[c >> 1].magnitude;
        return (c & 1) ? Int(-m) : m;
    }

    std::vector<WitnessTerm> decode(const std::vector<std::int32_t>& codes) const {
        std::vector<WitnessTerm> w;
        w.reserve(codes.size());
        for (auto c : codes) w.push_back({(c & 1) ? -1 : +1, gens_[c >> 1]});
        return w;
    }

    void ensure_depth(long long k) {
        while (static_cast<long long>(levels_.size()) <= k) {
            const long long j = static_cast<long long>(levels_.size());
            Table next = levels_.back();
            for (const auto& [v, e] : levels_.back()) {
                if (e.count != j - 1) continue; // frontier only
                for (std::int32_t id = 0; id < static_cast<std::int32_t>(gens_.size()); ++id) {
                    for (std::int32_t c : {2 * id, 2 * id + 1}) {
                        Int nv = v + code_value(c);
                        std::vector<std::int32_t> wit = e.wit;
                        wit.insert(std::upper_bound(wit.begin(), wit.end(), c), c);
                        auto [it, fresh] = next.try_emplace(nv);
                        if (fresh || it->second.count > j ||
                            (it->second.count == j && wit < it->second.wit)) {
                            it->second = Entry{static_cast<std::int32_t>(j), std::move(wit)};
                        }
                    }
                }
            }
            levels_.push_back(std::move(next));
        }
    }

    // Representation of n with exactly h terms, if one exists; minimal and
    // lexicographically smallest over the joined halves.
    std::optional<Entry> probe(const Int& n, long long h) {
        const long long p = (h + 1) / 2, q = h / 2;
        ensure_depth(p);
        const Table& big = levels_[p];
        const Table& small = levels_[q];
        std::optional<Entry> best;
        for (const auto& [y, ey] : small) {
            auto it = big.find(n - y);
            if (it == big.end()) continue;
            const auto& ex = it->second;
            Entry cand;
            cand.count = ex.count + ey.count;
            if (best && best->count < cand.count) continue;
            cand.wit.resize(ex.wit.size() + ey.wit.size());
            std::merge(ex.wit.begin(), ex.wit.end(), ey.wit.begin(), ey.wit.end(),
                       cand.wit.begin());
            if (!best || cand.count < best->count ||
                (cand.count == best->count && cand.wit < best->wit)) {
                best = std::move(cand);
            }
        }
        return best;
    }

    static void run_chunked(long long count, int threads,
                            const std::function<void(long long, long long)>& worker) {
        if (threads <= 1 || count < 256) {
            worker(0, count);
            return;
        }
        const long long chunk = (count + threads - 1) / threads;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            const long long b = t * chunk, e = std::min(count, b + chunk);
            if (b >= e) break;
            pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }
};

inline LengthResult word_length(const GeneratingSetSpec& spec, const Int& n) {
    return Engine(spec).word_length(n);
}

inline std::vector<long long> sphere(const GeneratingSetSpec& spec, long long h, Window win,
                                     int threads = 1) {
    return Engine(spec).sphere(h, win, threads);
}

inline std::optional<long long> lambda(const GeneratingSetSpec& spec, long long h,
                                       long long search_limit) {
    return Engine(spec).lambda(h, search_limit);
}

inline bool geodesic_subword_check(const GeneratingSetSpec& spec,
                                   const std::vector<WitnessTerm>& witness) {
    return Engine(spec).geodesic_subword_check(witness);
}

// All (a, b) with 1 <= a, b <= exponent_bound and 2^a - 3^b in targets.
// Exact big-integer arithmetic; results ordered by (a, b).
inline std::vector<DioSolution> diophantine_search(const std::vector<Int>& targets,
                                                   long long exponent_bound) {
    if (exponent_bound < 1) throw std::invalid_argument("exponent bound must be >= 1");
    std::unordered_map<Int, long long, boost::hash<Int>> pow3;
    Int t = 1;
    for (long long b = 1; b <= exponent_bound; ++b) {
        t *= 3;
        pow3.emplace(t, b);
    }
    std::vector<DioSolution> out;
    Int p = 1;
    for (long long a = 1; a <= exponent_bound; ++a) {
        p *= 2;
        for (const Int& c : targets) {
            auto it = pow3.find(p - c);
            if (it != pow3.end()) out.push_back({a, it->second, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const DioSolution& x, const DioSolution& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return out;
}

} // namespace zadic::wordlen
