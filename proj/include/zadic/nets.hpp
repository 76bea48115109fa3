#pragma once

// h-nets in (Z, d_g) built as unions of spheres S_e(s*q), with per-integer
// cover certificates that follow the constructive proofs, plus windowed
// verification for arbitrary membership rules.
//
// The window verifier reports `undecided` rather than claiming global
// facts: the ball A^h is infinite, so a capped search can refute coverage
// only for an explicit finite candidate set.  Certificates produced for
// constructed nets are globally valid.

#include "gadic.hpp"
#include "types.hpp"

#include <functional>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

namespace zadic::nets {

// Membership rule: n ∈ C iff ℓ_g(n) ≡ 0 (mod stride).  stride = h+1 and
// stride = 2h+1 are the two constructions; both contain 0 (q = 0).
struct NetSpec {
    long long base = 2;
    long long radius = 1;  // h
    long long stride = 3;  // s

    static NetSpec sphere_union(long long g, long long h, long long s) {
        if (g < 2) throw InvalidBase(g);
        if (h < 0) throw std::invalid_argument("net radius must be >= 0");
        if (s != h + 1 && s != 2 * h + 1)
            throw std::invalid_argument("stride must be h+1 or 2h+1");
        return NetSpec{g, h, s};
    }
    static NetSpec wide(long long g, long long h) { return sphere_union(g, h, 2 * h + 1); }
    static NetSpec narrow(long long g, long long h) { return sphere_union(g, h, h + 1); }
};

inline bool net_member(const NetSpec& spec, const Int& n) {
    return gadic::length(spec.base, n) % spec.stride == 0;
}

// Witness that n is within distance h of the net: n = c + Σ word with
// member(c) and |word| <= h.
struct CoverCertificate {
    Int n;
    Int c;
    std::vector<gadic::SignedPower> word;

    bool validate(const NetSpec& spec) const {
        if (static_cast<long long>(word.size()) > spec.radius) return false;
        Int sum = c;
        for (const auto& t : word) sum += t.value(spec.base);
        return sum == n && net_member(spec, c);
    }
};

// Builds a certificate by the construction proofs.  Write ℓ_g(n) = s*q + r:
// for stride h+1 take 0 <= r <= h and strip the r highest-order terms of
// the canonical witness (each stripped prefix stays geodesic, so the
// remainder lands in S_e(s*q)); for stride 2h+1 take |r| <= h and, when
// r < 0, extend n by |r| fresh leading powers instead, each of which
// raises the length by exactly one.
inline CoverCertificate cover_witness(const NetSpec& spec, const Int& n) {
    const long long g = spec.base;
    const long long s = spec.stride;
    const auto rep = gadic::canonical_repr(g, n);
    const long long len = rep.length();

    long long r = len % s;
    if (spec.stride == 2 * spec.radius + 1 && 2 * r > s) r -= s; // balanced remainder

    CoverCertificate cert;
    cert.n = n;
    if (r >= 0) {
        // strip the r top terms of the canonical witness
        Int c = n;
        std::vector<gadic::SignedPower> word;
        long long need = r;
        for (long long i = rep.leading_index(); i >= 0 && need > 0; --i) {
            const long long d = rep.digits[i];
            const int sign = d > 0 ? +1 : -1;
            for (long long k = std::llabs(d); k > 0 && need > 0; --k, --need) {
                word.push_back({sign, i});
                c -= gadic::SignedPower{sign, i}.value(g);
            }
        }
        cert.c = c;
        cert.word = std::move(word);
    } else {
        // extend n to the next sphere; the connecting word undoes the steps
        Int c = n;
        std::vector<gadic::SignedPower> word;
        for (long long k = 0; k < -r; ++k) {
            const auto a = gadic::extend_length(g, c);
            c += a.value(g);
            word.push_back({-a.sign, a.exp});
        }
        cert.c = c;
        cert.word = std::move(word);
    }
    return cert;
}

enum class Verdict { covered, counterexample, undecided };

struct NetCheckReport {
    Verdict verdict = Verdict::covered;
    std::optional<long long> offending; // first n without (found) cover
    std::vector<CoverCertificate> certificates;
};

using MembershipFn = std::function<bool(const Int&)>;

namespace detail {

// Values of length <= h over A_g with exponents <= cap, together with one
// witness word each, ordered by (word length, |value|) so that cheap
// covers are probed first.
inline std::vector<std::pair<Int, std::vector<gadic::SignedPower>>>
ball_elements(long long g, long long h, long long cap) {
    std::unordered_map<Int, std::vector<gadic::SignedPower>, boost::hash<Int>> best;
    best.emplace(Int(0), std::vector<gadic::SignedPower>{});
    std::vector<std::pair<Int, std::vector<gadic::SignedPower>>> frontier{{Int(0), {}}};
    for (long long step = 0; step < h; ++step) {
        std::vector<std::pair<Int, std::vector<gadic::SignedPower>>> next;
        for (const auto& [v, w] : frontier) {
            for (long long e = 0; e <= cap; ++e) {
                for (int sign : {+1, -1}) {
                    const gadic::SignedPower t{sign, e};
                    Int nv = v + t.value(g);
                    auto [it, fresh] = best.try_emplace(nv);
                    if (!fresh) continue;
                    auto nw = w;
                    nw.push_back(t);
                    it->second = nw;
                    next.emplace_back(std::move(nv), std::move(nw));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::pair<Int, std::vector<gadic::SignedPower>>> out(best.begin(), best.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const auto ka = std::make_pair(a.second.size(), abs_int(a.first));
        const auto kb = std::make_pair(b.second.size(), abs_int(b.first));
        if (ka != kb) return ka < kb;
        return a.first < b.first;
    });
    return out;
}

} // namespace detail

// Checks G = A^h C over a window for an arbitrary membership rule.  For
// every n it searches c = n - v with member(c) over all v of length <= h
// and exponent <= cap; a miss is reported as undecided(n) because only the
// capped part of the infinite ball was searched.
inline NetCheckReport net_check_window(long long g, const MembershipFn& member, long long h,
                                       Window win, long long cap, int threads = 1) {
    if (g < 2) throw InvalidBase(g);
    const auto ball = detail::ball_elements(g, h, cap);
    const long long count = win.size();
    std::vector<std::optional<CoverCertificate>> certs(count);

    auto worker = [&](long long begin, long long end) {
        for (long long i = begin; i < end; ++i) {
            const Int n = win.lo + i;
            for (const auto& [v, w] : ball) {
                Int c = n - v;
                if (member(c)) {
                    certs[i] = CoverCertificate{n, std::move(c), w};
                    break;
                }
            }
        }
    };
    if (threads <= 1 || count < 128) {
        worker(0, count);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const long long b = t * chunk, e = std::min(count, b + chunk);
            if (b >= e) break;
            pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    NetCheckReport report;
    for (long long i = 0; i < count; ++i) {
        if (!certs[i]) {
            report.verdict = Verdict::undecided;
            report.offending = win.lo + i;
            report.certificates.clear();
            return report;
        }
        report.certificates.push_back(std::move(*certs[i]));
    }
    return report;
}

// Windowed check with the net's own membership rule.
inline NetCheckReport net_check_window(const NetSpec& spec, Window win, long long cap,
                                       int threads = 1) {
    return net_check_window(
        spec.base, [&spec](const Int& x) { return net_member(spec, x); }, spec.radius, win, cap,
        threads);
}

// Exact check against an explicit finite candidate set: coverage of each n
// is decided by computing ℓ_g(n - c) for every c, so a miss is a genuine
// counterexample.
inline NetCheckReport net_check_window_explicit(long long g, const std::vector<Int>& candidates,
                                                long long h, Window win) {
    if (g < 2) throw InvalidBase(g);
    NetCheckReport report;
    for (long long n = win.lo; n <= win.hi; ++n) {
        bool covered = false;
        for (const Int& c : candidates) {
            if (gadic::length(g, Int(n) - c) <= h) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.verdict = Verdict::counterexample;
            report.offending = n;
            report.certificates.clear();
            return report;
        }
    }
    return report;
}

// Nets are preserved by supersets and translations.  Re-verifies C + t and
// C ∪ {extra} on the core window for each sampled shift and extra element;
// the caller is expected to have verified C itself on a window enlarged by
// max |t|.
inline bool superset_translate_closure_check(long long g, const MembershipFn& member, long long h,
                                             Window core, long long cap,
                                             const std::vector<long long>& shifts,
                                             const std::vector<long long>& extras) {
    for (long long t : shifts) {
        auto shifted = [&member, t](const Int& x) { return member(x - t); };
        if (net_check_window(g, shifted, h, core, cap).verdict != Verdict::covered) return false;
    }
    for (long long x0 : extras) {
        auto widened = [&member, x0](const Int& x) { return x == x0 || member(x); };
        if (net_check_window(g, widened, h, core, cap).verdict != Verdict::covered) return false;
    }
    return true;
}

// Heuristic window experiment: greedily drop net elements while the window
// stays covered.  Makes no global minimality claim.
inline std::vector<long long> minimal_net_window_experiment(long long g, long long h, Window win,
                                                            std::vector<long long> members) {
    auto covered = [&](const std::vector<long long>& ms) {
        std::vector<Int> cand(ms.begin(), ms.end());
        return net_check_window_explicit(g, cand, h, win).verdict == Verdict::covered;
    };
    if (!covered(members)) return members;
    for (std::size_t i = 0; i < members.size();) {
        std::vector<long long> trial = members;
        trial.erase(trial.begin() + static_cast<long long>(i));
        if (covered(trial))
            members = std::move(trial);
        else
            ++i;
    }
    return members;
}

} // namespace zadic::nets
