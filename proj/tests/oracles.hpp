#pragma once

// Test-only oracles, kept independent of the library's algorithms.
//
// The word-length oracle runs breadth-first search over the integers with
// unit-cost steps ±g^i; the uniqueness oracle exhaustively enumerates digit
// vectors that satisfy the canonicity conditions and histograms their
// values.  Neither touches the balanced-division or rewrite code paths.

#include <zadic/types.hpp>

#include <cstdlib>
#include <queue>
#include <unordered_map>
#include <vector>

namespace oracles {

// Exact word lengths over A_g = {0} ∪ {±g^i} for all |n| <= query_bound.
//
// BFS explores states |x| <= state_bound with steps ±g^i, i <= max_exp,
// where max_exp is the smallest r with g^r >= 2*query_bound+1 and
// state_bound = g^(max_exp+1).  Any n in range has a minimum-length word
// (sorted by descending exponent) whose partial sums stay within
// g^(r+1) of zero, so the restriction loses nothing; every BFS path is a
// genuine word, so the result is never an underestimate either.
class WordLengthBfs {
public:
    WordLengthBfs(long long g, long long query_bound) : query_bound_(query_bound) {
        long long max_exp = 0;
        long long pw = 1;
        while (pw < 2 * query_bound + 1) {
            pw *= g;
            ++max_exp;
        }
        state_bound_ = pw * g;
        std::vector<long long> steps;
        for (long long i = 0, p = 1; i <= max_exp; ++i, p *= g) steps.push_back(p);

        dist_.assign(2 * state_bound_ + 1, -1);
        std::queue<long long> q;
        dist_[state_bound_] = 0; // state 0
        q.push(0);
        while (!q.empty()) {
            const long long x = q.front();
            q.pop();
            const int d = dist_[x + state_bound_];
            for (long long p : steps) {
                for (long long nx : {x + p, x - p}) {
                    if (nx < -state_bound_ || nx > state_bound_) continue;
                    auto& slot = dist_[nx + state_bound_];
                    if (slot == -1) {
                        slot = d + 1;
                        q.push(nx);
                    }
                }
            }
        }
    }

    int length(long long n) const { return dist_.at(n + state_bound_); }
    long long query_bound() const { return query_bound_; }

private:
    long long query_bound_;
    long long state_bound_;
    std::vector<int> dist_;
};

// Histogram of values of ALL digit vectors with leading index <= max_index
// that satisfy the canonicity conditions for base g, restricted to values
// |v| <= value_bound.  Vectors are enumerated from the top digit down with
// interval pruning, counting each digit string of length max_index+1 once
// (a vector with a shorter support appears via its zero-padded string).
inline std::unordered_map<long long, long long>
count_canonical_vectors(long long g, long long max_index, long long value_bound) {
    const long long bound = g / 2; // digit bound, == (g-1)/2 for odd g
    const bool even = (g % 2 == 0);

    std::vector<long long> pow(max_index + 2);
    pow[0] = 1;
    for (long long i = 1; i <= max_index + 1; ++i) pow[i] = pow[i - 1] * g;
    // max |Σ_{i<=j} d_i g^i| over admissible digits
    std::vector<long long> tail(max_index + 2, 0);
    for (long long j = 0; j <= max_index; ++j)
        tail[j + 1] = tail[j] + bound * pow[j];

    std::unordered_map<long long, long long> hist;
    // DFS from the top digit down; `above` is the digit at idx+1
    auto rec = [&](auto&& self, long long idx, long long acc, long long above) -> void {
        if (idx < 0) {
            if (std::llabs(acc) <= value_bound) hist[acc]++;
            return;
        }
        for (long long d = -bound; d <= bound; ++d) {
            // a half-digit forces the digit above it to be smaller and
            // sign-compatible
            if (even && std::llabs(d) == bound) {
                if (std::llabs(above) >= bound) continue;
                if ((d > 0 && above < 0) || (d < 0 && above > 0)) continue;
            }
            const long long nacc = acc + d * pow[idx];
            if (std::llabs(nacc) - tail[idx] > value_bound) continue;
            self(self, idx - 1, nacc, d);
        }
    };
    rec(rec, max_index, 0, 0);
    return hist;
}

} // namespace oracles
