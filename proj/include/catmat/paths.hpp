#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "catmat/common.hpp"

namespace catmat {

/// A path of 2n steps, each (1,1) or (1,-1), stored as the set of up-step positions.
class StepSet {
public:
    StepSet() = default;

    StepSet(int half_length, Subset ups) : n_(half_length), ups_(ups) {
        if (half_length < 0 || 2 * half_length > kMaxGround)
            throw DomainError("half length " + std::to_string(half_length) + " out of range");
        if ((ups & ~full_set(2 * half_length)) != 0)
            throw DomainError("up-step " + to_string(ups) + " outside {1.." + std::to_string(2 * half_length) + "}");
    }

    StepSet(int half_length, const std::vector<int>& ups) : StepSet(half_length, make_subset(ups)) {}

    int half_length() const { return n_; }
    int length() const { return 2 * n_; }
    Subset ups() const { return ups_; }
    int up_count() const { return cardinality(ups_); }

    friend bool operator==(const StepSet&, const StepSet&) = default;

private:
    int n_ = 0;
    Subset ups_ = 0;
};

/// Height after the first x steps: 2|ups ∩ [x]| - x.
inline int height(const StepSet& p, int x) {
    if (x < 0 || x > p.length())
        throw DomainError("height position " + std::to_string(x) + " outside [0," + std::to_string(p.length()) + "]");
    return 2 * cardinality(p.ups() & full_set(x)) - x;
}

/// Heights at x = 0..2n.
inline std::vector<int> height_profile(const StepSet& p) {
    std::vector<int> h(static_cast<std::size_t>(p.length()) + 1, 0);
    for (int x = 1; x <= p.length(); ++x) h[x] = h[x - 1] + (contains(p.ups(), x) ? 1 : -1);
    return h;
}

// The starting point x = 0 (height 0) is part of the domain for both extremes.
inline int min_height(const StepSet& p) {
    int h = 0, lo = 0;
    for (int x = 1; x <= p.length(); ++x) {
        h += contains(p.ups(), x) ? 1 : -1;
        lo = std::min(lo, h);
    }
    return lo;
}

inline int max_height(const StepSet& p) {
    int h = 0, hi = 0;
    for (int x = 1; x <= p.length(); ++x) {
        h += contains(p.ups(), x) ? 1 : -1;
        hi = std::max(hi, h);
    }
    return hi;
}

inline bool is_dyck(const StepSet& p) {
    return p.up_count() == p.half_length() && min_height(p) == 0;
}

namespace detail {

template <typename Fn>
void dyck_dfs(int n, int pos, int ups_used, int h, Subset acc, Fn& fn) {
    if (pos > 2 * n) {
        fn(acc);
        return;
    }
    // up-step first so that output is lexicographic on the up-set
    if (ups_used < n) dyck_dfs(n, pos + 1, ups_used + 1, h + 1, acc | element_bit(pos), fn);
    if (h > 0) dyck_dfs(n, pos + 1, ups_used, h - 1, acc, fn);
}

}  // namespace detail

/// Calls fn(Subset) on every Dyck up-set of half-length n, in lexicographic order.
template <typename Fn>
void for_each_dyck(int n, Fn&& fn) {
    if (n < 0) throw DomainError("half length must be non-negative");
    require_bound(n <= max_half_length(),
                  "Dyck enumeration needs 0 <= n <= " + std::to_string(max_half_length()));
    detail::dyck_dfs(n, 1, 0, 0, Subset{0}, fn);
}

inline std::vector<StepSet> enumerate_dyck(int n) {
    std::vector<StepSet> out;
    for_each_dyck(n, [&](Subset s) { out.emplace_back(n, s); });
    return out;
}

/// C_n = binom(2n, n) / (n + 1), memoized.
inline BigInt catalan_number(int n) {
    if (n < 0) throw DomainError("catalan_number of negative n");
    static std::mutex mu;
    static std::map<int, BigInt> memo;
    std::lock_guard lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    BigInt value = binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    memo.emplace(n, value);
    return value;
}

namespace detail {

inline void require_dyck(const StepSet& p, const char* op) {
    if (p.half_length() < 1 || !is_dyck(p))
        throw DomainError(std::string(op) + " requires a non-empty Dyck path, got " + to_string(p.ups()));
}

}  // namespace detail

/// Number of up-steps before the first down-step.
inline int stat_a(const StepSet& p) {
    detail::require_dyck(p, "stat_a");
    return std::countr_one(p.ups());
}

/// Number of x in {1..2n} with height zero.
inline int stat_b(const StepSet& p) {
    detail::require_dyck(p, "stat_b");
    int h = 0, zeros = 0;
    for (int x = 1; x <= p.length(); ++x) {
        h += contains(p.ups(), x) ? 1 : -1;
        zeros += h == 0;
    }
    return zeros;
}

/// First-return decomposition p = {1} ∪ (1 + p1) ∪ (2r + 2 + p2).
inline std::pair<StepSet, StepSet> decompose(const StepSet& p) {
    detail::require_dyck(p, "decompose");
    int h = 0, ret = 0;
    for (int x = 1; x <= p.length(); ++x) {
        h += contains(p.ups(), x) ? 1 : -1;
        if (h == 0) {
            ret = x;
            break;
        }
    }
    const int r = ret / 2 - 1;
    const int s = p.half_length() - 1 - r;
    const Subset inner = (p.ups() >> 1) & full_set(2 * r);
    const Subset tail = p.ups() >> ret;
    return {StepSet(r, inner), StepSet(s, tail)};
}

inline StepSet recompose(const StepSet& p1, const StepSet& p2) {
    const int r = p1.half_length();
    const int n = r + p2.half_length() + 1;
    return StepSet(n, Subset{1} | (p1.ups() << 1) | (p2.ups() << (2 * r + 2)));
}

}  // namespace catmat
