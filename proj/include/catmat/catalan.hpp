#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catmat/common.hpp"
#include "catmat/family.hpp"
#include "catmat/matroid.hpp"
#include "catmat/paths.hpp"

namespace catmat {

/// Largest s_n accepted by shifted_matroid.
inline constexpr int kMaxShiftedGround = 16;

/// Strictly increasing positive integers s_1 < ... < s_n.
class ShiftVector {
public:
    ShiftVector() = default;

    explicit ShiftVector(std::vector<int> values) : s_(std::move(values)) {
        if (s_.empty()) throw DomainError("shift vector must be non-empty");
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] < 1) throw DomainError("shift vector entries must be positive");
            if (i > 0 && s_[i] <= s_[i - 1]) throw DomainError("shift vector must be strictly increasing");
        }
        if (s_.back() > kMaxGround) throw DomainError("shift vector entry exceeds 64");
    }

    int size() const { return static_cast<int>(s_.size()); }
    int operator[](int i) const { return s_[static_cast<std::size_t>(i)]; }  // 0-based
    int last() const { return s_.back(); }
    const std::vector<int>& values() const { return s_; }

    friend bool operator==(const ShiftVector&, const ShiftVector&) = default;

private:
    std::vector<int> s_;
};

/// Bases are the up-step sets of the Dyck paths of half-length n, on ground set [2n].
inline BasisFamily catalan_matroid(int n) {
    std::vector<Subset> bases;
    for_each_dyck(n, [&](Subset s) { bases.push_back(s); });
    return BasisFamily(2 * n, std::move(bases));
}

/// Bases {a_1 < ... < a_n} with a_i <= s_i, on ground set [s_n].
inline BasisFamily shifted_matroid(const ShiftVector& s) {
    require_bound(s.last() <= kMaxShiftedGround,
                  "shifted matroid needs s_n <= " + std::to_string(kMaxShiftedGround));
    std::vector<Subset> bases;
    const int n = s.size();
    auto rec = [&](auto&& self, int i, int prev, Subset acc) -> void {
        if (i == n) {
            bases.push_back(acc);
            return;
        }
        for (int a = prev + 1; a <= s[i]; ++a) self(self, i + 1, a, acc | element_bit(a));
    };
    rec(rec, 0, 0, Subset{0});
    return BasisFamily(s.last(), std::move(bases));
}

/// Adjoins `loops` new loop elements after the current ground set.
inline BasisFamily with_trailing_loops(const BasisFamily& f, int loops) {
    return BasisFamily(f.ground_size() + loops, f.bases());
}

/// C_n = SM(1,3,...,2n-1) plus the loop 2n.
inline std::pair<ShiftVector, int> catalan_as_shifted(int n) {
    if (n < 1) throw DomainError("catalan_as_shifted needs n >= 1");
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) s.push_back(2 * i - 1);
    return {ShiftVector(std::move(s)), 2 * n};
}

namespace detail {

inline StepSet catalan_path(int n, Subset a) {
    if (n < 0 || 2 * n > kMaxGround) throw DomainError("half length out of range");
    return StepSet(n, a);
}

}  // namespace detail

inline int rank_closed_form(int n, Subset a) {
    return n + floor_div(min_height(detail::catalan_path(n, a)), 2);
}

/// Odd minimum height, and everything after each minimum lies in a; the full set is always a flat.
inline bool is_flat_closed_form(int n, Subset a) {
    const StepSet p = detail::catalan_path(n, a);
    if (a == full_set(2 * n)) return true;
    const auto h = height_profile(p);
    const int lo = min_height(p);
    if (lo % 2 == 0) return false;
    for (int x = 0; x <= 2 * n; ++x) {
        if (h[static_cast<std::size_t>(x)] != lo) continue;
        const Subset tail = full_set(2 * n) & ~full_set(x);
        if ((tail & ~a) != 0) return false;
    }
    return true;
}

inline bool is_independent_closed_form(int n, Subset a) {
    const StepSet p = detail::catalan_path(n, a);
    return min_height(p) == height(p, 2 * n);
}

inline bool is_spanning_closed_form(int n, Subset a) {
    return min_height(detail::catalan_path(n, a)) == 0;
}

/// a = {2k} ∪ (2k + D) for some 1 <= k <= n and Dyck up-set D of half-length n-k.
inline bool is_circuit_closed_form(int n, Subset a) {
    detail::catalan_path(n, a);
    if (a == 0) return false;
    const int first = min_element(a);
    if (first % 2 != 0) return false;
    const int k = first / 2;
    const Subset rest = (a & ~element_bit(first)) >> first;
    return is_dyck(StepSet(n - k, rest));
}

inline SetFamily circuits_closed_form(int n) {
    require_bound(n >= 0 && n <= max_half_length(), "circuit enumeration needs n <= " + std::to_string(max_half_length()));
    std::vector<Subset> out;
    for (int k = 1; k <= n; ++k)
        for_each_dyck(n - k, [&](Subset d) { out.push_back(element_bit(2 * k) | (d << (2 * k))); });
    return SetFamily(2 * n, std::move(out));
}

/// Maximum height 1, and no element of a lies beyond any position at height 1.
inline bool is_bond_closed_form(int n, Subset a) {
    const StepSet p = detail::catalan_path(n, a);
    if (a == 0) return false;
    if (max_height(p) != 1) return false;
    const auto h = height_profile(p);
    for (int x = 0; x <= 2 * n; ++x)
        if (h[static_cast<std::size_t>(x)] == 1 && max_element(a) > x) return false;
    return true;
}

/// Number of rank-(n-1) flats above a rank-(n-2) flat: (x+3)/2, x the first position at height -1.
inline int hyperplane_count_over_flat(int n, Subset a) {
    if (!is_flat_closed_form(n, a) || rank_closed_form(n, a) != n - 2)
        throw DomainError(to_string(a) + " is not a rank-(n-2) flat of C_" + std::to_string(n));
    const auto h = height_profile(StepSet(n, a));
    for (int x = 0; x <= 2 * n; ++x)
        if (h[static_cast<std::size_t>(x)] == -1) return (x + 3) / 2;
    throw DomainError("rank-(n-2) flat never reaches height -1");
}

}  // namespace catmat
