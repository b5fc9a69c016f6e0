#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catmat/catalan.hpp"
#include "catmat/common.hpp"
#include "catmat/family.hpp"
#include "catmat/matroid.hpp"

namespace catmat {

/// Largest |λ| for tableau enumeration.
inline constexpr int kMaxTableauSize = 10;
/// Largest poset for linear-extension enumeration.
inline constexpr int kMaxPosetSize = 9;

// ---------------------------------------------------------------------------
// Shifted families

/// All subsets of bases.
inline SetFamily independence_complex(const BasisFamily& f) {
    require_bound(f.ground_size() <= kMaxSweepGround,
                  "independence complex needs ground size <= " + std::to_string(kMaxSweepGround));
    std::vector<char> mark(std::size_t{1} << f.ground_size(), 0);
    for (Subset b : f.bases()) {
        Subset s = b;
        while (true) {
            mark[s] = 1;
            if (s == 0) break;
            s = (s - 1) & b;
        }
    }
    std::vector<Subset> faces;
    for (Subset s = 0; s < mark.size(); ++s)
        if (mark[s]) faces.push_back(s);
    return SetFamily(f.ground_size(), std::move(faces));
}

struct ShiftCheck {
    bool ok = true;
    Subset face = 0;  // F
    int removed = 0;  // j in F
    int added = 0;    // i < j, i not in F
};

/// Checks that F - j ∪ i stays in the family for every member F, j in F and absent i < j.
inline ShiftCheck is_shifted_family(const SetFamily& fam) {
    for (Subset f : fam.lex_sorted()) {
        for (int j : elements(f)) {
            for (int i = 1; i < j; ++i) {
                if (contains(f, i)) continue;
                if (!fam.contains((f & ~element_bit(j)) | element_bit(i))) return ShiftCheck{false, f, j, i};
            }
        }
    }
    return {};
}

struct ShiftRecovery {
    std::optional<ShiftVector> shift;
    std::vector<int> candidate;  // componentwise maxima of the sorted bases
    Subset discrepancy = 0;      // first set (lex order) in exactly one of the two families
    bool discrepancy_is_extra = false;  // true: present in SM(candidate) but not in the input
};

/// Reads s_i as the largest i-th smallest element over all bases, then verifies SM(s) reproduces the input.
inline ShiftRecovery recover_shift_vector(const BasisFamily& f) {
    Subset covered = 0;
    for (Subset b : f.bases()) covered |= b;
    if (covered != f.ground()) {
        throw DomainError("matroid has loops " + to_string(f.ground() & ~covered) + "; strip them first");
    }
    if (f.rank() == 0) throw DomainError("rank-0 matroid has no shift vector");

    ShiftRecovery out;
    out.candidate.assign(static_cast<std::size_t>(f.rank()), 0);
    for (Subset b : f.bases()) {
        const auto es = elements(b);
        for (std::size_t i = 0; i < es.size(); ++i) out.candidate[i] = std::max(out.candidate[i], es[i]);
    }
    const ShiftVector s(out.candidate);
    const BasisFamily rebuilt = shifted_matroid(s);

    std::vector<Subset> mine = f.as_family().lex_sorted();
    std::vector<Subset> theirs = rebuilt.as_family().lex_sorted();
    std::size_t i = 0;
    while (i < mine.size() && i < theirs.size() && mine[i] == theirs[i]) ++i;
    if (i == mine.size() && i == theirs.size()) {
        out.shift = s;
        return out;
    }
    if (i < theirs.size() && (i == mine.size() || lex_less(theirs[i], mine[i]))) {
        out.discrepancy = theirs[i];
        out.discrepancy_is_extra = true;
    } else {
        out.discrepancy = mine[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partitions and tableaux

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw DomainError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }  // 0-based row
    int size() const {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }
    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    for (int c = 1; c <= lambda.part(0); ++c) {
        int len = 0;
        while (lambda.part(len) >= c) ++len;
        out.push_back(len);
    }
    return Partition(std::move(out));
}

/// All partitions of `total`, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int total) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

/// All partitions μ ⊆ λ, including the empty one.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        out.emplace_back(cur);
        if (row >= lambda.length()) return;
        for (int p = 1; p <= std::min(cap, lambda.part(row)); ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, lambda.part(0));
    return out;
}

/// A standard filling of a Young diagram (English convention).
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
        const int total = shape_.size();
        if (static_cast<int>(rows_.size()) != shape_.length()) throw DomainError("tableau rows do not match shape");
        std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
        for (int r = 0; r < shape_.length(); ++r) {
            const auto& row = rows_[static_cast<std::size_t>(r)];
            if (static_cast<int>(row.size()) != shape_.part(r)) throw DomainError("tableau row length mismatch");
            for (int c = 0; c < shape_.part(r); ++c) {
                const int v = row[static_cast<std::size_t>(c)];
                if (v < 1 || v > total || seen[static_cast<std::size_t>(v)]++) throw DomainError("entries must be a permutation");
                if (c > 0 && row[static_cast<std::size_t>(c - 1)] >= v) throw DomainError("rows must increase");
                if (r > 0 && rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
                    throw DomainError("columns must increase");
            }
        }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    /// Entries occupying the cells of μ.
    Subset entries_in(const Partition& mu) const {
        Subset out = 0;
        for (int r = 0; r < mu.length(); ++r)
            for (int c = 0; c < mu.part(r); ++c) out |= element_bit(at(r, c));
        return out;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Every standard Young tableau of shape λ; entry k goes to the topmost admissible row first.
inline std::vector<Tableau> enumerate_syt(const Partition& lambda) {
    const int total = lambda.size();
    require_bound(total <= kMaxTableauSize, "tableau enumeration needs |λ| <= " + std::to_string(kMaxTableauSize));
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
    auto rec = [&](auto&& self, int next) -> void {
        if (next > total) {
            out.emplace_back(lambda, rows);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            const int len = static_cast<int>(row.size());
            if (len >= lambda.part(r)) continue;
            if (r > 0 && static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
            row.push_back(next);
            self(self, next + 1);
            row.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// s_i = 1 + λ'_1 + ... + λ'_{i-1}, i = 1..λ_1.
inline ShiftVector first_row_shift_vector(const Partition& lambda) {
    if (lambda.length() == 0) throw DomainError("first-row shift vector needs a non-empty partition");
    const Partition conj = conjugate(lambda);
    std::vector<int> s;
    int acc = 1;
    for (int i = 0; i < lambda.part(0); ++i) {
        s.push_back(acc);
        acc += conj.part(i);
    }
    return ShiftVector(std::move(s));
}

inline SetFamily mu_sets(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw DomainError("μ is not contained in λ");
    std::vector<Subset> out;
    for (const Tableau& t : enumerate_syt(lambda)) out.push_back(t.entries_in(mu));
    return SetFamily(lambda.size(), std::move(out));
}

inline SetFamily first_row_sets(const Partition& lambda) {
    if (lambda.length() == 0) return SetFamily(0, {Subset{0}});
    return mu_sets(lambda, Partition({lambda.part(0)}));
}

/// Same members, ignoring a difference in ground-set size.
inline bool same_members(const SetFamily& fam, const BasisFamily& f) { return fam.members() == f.bases(); }

// ---------------------------------------------------------------------------
// Posets

/// Finite poset on {1..size} given by cover pairs (i, j) meaning i < j.
class Poset {
public:
    Poset(int size, std::vector<std::pair<int, int>> covers) : size_(size), covers_(std::move(covers)) {
        if (size < 0 || size > kMaxGround) throw DomainError("poset size out of range");
        for (const auto& [i, j] : covers_)
            if (i < 1 || i > size || j < 1 || j > size || i == j) throw DomainError("cover pair out of range");

        // Kahn's algorithm; closure accumulates along the topological order
        std::vector<int> indeg(static_cast<std::size_t>(size) + 1, 0);
        for (const auto& c : covers_) ++indeg[static_cast<std::size_t>(c.second)];
        std::vector<int> queue;
        for (int v = 1; v <= size; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
        below_.assign(static_cast<std::size_t>(size) + 1, 0);
        std::size_t head = 0;
        while (head < queue.size()) {
            const int u = queue[head++];
            for (const auto& [i, j] : covers_) {
                if (i != u) continue;
                below_[static_cast<std::size_t>(j)] |= below_[static_cast<std::size_t>(u)] | element_bit(u);
                if (--indeg[static_cast<std::size_t>(j)] == 0) queue.push_back(j);
            }
        }
        if (static_cast<int>(queue.size()) != size) throw DomainError("cover relation contains a cycle");
    }

    int size() const { return size_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    /// Elements strictly below x.
    Subset below(int x) const { return below_[static_cast<std::size_t>(x)]; }
    bool less(int x, int y) const { return catmat::contains(below(y), x); }

    bool is_order_ideal(Subset ideal) const {
        if ((ideal & ~full_set(size_)) != 0) return false;
        for (int y : elements(ideal))
            if ((below(y) & ~ideal) != 0) return false;
        return true;
    }

private:
    int size_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Subset> below_;
};

/// ext[i-1] is the value f(i) of the linear extension at element i.
using LinearExtension = std::vector<int>;

/// All linear extensions, choosing the smallest available minimal element first.
inline std::vector<LinearExtension> linear_extensions(const Poset& p) {
    require_bound(p.size() <= kMaxPosetSize, "linear extensions need |P| <= " + std::to_string(kMaxPosetSize));
    std::vector<LinearExtension> out;
    LinearExtension f(static_cast<std::size_t>(p.size()), 0);
    auto rec = [&](auto&& self, int value, Subset placed) -> void {
        if (value > p.size()) {
            out.push_back(f);
            return;
        }
        for (int x = 1; x <= p.size(); ++x) {
            if (contains(placed, x) || (p.below(x) & ~placed) != 0) continue;
            f[static_cast<std::size_t>(x - 1)] = value;
            self(self, value + 1, placed | element_bit(x));
        }
    };
    rec(rec, 1, Subset{0});
    return out;
}

inline SetFamily iset_family(const Poset& p, Subset ideal) {
    if (!p.is_order_ideal(ideal)) throw DomainError(to_string(ideal) + " is not an order ideal");
    std::vector<Subset> out;
    for (const LinearExtension& f : linear_extensions(p)) {
        Subset s = 0;
        for (int i : elements(ideal)) s |= element_bit(f[static_cast<std::size_t>(i - 1)]);
        out.push_back(s);
    }
    return SetFamily(p.size(), std::move(out));
}

/// Cell (r, c) of λ, 0-based, is element row_offset(r) + c + 1.
inline int cell_index(const Partition& lambda, int r, int c) {
    int idx = 0;
    for (int i = 0; i < r; ++i) idx += lambda.part(i);
    return idx + c + 1;
}

/// Cells ordered so that linear extensions are exactly the standard fillings:
/// each cell lies below its right and lower neighbours.
inline Poset tableau_poset(const Partition& lambda) {
    std::vector<std::pair<int, int>> covers;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) {
            if (c + 1 < lambda.part(r)) covers.emplace_back(cell_index(lambda, r, c), cell_index(lambda, r, c + 1));
            if (c < lambda.part(r + 1)) covers.emplace_back(cell_index(lambda, r, c), cell_index(lambda, r + 1, c));
        }
    }
    return Poset(lambda.size(), std::move(covers));
}

inline Subset tableau_ideal(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw DomainError("μ is not contained in λ");
    Subset out = 0;
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.part(r); ++c) out |= element_bit(cell_index(lambda, r, c));
    return out;
}

/// First (λ, μ) with |λ| <= max_size whose μ-set family violates the basis axioms.
inline std::optional<std::pair<Partition, Partition>> find_non_matroid_mu_family(int max_size) {
    for (int total = 1; total <= max_size; ++total) {
        for (const Partition& lambda : partitions_of(total)) {
            for (const Partition& mu : subpartitions(lambda)) {
                const SetFamily fam = mu_sets(lambda, mu);
                if (!check_basis_axioms(fam.ground_size(), fam.members()).ok()) return std::make_pair(lambda, mu);
            }
        }
    }
    return std::nullopt;
}

}  // namespace catmat
