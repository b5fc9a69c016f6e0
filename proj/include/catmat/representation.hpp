#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catmat/catalan.hpp"
#include "catmat/common.hpp"
#include "catmat/matroid.hpp"

namespace catmat {

/// Largest number of generic entries; x_k has about 1.6 * 2^(k-2) bits.
inline constexpr int kMaxGenericEntries = 28;
inline constexpr int kMaxVectorRows = 6;
inline constexpr int kMaxVectorColumns = 12;

/// x_1 = 1, x_i = 1 + (1 + x_1)...(1 + x_{i-1}).
inline std::vector<BigInt> generic_sequence(int k) {
    require_bound(k >= 0 && k <= kMaxGenericEntries,
                  "generic sequence length must lie in [0," + std::to_string(kMaxGenericEntries) + "]");
    std::vector<BigInt> out;
    BigInt product = 1;
    for (int i = 1; i <= k; ++i) {
        out.push_back(i == 1 ? BigInt(1) : BigInt(product + 1));
        product *= out.back() + 1;
    }
    return out;
}

/// Dense integer matrix, row-major, 1-based accessors.
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be non-negative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const BigInt& at(int i, int j) const { return data_[index(i, j)]; }
    BigInt& at(int i, int j) { return data_[index(i, j)]; }

    /// Square submatrix on the given columns (all rows).
    IntegerMatrix columns(Subset cols) const {
        const auto cs = elements(cols);
        IntegerMatrix out(rows_, static_cast<int>(cs.size()));
        for (int i = 1; i <= rows_; ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) out.at(i, static_cast<int>(j) + 1) = at(i, cs[j]);
        return out;
    }

    IntegerMatrix with_zero_columns(int extra) const {
        IntegerMatrix out(rows_, cols_ + extra);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) out.at(i, j) = at(i, j);
        return out;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) throw DomainError("matrix index out of range");
        return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
    }

    int rows_;
    int cols_;
    std::vector<BigInt> data_;
};

/// Staircase matrix: row i may be non-zero only in columns j <= s_i.
class GenericMatrix {
public:
    GenericMatrix(ShiftVector support, IntegerMatrix entries) : support_(std::move(support)), entries_(std::move(entries)) {
        if (entries_.rows() != support_.size() || entries_.cols() < support_.last())
            throw DomainError("matrix shape does not fit its support");
        for (int i = 1; i <= entries_.rows(); ++i)
            for (int j = support_[i - 1] + 1; j <= entries_.cols(); ++j)
                if (entries_.at(i, j) != 0) throw DomainError("non-zero entry outside the staircase support");
    }

    const ShiftVector& support() const { return support_; }
    const IntegerMatrix& entries() const { return entries_; }
    int rows() const { return entries_.rows(); }
    int cols() const { return entries_.cols(); }

private:
    ShiftVector support_;
    IntegerMatrix entries_;
};

/// Fills (i, j <= s_i) row-major with consecutive generic values; zeros elsewhere.
inline GenericMatrix build_representation(const ShiftVector& s) {
    int slots = 0;
    for (int v : s.values()) slots += v;
    require_bound(slots <= kMaxGenericEntries,
                  "representation needs sum(s_i) <= " + std::to_string(kMaxGenericEntries));
    const auto seq = generic_sequence(slots);
    IntegerMatrix m(s.size(), s.last());
    std::size_t next = 0;
    for (int i = 1; i <= s.size(); ++i)
        for (int j = 1; j <= s[i - 1]; ++j) m.at(i, j) = seq[next++];
    return GenericMatrix(s, std::move(m));
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline BigInt determinant(IntegerMatrix a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 1; k < n; ++k) {
        if (a.at(k, k) == 0) {
            int swap = 0;
            for (int r = k + 1; r <= n && swap == 0; ++r)
                if (a.at(r, k) != 0) swap = r;
            if (swap == 0) return 0;
            for (int j = 1; j <= n; ++j) std::swap(a.at(k, j), a.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                BigInt v = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = std::move(v);
            }
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n, n) : BigInt(-a.at(n, n));
}

/// Every maximal minor, keyed by column set, by Laplace expansion along rows 1..n.
///
/// Minors of the top k rows are built from those of the top k-1 rows, so each
/// entry of the (large) bottom row is multiplied only by small cofactors.
inline std::unordered_map<Subset, BigInt> maximal_minors(const IntegerMatrix& a) {
    std::unordered_map<Subset, BigInt> level{{Subset{0}, BigInt(1)}};
    for (int k = 1; k <= a.rows(); ++k) {
        std::unordered_map<Subset, BigInt> next;
        for_each_k_subset(a.cols(), k, [&](Subset cols) {
            BigInt sum = 0;
            int pos = 0;  // expansion along row k, the last row of the k x k minor
            for (int j : elements(cols)) {
                ++pos;
                const BigInt& entry = a.at(k, j);
                if (entry == 0) continue;
                const auto it = level.find(cols & ~element_bit(j));
                if (it->second == 0) continue;
                if ((k + pos) % 2 == 0)
                    sum += entry * it->second;
                else
                    sum -= entry * it->second;
            }
            next.emplace(cols, std::move(sum));
        });
        level = std::move(next);
    }
    return level;
}

/// Column n-subsets with non-zero determinant.
inline BasisFamily vector_matroid(const IntegerMatrix& a) {
    require_bound(a.rows() <= kMaxVectorRows && a.cols() <= kMaxVectorColumns,
                  "vector matroid needs at most " + std::to_string(kMaxVectorRows) + " rows and " +
                      std::to_string(kMaxVectorColumns) + " columns");
    std::vector<Subset> bases;
    for (const auto& [cols, det] : maximal_minors(a))
        if (det != 0) bases.push_back(cols);
    if (bases.empty()) throw DomainError("matrix does not have full row rank");
    return BasisFamily(a.cols(), std::move(bases));
}

inline BasisFamily vector_matroid(const GenericMatrix& m) { return vector_matroid(m.entries()); }

/// Sorted b satisfies b_i <= s_i.
inline bool rook_basis_test(const ShiftVector& s, Subset b) {
    if (cardinality(b) != s.size() || (b & ~full_set(s.last())) != 0)
        throw DomainError("candidate must be an n-subset of [s_n]");
    const auto bs = elements(b);
    for (int i = 0; i < s.size(); ++i)
        if (bs[static_cast<std::size_t>(i)] > s[i]) return false;
    return true;
}

/// Whether n non-attacking rooks fit on the support of the columns b (augmenting-path matching).
inline bool has_rook_placement(const ShiftVector& s, Subset b) {
    const auto cols = elements(b);
    const int n = s.size();
    if (static_cast<int>(cols.size()) != n) return false;
    std::vector<int> col_owner(cols.size(), -1);
    auto augment = [&](auto&& self, int row, std::vector<char>& seen) -> bool {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c] > s[row] || seen[c]) continue;
            seen[c] = 1;
            if (col_owner[c] < 0 || self(self, col_owner[c], seen)) {
                col_owner[c] = row;
                return true;
            }
        }
        return false;
    };
    for (int row = 0; row < n; ++row) {
        std::vector<char> seen(cols.size(), 0);
        if (!augment(augment, row, seen)) return false;
    }
    return true;
}

inline bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true;  // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

struct NonRepresentability {
    bool concluded = false;
    MinorWitness witness;
    int minor_size = 0;  // l in U(2, l)
    std::string reason;
};

/// For q <= n - 2, exhibits a U(2, n) minor of C_n; U(2, n) needs a field with at least n - 1 elements.
inline NonRepresentability non_representability_witness(int n, long q) {
    require_bound(n >= 3 && n <= 6, "non-representability probe needs 3 <= n <= 6");
    if (!is_prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
    NonRepresentability out;
    if (q > n - 2) {
        out.reason = "q = " + std::to_string(q) + " exceeds n - 2; the U(2,n) criterion is silent";
        return out;
    }
    const auto w = has_uniform_minor(catalan_matroid(n), 2, n);
    if (!w) throw DomainError("no U(2," + std::to_string(n) + ") minor found");
    out.concluded = true;
    out.witness = *w;
    out.minor_size = n;
    out.reason = "U(2," + std::to_string(n) + ") is a minor; it is F_q-representable only if q >= " +
                 std::to_string(n - 1);
    return out;
}

}  // namespace catmat
