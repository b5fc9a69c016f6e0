#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "catmat/common.hpp"
#include "catmat/matroid.hpp"
#include "catmat/paths.hpp"
#include "catmat/polynomial.hpp"

namespace catmat {

/// A linear order on {1..m}: sequence()[k] is the element of rank k.
class LinearOrder {
public:
    static LinearOrder natural(int m) {
        std::vector<int> seq(static_cast<std::size_t>(m));
        std::iota(seq.begin(), seq.end(), 1);
        return LinearOrder(std::move(seq));
    }

    explicit LinearOrder(std::vector<int> sequence) : seq_(std::move(sequence)), pos_(seq_.size() + 1, -1) {
        for (std::size_t k = 0; k < seq_.size(); ++k) {
            const int e = seq_[k];
            if (e < 1 || e > static_cast<int>(seq_.size()) || pos_[static_cast<std::size_t>(e)] != -1)
                throw DomainError("linear order is not a permutation of the ground set");
            pos_[static_cast<std::size_t>(e)] = static_cast<int>(k);
        }
    }

    int size() const { return static_cast<int>(seq_.size()); }
    int position(int e) const { return pos_[static_cast<std::size_t>(e)]; }
    const std::vector<int>& sequence() const { return seq_; }

    /// True iff e precedes every other element of s.
    bool is_least(int e, Subset s) const {
        for (int x : elements(s))
            if (x != e && position(x) < position(e)) return false;
        return true;
    }

private:
    std::vector<int> seq_;
    std::vector<int> pos_;
};

/// {e} ∪ {x in b : b - x + e is a basis}: the unique circuit in b ∪ e.
inline Subset fundamental_circuit(const BasisLookup& is_basis, Subset b, int e) {
    Subset c = element_bit(e);
    for (int x : elements(b))
        if (is_basis((b & ~element_bit(x)) | element_bit(e))) c |= element_bit(x);
    return c;
}

/// {i} ∪ {g outside b : b - i + g is a basis}: the unique bond in (E - b) ∪ i.
inline Subset fundamental_bond(const BasisLookup& is_basis, Subset ground, Subset b, int i) {
    Subset d = element_bit(i);
    for (int g : elements(ground & ~b))
        if (is_basis((b & ~element_bit(i)) | element_bit(g))) d |= element_bit(g);
    return d;
}

struct BasisActivity {
    Subset internal = 0;
    Subset external = 0;
};

inline BasisActivity activity(const BasisLookup& is_basis, Subset ground, Subset b, const LinearOrder& order) {
    BasisActivity out;
    for (int e : elements(ground & ~b))
        if (order.is_least(e, fundamental_circuit(is_basis, b, e))) out.external |= element_bit(e);
    for (int i : elements(b))
        if (order.is_least(i, fundamental_bond(is_basis, ground, b, i))) out.internal |= element_bit(i);
    return out;
}

namespace detail {

inline BasisActivity checked_activity(const BasisFamily& f, Subset b, const LinearOrder& order) {
    if (!f.is_basis(b)) throw DomainError(to_string(b) + " is not a basis");
    if (order.size() != f.ground_size()) throw DomainError("linear order size differs from ground size");
    return activity(BasisLookup(f), f.ground(), b, order);
}

}  // namespace detail

inline Subset internal_activity(const BasisFamily& f, Subset b, const LinearOrder& order) {
    return detail::checked_activity(f, b, order).internal;
}
inline Subset internal_activity(const BasisFamily& f, Subset b) {
    return internal_activity(f, b, LinearOrder::natural(f.ground_size()));
}

inline Subset external_activity(const BasisFamily& f, Subset b, const LinearOrder& order) {
    return detail::checked_activity(f, b, order).external;
}
inline Subset external_activity(const BasisFamily& f, Subset b) {
    return external_activity(f, b, LinearOrder::natural(f.ground_size()));
}

/// Sum over bases of q^{i(B)} t^{e(B)}.
inline BivariatePolynomial tutte_via_activities(const BasisFamily& f, const LinearOrder& order) {
    if (order.size() != f.ground_size()) throw DomainError("linear order size differs from ground size");
    const BasisLookup is_basis(f);
    std::map<std::pair<int, int>, long> counts;
    for (Subset b : f.bases()) {
        const BasisActivity act = activity(is_basis, f.ground(), b, order);
        ++counts[{cardinality(act.internal), cardinality(act.external)}];
    }
    BivariatePolynomial out;
    for (const auto& [e, c] : counts) out.add_term(e.first, e.second, BigInt(c));
    return out;
}

inline BivariatePolynomial tutte_via_activities(const BasisFamily& f) {
    return tutte_via_activities(f, LinearOrder::natural(f.ground_size()));
}

/// Sum over all subsets A of (q-1)^{r(E)-r(A)} (t-1)^{|A|-r(A)}.
inline BivariatePolynomial tutte_via_corank_nullity(const BasisFamily& f) {
    const RankTable r(f);
    std::map<std::pair<int, int>, long> counts;
    const Subset limit = Subset{1} << f.ground_size();
    for (Subset a = 0; a < limit; ++a) ++counts[{f.rank() - r(a), cardinality(a) - r(a)}];

    BivariatePolynomial out;
    for (const auto& [e, c] : counts) {
        const auto [corank, nullity] = e;
        for (int i = 0; i <= corank; ++i) {
            for (int j = 0; j <= nullity; ++j) {
                BigInt coeff = BigInt(c) * binomial(static_cast<unsigned long>(corank), static_cast<unsigned long>(i)) *
                               binomial(static_cast<unsigned long>(nullity), static_cast<unsigned long>(j));
                if ((corank - i + nullity - j) % 2 != 0) coeff = -coeff;
                out.add_term(i, j, coeff);
            }
        }
    }
    return out;
}

/// Sum over Dyck paths of half-length n of q^{a(P)} t^{b(P)}; equal to 1 for n = 0.
inline BivariatePolynomial tutte_catalan_direct(int n) {
    if (n == 0) return BivariatePolynomial(1);
    std::map<std::pair<int, int>, long> counts;
    for_each_dyck(n, [&](Subset s) {
        int h = 0, zeros = 0;
        for (int x = 1; x <= 2 * n; ++x) {
            h += contains(s, x) ? 1 : -1;
            zeros += h == 0;
        }
        ++counts[{std::countr_one(s), zeros}];
    });
    BivariatePolynomial out;
    for (const auto& [e, c] : counts) out.add_term(e.first, e.second, BigInt(c));
    return out;
}

/// Largest truncation order accepted by catalan_tutte_series.
inline constexpr int kMaxSeriesOrder = 20;

/// Expands (1 + K x C(x)) / (1 - qt x + K x C(x)), K = qt - q - t, to order N.
inline PolynomialSeries catalan_tutte_series(int order) {
    require_bound(order >= 0 && order <= kMaxSeriesOrder,
                  "series order must lie in [0," + std::to_string(kMaxSeriesOrder) + "]");
    const auto q = BivariatePolynomial::q();
    const auto t = BivariatePolynomial::t();
    const BivariatePolynomial k = q * t - q - t;

    PolynomialSeries one(order), cat(order), qt_x(order);
    one[0] = 1;
    for (int i = 0; i <= order; ++i) cat[i] = BivariatePolynomial::monomial(catalan_number(i), 0, 0);
    if (order >= 1) qt_x[1] = q * t;
    const PolynomialSeries kxc = k * cat.shifted();

    const PolynomialSeries numerator = one + kxc;
    const PolynomialSeries denominator = one - qt_x + kxc;
    return numerator.divided_by(denominator);
}

/// T_n(q,t) == qt * sum_{r+s=n-1} T_r(q,1) T_s(1,t), all sides from the direct sum.
inline bool recursion_check(int n) {
    require_bound(n >= 0 && n <= 12, "recursion check needs 0 <= n <= 12");
    if (n == 0) return tutte_catalan_direct(0) == BivariatePolynomial(1);
    std::vector<BivariatePolynomial> t;
    for (int k = 0; k < n; ++k) t.push_back(tutte_catalan_direct(k));
    BivariatePolynomial sum;
    for (int r = 0; r <= n - 1; ++r) sum += t[static_cast<std::size_t>(r)].at_t_one() * t[static_cast<std::size_t>(n - 1 - r)].at_q_one();
    return BivariatePolynomial::q() * BivariatePolynomial::t() * sum == tutte_catalan_direct(n);
}

namespace detail {

inline BigInt stat_count_closed_form(int n, int k) {
    if (k < 1 || k > n) throw DomainError("statistic value k must satisfy 1 <= k <= n");
    const unsigned long m = 2 * static_cast<unsigned long>(n) - static_cast<unsigned long>(k);
    BigInt v = BigInt(k) * binomial(m, static_cast<unsigned long>(n));
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), m);
    return v;
}

}  // namespace detail

/// Closed-form number of Dyck paths of half-length n with a(P) = k.
inline BigInt a_stat_count(int n, int k) { return detail::stat_count_closed_form(n, k); }

/// Closed-form number of Dyck paths of half-length n with b(P) = k.
inline BigInt b_stat_count(int n, int k) { return detail::stat_count_closed_form(n, k); }

/// Histograms of a(P) and b(P) by enumeration; index k holds the count for value k.
inline std::pair<std::vector<long>, std::vector<long>> stat_histograms(int n) {
    std::vector<long> a(static_cast<std::size_t>(n) + 1, 0), b(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) return {a, b};
    for_each_dyck(n, [&](Subset s) {
        const StepSet p(n, s);
        ++a[static_cast<std::size_t>(stat_a(p))];
        ++b[static_cast<std::size_t>(stat_b(p))];
    });
    return {a, b};
}

}  // namespace catmat
