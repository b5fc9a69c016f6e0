#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "catmat/common.hpp"
#include "catmat/family.hpp"

namespace catmat {

/// Largest ground set accepted by the 2^m subset sweeps.
inline constexpr int kMaxSweepGround = 16;
/// Largest ground set accepted by the uniform-minor search.
inline constexpr int kMaxMinorGround = 12;
/// Largest basis family accepted by the quadratic exchange-axiom check.
inline constexpr std::size_t kMaxAxiomBases = 5000;

/// A finite matroid given extensionally by its bases on the ground set {1..m}.
///
/// Construction enforces non-emptiness and equal cardinality; the exchange
/// axiom is checked on demand by check_basis_axioms.
class BasisFamily {
public:
    BasisFamily() : bases_{Subset{0}} {}

    BasisFamily(int ground_size, std::vector<Subset> bases) : m_(ground_size), bases_(std::move(bases)) {
        if (ground_size < 0 || ground_size > kMaxGround) throw DomainError("ground size out of range");
        if (bases_.empty()) throw DomainError("basis family must be non-empty");
        std::sort(bases_.begin(), bases_.end());
        bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
        rank_ = cardinality(bases_.front());
        for (Subset b : bases_) {
            if ((b & ~full_set(m_)) != 0) throw DomainError("basis " + to_string(b) + " outside ground set");
            if (cardinality(b) != rank_) throw DomainError("bases of unequal cardinality");
        }
    }

    int ground_size() const { return m_; }
    int rank() const { return rank_; }
    const std::vector<Subset>& bases() const { return bases_; }
    std::size_t size() const { return bases_.size(); }
    bool is_basis(Subset s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }
    Subset ground() const { return full_set(m_); }

    SetFamily as_family() const { return SetFamily(m_, bases_); }

    friend bool operator==(const BasisFamily&, const BasisFamily&) = default;

private:
    int m_ = 0;
    int rank_ = 0;
    std::vector<Subset> bases_;
};

/// Hash lookup over a basis family for inner loops.
class BasisLookup {
public:
    explicit BasisLookup(const BasisFamily& f) : set_(f.bases().begin(), f.bases().end()) {}
    bool operator()(Subset s) const { return set_.count(s) != 0; }

private:
    std::unordered_set<Subset> set_;
};

struct AxiomCheck {
    enum class Failure { None, Empty, UnequalCardinality, Exchange };
    Failure failure = Failure::None;
    // for Exchange: A, B in the family and a in A - B admitting no exchange
    Subset a_set = 0;
    Subset b_set = 0;
    int removed = 0;

    bool ok() const { return failure == Failure::None; }
    std::string describe() const {
        switch (failure) {
            case Failure::None: return "ok";
            case Failure::Empty: return "axiom B1 fails: family is empty";
            case Failure::UnequalCardinality:
                return "members " + to_string(a_set) + " and " + to_string(b_set) + " differ in size";
            case Failure::Exchange:
                return "axiom B2 fails: A=" + to_string(a_set) + ", B=" + to_string(b_set) +
                       ", a=" + std::to_string(removed);
        }
        return "";
    }
};

/// Checks B1, equal cardinality and the exchange axiom B2 on a raw candidate family.
inline AxiomCheck check_basis_axioms(int ground_size, std::vector<Subset> family) {
    AxiomCheck res;
    if (family.empty()) {
        res.failure = AxiomCheck::Failure::Empty;
        return res;
    }
    std::sort(family.begin(), family.end(), lex_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    require_bound(family.size() <= kMaxAxiomBases,
                  "exchange check limited to " + std::to_string(kMaxAxiomBases) + " bases");
    for (Subset s : family)
        if ((s & ~full_set(ground_size)) != 0) throw DomainError("member " + to_string(s) + " outside ground set");
    for (Subset s : family) {
        if (cardinality(s) != cardinality(family.front())) {
            res.failure = AxiomCheck::Failure::UnequalCardinality;
            res.a_set = family.front();
            res.b_set = s;
            return res;
        }
    }
    const std::unordered_set<Subset> lookup(family.begin(), family.end());
    for (Subset a : family) {
        for (Subset b : family) {
            const Subset only_b = b & ~a;
            for (int x : elements(a & ~b)) {
                const Subset base = a & ~element_bit(x);
                bool found = false;
                for (Subset rest = only_b; rest != 0 && !found; rest &= rest - 1)
                    found = lookup.count(base | (rest & (~rest + 1))) != 0;
                if (!found) {
                    res.failure = AxiomCheck::Failure::Exchange;
                    res.a_set = a;
                    res.b_set = b;
                    res.removed = x;
                    return res;
                }
            }
        }
    }
    return res;
}

inline AxiomCheck check_basis_axioms(const BasisFamily& f) { return check_basis_axioms(f.ground_size(), f.bases()); }

/// Brute-force rank: the largest intersection of a with a basis.
inline int rank_of(const BasisFamily& f, Subset a) {
    int best = 0;
    for (Subset b : f.bases()) best = std::max(best, cardinality(a & b));
    return best;
}

/// Rank of every subset of the ground set, indexed by bitmask.
class RankTable {
public:
    explicit RankTable(const BasisFamily& f) : m_(f.ground_size()), rank_(f.rank()) {
        require_bound(m_ <= kMaxSweepGround, "subset sweep needs ground size <= " + std::to_string(kMaxSweepGround));
        const std::size_t count = std::size_t{1} << m_;
        std::vector<char> indep(count, 0);
        for (Subset b : f.bases()) {
            Subset s = b;
            while (true) {
                indep[s] = 1;
                if (s == 0) break;
                s = (s - 1) & b;
            }
        }
        table_.assign(count, 0);
        for (std::size_t s = 1; s < count; ++s) {
            if (indep[s]) {
                table_[s] = static_cast<signed char>(cardinality(s));
                continue;
            }
            int best = 0;
            for (Subset rest = s; rest != 0; rest &= rest - 1)
                best = std::max<int>(best, table_[s & ~(rest & (~rest + 1))]);
            table_[s] = static_cast<signed char>(best);
        }
    }

    int operator()(Subset a) const { return table_[a]; }
    int ground_size() const { return m_; }
    int rank() const { return rank_; }

private:
    int m_;
    int rank_;
    std::vector<signed char> table_;
};

namespace detail {

template <typename Pred>
SetFamily sweep(const BasisFamily& f, Pred&& pred) {
    const RankTable r(f);
    std::vector<Subset> out;
    const Subset limit = Subset{1} << f.ground_size();
    for (Subset a = 0; a < limit; ++a)
        if (pred(r, a)) out.push_back(a);
    return SetFamily(f.ground_size(), std::move(out));
}

}  // namespace detail

inline SetFamily independents(const BasisFamily& f) {
    return detail::sweep(f, [](const RankTable& r, Subset a) { return r(a) == cardinality(a); });
}

inline SetFamily spanning_sets(const BasisFamily& f) {
    return detail::sweep(f, [](const RankTable& r, Subset a) { return r(a) == r.rank(); });
}

inline SetFamily flats(const BasisFamily& f) {
    const Subset ground = f.ground();
    return detail::sweep(f, [ground](const RankTable& r, Subset a) {
        const int ra = r(a);
        for (Subset out = ground & ~a; out != 0; out &= out - 1)
            if (r(a | (out & (~out + 1))) == ra) return false;
        return true;
    });
}

inline SetFamily circuits(const BasisFamily& f) {
    return detail::sweep(f, [](const RankTable& r, Subset a) {
        if (a == 0 || r(a) == cardinality(a)) return false;
        for (Subset rest = a; rest != 0; rest &= rest - 1) {
            const Subset smaller = a & ~(rest & (~rest + 1));
            if (r(smaller) != cardinality(smaller)) return false;
        }
        return true;
    });
}

inline Subset closure(const BasisFamily& f, Subset a) {
    const int ra = rank_of(f, a);
    Subset out = a;
    for (int y = 1; y <= f.ground_size(); ++y)
        if (!contains(a, y) && rank_of(f, a | element_bit(y)) == ra) out |= element_bit(y);
    return out;
}

inline BasisFamily dual(const BasisFamily& f) {
    std::vector<Subset> comp;
    comp.reserve(f.size());
    for (Subset b : f.bases()) comp.push_back(f.ground() & ~b);
    return BasisFamily(f.ground_size(), std::move(comp));
}

/// Minimal sets meeting every basis, computed as circuits of the dual.
inline SetFamily bonds(const BasisFamily& f) { return circuits(dual(f)); }

/// Image of a under sigma, where sigma[i-1] is the image of element i.
inline Subset apply_permutation(Subset a, const std::vector<int>& sigma) {
    Subset out = 0;
    for (int e : elements(a)) out |= element_bit(sigma[static_cast<std::size_t>(e - 1)]);
    return out;
}

inline BasisFamily relabel(const BasisFamily& f, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != f.ground_size()) throw DomainError("permutation size mismatch");
    std::vector<int> seen(sigma.size(), 0);
    for (int v : sigma) {
        if (v < 1 || v > f.ground_size() || seen[static_cast<std::size_t>(v - 1)]++)
            throw DomainError("not a permutation of the ground set");
    }
    std::vector<Subset> out;
    out.reserve(f.size());
    for (Subset b : f.bases()) out.push_back(apply_permutation(b, sigma));
    return BasisFamily(f.ground_size(), std::move(out));
}

/// Permutation sigma with relabel(f, sigma) == g, if one exists.
///
/// Elements are only mapped within classes of equal basis-count, and partial
/// maps are pruned by the pairwise basis-count matrix.
inline std::optional<std::vector<int>> is_isomorphic(const BasisFamily& f, const BasisFamily& g) {
    if (f.ground_size() != g.ground_size() || f.rank() != g.rank() || f.size() != g.size()) return std::nullopt;
    const int m = f.ground_size();
    auto pair_counts = [m](const BasisFamily& h) {
        std::vector<std::vector<long>> c(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
        for (Subset b : h.bases())
            for (int i : elements(b))
                for (int j : elements(b)) ++c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        return c;
    };
    const auto cf = pair_counts(f);
    const auto cg = pair_counts(g);

    // search-space size = product of factorials of the invariant classes
    {
        std::vector<long> degs;
        for (int i = 0; i < m; ++i) degs.push_back(cf[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
        std::vector<long> dg;
        for (int i = 0; i < m; ++i) dg.push_back(cg[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
        auto sf = degs, sg = dg;
        std::sort(sf.begin(), sf.end());
        std::sort(sg.begin(), sg.end());
        if (sf != sg) return std::nullopt;
        double space = 1;
        for (std::size_t i = 0; i < sf.size();) {
            std::size_t j = i;
            while (j < sf.size() && sf[j] == sf[i]) ++j;
            for (std::size_t k = 2; k <= j - i; ++k) space *= static_cast<double>(k);
            i = j;
        }
        require_bound(space <= 3628800.0, "isomorphism search space exceeds 10!");
    }

    std::vector<int> sigma(static_cast<std::size_t>(m), 0);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, int i) -> void {
        if (found) return;
        if (i == m) {
            if (relabel(f, sigma) == g) found = sigma;
            return;
        }
        for (int v = 0; v < m && !found; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int j = 0; j <= i && ok; ++j) {
                const int vj = j == i ? v : sigma[static_cast<std::size_t>(j)] - 1;
                ok = cf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                     cg[static_cast<std::size_t>(v)][static_cast<std::size_t>(vj)];
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(v)] = 1;
            sigma[static_cast<std::size_t>(i)] = v + 1;
            self(self, i + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
    return found;
}

/// Drops element e and shifts larger elements down by one.
constexpr Subset remove_element(Subset s, int e) {
    const Subset low = s & full_set(e - 1);
    return low | ((s >> e) << (e - 1));
}

/// Deletion; a coloop is removed from every basis.
inline BasisFamily delete_element(const BasisFamily& f, int e) {
    if (e < 1 || e > f.ground_size()) throw DomainError("element " + std::to_string(e) + " not in ground set");
    std::vector<Subset> avoid;
    for (Subset b : f.bases())
        if (!contains(b, e)) avoid.push_back(remove_element(b, e));
    if (avoid.empty())
        for (Subset b : f.bases()) avoid.push_back(remove_element(b & ~element_bit(e), e));
    return BasisFamily(f.ground_size() - 1, std::move(avoid));
}

/// Contraction; contracting a loop leaves the bases unchanged.
inline BasisFamily contract_element(const BasisFamily& f, int e) {
    if (e < 1 || e > f.ground_size()) throw DomainError("element " + std::to_string(e) + " not in ground set");
    std::vector<Subset> through;
    for (Subset b : f.bases())
        if (contains(b, e)) through.push_back(remove_element(b & ~element_bit(e), e));
    if (through.empty())
        for (Subset b : f.bases()) through.push_back(remove_element(b, e));
    return BasisFamily(f.ground_size() - 1, std::move(through));
}

/// M / contract \ del, re-indexed order-preservingly onto the remaining elements.
inline BasisFamily minor(const BasisFamily& f, Subset contract, Subset del) {
    if ((contract & del) != 0) throw DomainError("contract and delete sets overlap");
    BasisFamily g = f;
    // highest elements first so earlier indices stay valid
    const Subset all = contract | del;
    std::vector<int> elems = elements(all);
    for (auto it = elems.rbegin(); it != elems.rend(); ++it)
        g = contains(contract, *it) ? contract_element(g, *it) : delete_element(g, *it);
    return g;
}

inline BasisFamily uniform(int k, int m) {
    if (k < 0 || m < 0 || k > m) throw DomainError("uniform matroid needs 0 <= k <= m");
    std::vector<Subset> bases;
    for_each_k_subset(m, k, [&](Subset s) { bases.push_back(s); });
    return BasisFamily(m, std::move(bases));
}

struct MinorWitness {
    Subset contract = 0;
    Subset del = 0;
};

/// Searches for a minor isomorphic to U_{k,l}.
///
/// Every minor is M/C\D with C independent and D coindependent, so it suffices
/// to try each l-set X and each independent C of size r-k outside X: the minor
/// is U_{k,l} exactly when every k-subset Y of X makes Y ∪ C a basis.
inline std::optional<MinorWitness> has_uniform_minor(const BasisFamily& f, int k, int l) {
    const int m = f.ground_size();
    require_bound(m <= kMaxMinorGround, "minor search needs ground size <= " + std::to_string(kMaxMinorGround));
    if (k < 0 || l < k) throw DomainError("uniform minor target needs 0 <= k <= l");
    const int c_size = f.rank() - k;
    if (c_size < 0 || l + c_size > m) return std::nullopt;
    const BasisLookup is_basis(f);
    const Subset ground = f.ground();
    std::optional<MinorWitness> found;
    for_each_k_subset(m, l, [&](Subset x) {
        if (found) return;
        const Subset outside = ground & ~x;
        const std::vector<int> rest = elements(outside);
        for_each_k_subset(static_cast<int>(rest.size()), c_size, [&](Subset pick) {
            if (found) return;
            Subset c = 0;
            for (int idx : elements(pick)) c |= element_bit(rest[static_cast<std::size_t>(idx - 1)]);
            if (rank_of(f, c) != c_size) return;
            const std::vector<int> xs = elements(x);
            bool all = true;
            for_each_k_subset(l, k, [&](Subset ypick) {
                if (!all) return;
                Subset y = 0;
                for (int idx : elements(ypick)) y |= element_bit(xs[static_cast<std::size_t>(idx - 1)]);
                all = is_basis(y | c);
            });
            if (all) found = MinorWitness{c, outside & ~c};
        });
    });
    return found;
}

}  // namespace catmat
