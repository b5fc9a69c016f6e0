#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "catmat/catalan.hpp"
#include "catmat/matroid.hpp"
#include "oracles.hpp"

using namespace catmat;

namespace {

BasisFamily family(int m, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Subset> bases;
    for (auto s : sets) bases.push_back(make_subset(s));
    return BasisFamily(m, bases);
}

std::vector<Subset> sets(std::initializer_list<std::initializer_list<int>> xs) {
    std::vector<Subset> out;
    for (auto s : xs) out.push_back(make_subset(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> reversal(int m) {
    std::vector<int> sigma;
    for (int x = 1; x <= m; ++x) sigma.push_back(m + 1 - x);
    return sigma;
}

BasisFamily random_matroid(std::mt19937_64& rng) {
    // shifted matroids with their elements scrambled
    std::uniform_int_distribution<Subset> pick(1, full_set(7));
    const BasisFamily f = shifted_matroid(ShiftVector(elements(pick(rng))));
    std::vector<int> sigma(static_cast<std::size_t>(f.ground_size()));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return relabel(f, sigma);
}

}  // namespace

TEST(BasisFamily, Validation) {
    EXPECT_THROW(BasisFamily(2, std::vector<Subset>{}), DomainError);
    EXPECT_THROW(BasisFamily(2, sets({{1}, {1, 2}})), DomainError);
    EXPECT_THROW(BasisFamily(2, sets({{3}})), DomainError);
    const BasisFamily empty;
    EXPECT_EQ(empty.ground_size(), 0);
    EXPECT_EQ(empty.bases(), std::vector<Subset>{0});
}

TEST(Axioms, Examples) {
    EXPECT_TRUE(check_basis_axioms(catalan_matroid(3)).ok());
    const AxiomCheck bad = check_basis_axioms(4, sets({{1, 2}, {3, 4}}));
    ASSERT_FALSE(bad.ok());
    EXPECT_EQ(bad.failure, AxiomCheck::Failure::Exchange);
    EXPECT_FALSE(bad.describe().empty());
    EXPECT_TRUE(check_basis_axioms(3, sets({{1, 2, 3}})).ok());
    EXPECT_EQ(check_basis_axioms(3, {}).failure, AxiomCheck::Failure::Empty);
    EXPECT_EQ(check_basis_axioms(3, sets({{1}, {2, 3}})).failure, AxiomCheck::Failure::UnequalCardinality);
}

TEST(Axioms, ExchangeWitnessIsGenuine) {
    const AxiomCheck bad = check_basis_axioms(4, sets({{1, 2}, {3, 4}}));
    ASSERT_EQ(bad.failure, AxiomCheck::Failure::Exchange);
    const Subset a = bad.a_set, b = bad.b_set;
    ASSERT_TRUE(contains(a, bad.removed));
    ASSERT_FALSE(contains(b, bad.removed));
    for (int y : elements(b & ~a)) {
        const Subset swapped = (a & ~element_bit(bad.removed)) | element_bit(y);
        EXPECT_TRUE(swapped != make_subset({1, 2}) && swapped != make_subset({3, 4}));
    }
}

TEST(Axioms, AgreeWithLiteralCheckOnRandomFamilies) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Subset> pick(0, full_set(5));
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Subset> fam;
        for (Subset s = 0; s <= full_set(5); ++s)
            if (cardinality(s) == 2 && (pick(rng) & 1)) fam.push_back(s);
        if (fam.empty()) continue;
        EXPECT_EQ(check_basis_axioms(5, fam).ok(), oracle::matroid_bases(fam));
    }
}

TEST(Rank, Examples) {
    const BasisFamily c3 = catalan_matroid(3);
    EXPECT_EQ(rank_of(c3, make_subset({2, 4, 6})), 2);
    EXPECT_EQ(rank_of(c3, 0), 0);
    EXPECT_EQ(rank_of(c3, c3.ground()), 3);
}

TEST(Rank, TableMatchesOracle) {
    for (int n = 1; n <= 5; ++n) {
        const BasisFamily f = catalan_matroid(n);
        const RankTable table(f);
        for (Subset a = 0; a <= f.ground(); ++a) ASSERT_EQ(table(a), oracle::rank(f.bases(), a));
    }
}

TEST(Families, CatalanTwoExamples) {
    const BasisFamily c2 = catalan_matroid(2);
    EXPECT_EQ(flats(c2).members(), sets({{4}, {1, 4}, {2, 3, 4}, {1, 2, 3, 4}}));
    EXPECT_EQ(circuits(c2).members(), sets({{4}, {2, 3}}));
    EXPECT_EQ(bonds(c2).members(), sets({{1}, {2, 3}}));
    EXPECT_EQ(closure(c2, make_subset({2})), make_subset({2, 3, 4}));
}

TEST(Families, MatchOracles) {
    std::mt19937_64 rng(11);
    std::vector<BasisFamily> cases;
    for (int n = 1; n <= 4; ++n) cases.push_back(catalan_matroid(n));
    for (int i = 0; i < 6; ++i) cases.push_back(random_matroid(rng));
    for (const auto& f : cases) {
        const auto& b = f.bases();
        const int m = f.ground_size();
        EXPECT_EQ(independents(f).members(), oracle::sweep(m, [&](Subset a) { return oracle::independent(b, a); }));
        EXPECT_EQ(spanning_sets(f).members(), oracle::sweep(m, [&](Subset a) { return oracle::spanning(b, a); }));
        EXPECT_EQ(flats(f).members(), oracle::sweep(m, [&](Subset a) { return oracle::flat(b, m, a); }));
        EXPECT_EQ(circuits(f).members(), oracle::sweep(m, [&](Subset a) { return oracle::circuit(b, a); }));
        EXPECT_EQ(bonds(f).members(), oracle::sweep(m, [&](Subset a) { return oracle::bond(b, a); }));
    }
}

TEST(Families, SweepBound) { EXPECT_THROW(flats(uniform(1, kMaxSweepGround + 1)), ResourceError); }

TEST(Dual, Examples) {
    EXPECT_EQ(dual(catalan_matroid(2)).bases(), sets({{3, 4}, {2, 4}}));
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= m; ++k) EXPECT_EQ(dual(uniform(k, m)), uniform(m - k, m));
}

TEST(Dual, IsAnInvolution) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const BasisFamily f = random_matroid(rng);
        EXPECT_EQ(dual(dual(f)), f);
        EXPECT_EQ(dual(f).rank(), f.ground_size() - f.rank());
    }
}

TEST(Relabel, SelfDualityOfCatalanTwo) {
    EXPECT_EQ(relabel(dual(catalan_matroid(2)), reversal(4)), catalan_matroid(2));
    EXPECT_THROW(relabel(catalan_matroid(2), {1, 1, 2, 3}), DomainError);
    EXPECT_THROW(relabel(catalan_matroid(2), {1, 2, 3}), DomainError);
}

TEST(Isomorphism, Examples) {
    const BasisFamily c3 = catalan_matroid(3);
    const auto self = is_isomorphic(c3, c3);
    ASSERT_TRUE(self.has_value());
    EXPECT_EQ(relabel(c3, *self), c3);
    EXPECT_TRUE(is_isomorphic(uniform(1, 2), family(2, {{1}, {2}})).has_value());
    EXPECT_FALSE(is_isomorphic(uniform(1, 3), uniform(2, 3)).has_value());
}

TEST(Isomorphism, FindsScrambledCopies) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const BasisFamily f = random_matroid(rng);
        std::vector<int> sigma(static_cast<std::size_t>(f.ground_size()));
        std::iota(sigma.begin(), sigma.end(), 1);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const BasisFamily g = relabel(f, sigma);
        const auto w = is_isomorphic(f, g);
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(relabel(f, *w), g);
    }
    EXPECT_FALSE(is_isomorphic(catalan_matroid(3), uniform(3, 6)).has_value());
    EXPECT_FALSE(is_isomorphic(family(4, {{1, 2}, {1, 3}, {2, 3}}), family(4, {{1, 2}, {1, 3}, {1, 4}})).has_value());
}

TEST(Minors, Examples) {
    const BasisFamily c2 = catalan_matroid(2);
    EXPECT_EQ(contract_element(c2, 1), family(3, {{1}, {2}}));
    EXPECT_EQ(delete_element(c2, 4), family(3, {{1, 2}, {1, 3}}));
    // 1 is a coloop of C_2
    EXPECT_EQ(delete_element(c2, 1), family(3, {{1}, {2}}));
    // 4 is a loop
    EXPECT_EQ(contract_element(c2, 4), family(3, {{1, 2}, {1, 3}}));
    EXPECT_THROW(delete_element(c2, 5), DomainError);
}

TEST(Minors, DeleteAndContractMatchDefinitions) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const BasisFamily f = random_matroid(rng);
        for (int e = 1; e <= f.ground_size(); ++e) {
            // remove e and close the gap
            auto squeeze = [e](Subset s) {
                const Subset low = s & full_set(e - 1);
                return low | ((s >> e) << (e - 1));
            };
            std::vector<Subset> with, without;
            for (Subset b : f.bases()) (contains(b, e) ? with : without).push_back(b);
            std::vector<Subset> del, con;
            for (Subset b : (without.empty() ? with : without)) del.push_back(squeeze(b & ~element_bit(e)));
            for (Subset b : (with.empty() ? without : with)) con.push_back(squeeze(b & ~element_bit(e)));
            EXPECT_EQ(delete_element(f, e), BasisFamily(f.ground_size() - 1, del));
            EXPECT_EQ(contract_element(f, e), BasisFamily(f.ground_size() - 1, con));
        }
    }
}

TEST(Minors, ContractionAndDeletionCommute) {
    const BasisFamily c4 = catalan_matroid(4);
    const BasisFamily a = minor(c4, make_subset({1, 3}), make_subset({7, 8}));
    const BasisFamily b = delete_element(delete_element(contract_element(contract_element(c4, 3), 1), 6), 5);
    EXPECT_EQ(a, b);
    EXPECT_THROW(minor(c4, make_subset({1}), make_subset({1})), DomainError);
}

TEST(Uniform, Examples) {
    EXPECT_EQ(uniform(2, 3).bases(), sets({{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(uniform(0, 4).bases(), std::vector<Subset>{0});
    EXPECT_THROW(uniform(3, 2), DomainError);
}

TEST(UniformMinor, Examples) {
    const auto w4 = has_uniform_minor(catalan_matroid(4), 2, 4);
    ASSERT_TRUE(w4.has_value());
    EXPECT_TRUE(is_isomorphic(minor(catalan_matroid(4), w4->contract, w4->del), uniform(2, 4)).has_value());
    EXPECT_TRUE(has_uniform_minor(catalan_matroid(3), 2, 3).has_value());
    EXPECT_FALSE(has_uniform_minor(uniform(1, 2), 2, 2).has_value());
}

TEST(UniformMinor, AgreesWithExhaustiveMinorSearch) {
    // every (contract, delete) pair with |rest| = l, compared by isomorphism
    for (int n = 2; n <= 4; ++n) {
        const BasisFamily f = catalan_matroid(n);
        for (int l = 2; l <= n + 1; ++l) {
            const BasisFamily target = uniform(2, l);
            bool brute = false;
            for (Subset keep = 0; keep <= f.ground() && !brute; ++keep) {
                if (cardinality(keep) != l) continue;
                const Subset rest = f.ground() & ~keep;
                for (Subset c = rest;; c = (c - 1) & rest) {
                    const BasisFamily g = minor(f, c, rest & ~c);
                    if (g.rank() == 2 && is_isomorphic(g, target)) {
                        brute = true;
                        break;
                    }
                    if (c == 0) break;
                }
            }
            const auto w = has_uniform_minor(f, 2, l);
            EXPECT_EQ(w.has_value(), brute) << "n=" << n << " l=" << l;
            if (w) {
                EXPECT_TRUE(is_isomorphic(minor(f, w->contract, w->del), target).has_value());
            }
        }
    }
}

TEST(UniformMinor, Bound) { EXPECT_THROW(has_uniform_minor(uniform(2, kMaxMinorGround + 1), 2, 3), ResourceError); }
