#include <gtest/gtest.h>

#include <numeric>

#include "catmat/catalan.hpp"
#include "oracles.hpp"

using namespace catmat;

namespace {

std::vector<Subset> sets(std::initializer_list<std::initializer_list<int>> xs) {
    std::vector<Subset> out;
    for (auto s : xs) out.push_back(make_subset(s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(ShiftVector, Validation) {
    EXPECT_THROW(ShiftVector(std::vector<int>{}), DomainError);
    EXPECT_THROW(ShiftVector({2, 2}), DomainError);
    EXPECT_THROW(ShiftVector({0, 3}), DomainError);
    EXPECT_EQ(ShiftVector({1, 3, 5}).last(), 5);
}

TEST(CatalanMatroid, Examples) {
    const BasisFamily c2 = catalan_matroid(2);
    EXPECT_EQ(c2.ground_size(), 4);
    EXPECT_EQ(c2.bases(), sets({{1, 2}, {1, 3}}));
    EXPECT_EQ(catalan_matroid(1).bases(), sets({{1}}));
    EXPECT_EQ(catalan_matroid(1).ground_size(), 2);
    EXPECT_EQ(catalan_matroid(3).size(), 5u);
    EXPECT_THROW(catalan_matroid(max_half_length() + 1), ResourceError);
}

TEST(ShiftedMatroid, Examples) {
    EXPECT_EQ(shifted_matroid(ShiftVector({2, 3})), uniform(2, 3));
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> s(static_cast<std::size_t>(n));
        std::iota(s.begin(), s.end(), 1);
        EXPECT_EQ(shifted_matroid(ShiftVector(s)).bases(), std::vector<Subset>{full_set(n)});
    }
    EXPECT_EQ(shifted_matroid(ShiftVector({1, 3})).bases(), sets({{1, 2}, {1, 3}}));
    EXPECT_THROW(shifted_matroid(ShiftVector({kMaxShiftedGround + 1})), ResourceError);
}

TEST(ShiftedMatroid, MatchesComponentwiseFilter) {
    for (Subset code = 1; code <= full_set(9); code += 7) {
        const auto s = elements(code);
        EXPECT_EQ(shifted_matroid(ShiftVector(s)).bases(), oracle::shifted_bases(s));
    }
}

TEST(CatalanAsShifted, Examples) {
    const auto [s3, loop3] = catalan_as_shifted(3);
    EXPECT_EQ(s3.values(), (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(loop3, 6);
    const auto [s1, loop1] = catalan_as_shifted(1);
    EXPECT_EQ(s1.values(), std::vector<int>{1});
    EXPECT_EQ(loop1, 2);
    for (int n = 1; n <= 8; ++n) {
        const auto [s, loop] = catalan_as_shifted(n);
        EXPECT_EQ(with_trailing_loops(shifted_matroid(s), 1), catalan_matroid(n));
        EXPECT_EQ(loop, 2 * n);
    }
}

TEST(ClosedForms, RankExamples) {
    EXPECT_EQ(rank_closed_form(3, make_subset({2, 4, 6})), 2);
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(rank_closed_form(n, 0), 0);
        EXPECT_EQ(rank_closed_form(n, full_set(2 * n)), n);
    }
}

TEST(ClosedForms, FlatExamples) {
    EXPECT_TRUE(is_flat_closed_form(2, make_subset({2, 3, 4})));
    EXPECT_FALSE(is_flat_closed_form(2, make_subset({2, 4})));
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(is_flat_closed_form(n, full_set(2 * n)));
}

TEST(ClosedForms, IndependentAndSpanningExamples) {
    EXPECT_FALSE(is_independent_closed_form(2, make_subset({4})));
    EXPECT_TRUE(is_independent_closed_form(2, 0));
    EXPECT_TRUE(is_spanning_closed_form(2, make_subset({1, 2, 3})));
    EXPECT_FALSE(is_independent_closed_form(2, make_subset({1, 2, 3})));
}

TEST(ClosedForms, CircuitExamples) {
    EXPECT_EQ(circuits_closed_form(2).members(), sets({{4}, {2, 3}}));
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_circuit_closed_form(n, element_bit(2 * n)));
    EXPECT_TRUE(is_circuit_closed_form(3, make_subset({2, 3, 5})));
    EXPECT_TRUE(is_circuit_closed_form(3, make_subset({4, 5})));
    EXPECT_FALSE(is_circuit_closed_form(3, make_subset({1, 2})));
}

TEST(ClosedForms, BondExamples) {
    EXPECT_TRUE(is_bond_closed_form(2, make_subset({1})));
    EXPECT_TRUE(is_bond_closed_form(2, make_subset({2, 3})));
    EXPECT_FALSE(is_bond_closed_form(2, make_subset({1, 2})));
}

TEST(ClosedForms, AgreeWithBruteForceOnEverySubset) {
    for (int n = 1; n <= 5; ++n) {
        const auto b = oracle::dyck_paths(n);
        const int m = 2 * n;
        Subset mismatches = 0;
        for (Subset a = 0; a <= full_set(m); ++a) {
            const bool ok = rank_closed_form(n, a) == oracle::rank(b, a) &&
                            is_flat_closed_form(n, a) == oracle::flat(b, m, a) &&
                            is_independent_closed_form(n, a) == oracle::independent(b, a) &&
                            is_spanning_closed_form(n, a) == oracle::spanning(b, a) &&
                            is_circuit_closed_form(n, a) == oracle::circuit(b, a) &&
                            is_bond_closed_form(n, a) == oracle::bond(b, a);
            if (!ok) {
                ++mismatches;
                ADD_FAILURE() << "n=" << n << " a=" << to_string(a);
            }
        }
        EXPECT_EQ(mismatches, 0u);
        EXPECT_EQ(circuits_closed_form(n).members(), oracle::sweep(m, [&](Subset a) { return oracle::circuit(b, a); }));
    }
}

TEST(SelfDuality, ReversalMapsDualOntoCatalan) {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> sigma;
        for (int x = 1; x <= 2 * n; ++x) sigma.push_back(2 * n + 1 - x);
        EXPECT_EQ(relabel(dual(catalan_matroid(n)), sigma), catalan_matroid(n)) << "n=" << n;
    }
}

TEST(Hyperplanes, Examples) {
    EXPECT_EQ(hyperplane_count_over_flat(3, make_subset({1, 6})), 3);
    EXPECT_EQ(hyperplane_count_over_flat(4, make_subset({1, 2, 8})), 4);
    EXPECT_EQ(hyperplane_count_over_flat(3, make_subset({4, 5, 6})), 2);
    // rank 2 in C_3, so not a rank-(n-2) flat
    EXPECT_THROW(hyperplane_count_over_flat(3, make_subset({3, 4, 5, 6})), DomainError);
    EXPECT_THROW(hyperplane_count_over_flat(3, make_subset({1, 2})), DomainError);
}

TEST(Hyperplanes, CountMatchesFlatEnumeration) {
    for (int n = 3; n <= 5; ++n) {
        const auto b = oracle::dyck_paths(n);
        const int m = 2 * n;
        const auto flats = oracle::sweep(m, [&](Subset a) { return oracle::flat(b, m, a); });
        int checked = 0;
        for (Subset f : flats) {
            if (oracle::rank(b, f) != n - 2) continue;
            int above = 0;
            for (Subset h : flats)
                if (oracle::rank(b, h) == n - 1 && (f & ~h) == 0) ++above;
            EXPECT_EQ(hyperplane_count_over_flat(n, f), above) << "n=" << n << " flat=" << to_string(f);
            ++checked;
        }
        EXPECT_GT(checked, 0);
        Subset special = element_bit(2 * n) | full_set(n - 2);
        EXPECT_EQ(hyperplane_count_over_flat(n, special), n);
    }
}
