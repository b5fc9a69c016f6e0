#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catmat/catalan.hpp"
#include "catmat/complexes.hpp"
#include "catmat/matroid.hpp"
#include "catmat/paths.hpp"
#include "catmat/representation.hpp"
#include "catmat/tutte.hpp"

namespace catmat::acceptance {

struct Options {
    /// Caps every range over the Catalan half-length n; other ranges are fixed.
    int max_n = 1000;
    std::uint64_t seed = 20021004;
};

struct Result {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

/// Collects the first few failure messages.
class Failures {
public:
    void add(const std::string& msg) {
        if (count_++ < 5) msgs_ << (count_ > 1 ? "; " : "") << msg;
    }
    bool any() const { return count_ > 0; }
    std::string summary(const std::string& ok) const {
        if (!any()) return ok;
        return std::to_string(count_) + " failure(s): " + msgs_.str();
    }

private:
    int count_ = 0;
    std::ostringstream msgs_;
};

inline ShiftVector random_shift_vector(std::mt19937_64& rng, int max_last) {
    std::uniform_int_distribution<Subset> pick(1, full_set(max_last));
    return ShiftVector(elements(pick(rng)));
}

inline Poset random_poset(std::mt19937_64& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::bernoulli_distribution edge(0.3);
    const int p = size_dist(rng);
    // relabel a random DAG so that element order is not the topological order
    std::vector<int> label(static_cast<std::size_t>(p));
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (edge(rng)) covers.emplace_back(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
    return Poset(p, std::move(covers));
}

inline Subset random_ideal(std::mt19937_64& rng, const Poset& p) {
    std::uniform_int_distribution<Subset> pick(0, full_set(p.size()));
    Subset seed = pick(rng) & pick(rng);
    Subset ideal = seed;
    for (int y : elements(seed)) ideal |= p.below(y);
    return ideal;
}

inline bool same_family(const SetFamily& a, const SetFamily& b) { return a.members() == b.members(); }

}  // namespace detail

inline Result basis_counts(const Options& opt) {
    const int top = std::min(12, opt.max_n);
    detail::Failures f;
    for (int n = 0; n <= top; ++n) {
        const BasisFamily c = catalan_matroid(n);
        if (BigInt(static_cast<unsigned long>(c.size())) != catalan_number(n))
            f.add("n=" + std::to_string(n) + " has " + std::to_string(c.size()) + " bases");
    }
    if (top >= 10 && catalan_matroid(10).size() != 16796) f.add("C_10 basis count is not 16796");
    return {1, "basis counts equal C_n for n <= " + std::to_string(top), !f.any(), f.summary("all counts exact")};
}

inline Result basis_axioms(const Options& opt) {
    const int top = std::min(6, opt.max_n);
    detail::Failures f;
    for (int n = 0; n <= top; ++n) {
        const auto r = check_basis_axioms(catalan_matroid(n));
        if (!r.ok()) f.add("C_" + std::to_string(n) + ": " + r.describe());
    }
    std::mt19937_64 rng(opt.seed + 2);
    for (int trial = 0; trial < 100; ++trial) {
        const ShiftVector s = detail::random_shift_vector(rng, 12);
        const auto r = check_basis_axioms(shifted_matroid(s));
        if (!r.ok()) f.add("SM: " + r.describe());
    }
    return {2, "basis axioms for C_n (n <= " + std::to_string(top) + ") and 100 random SM(s), s_n <= 12", !f.any(),
            f.summary("B1 and B2 hold")};
}

inline Result closed_forms(const Options& opt) {
    const int top = std::min(5, opt.max_n);
    detail::Failures f;
    long checked = 0;
    for (int n = 0; n <= top; ++n) {
        const BasisFamily c = catalan_matroid(n);
        const RankTable rank(c);
        const SetFamily fl = flats(c), ind = independents(c), sp = spanning_sets(c), ci = circuits(c), bo = bonds(c);
        if (!detail::same_family(circuits_closed_form(n), ci)) f.add("circuit enumeration differs at n=" + std::to_string(n));
        const Subset limit = Subset{1} << (2 * n);
        for (Subset a = 0; a < limit; ++a) {
            ++checked;
            const std::string at = " at n=" + std::to_string(n) + ", A=" + to_string(a);
            if (rank_closed_form(n, a) != rank(a)) f.add("rank" + at);
            if (rank_of(c, a) != rank(a)) f.add("rank oracle" + at);
            if (is_flat_closed_form(n, a) != fl.contains(a)) f.add("flat" + at);
            if (is_independent_closed_form(n, a) != ind.contains(a)) f.add("independent" + at);
            if (is_spanning_closed_form(n, a) != sp.contains(a)) f.add("spanning" + at);
            if (is_circuit_closed_form(n, a) != ci.contains(a)) f.add("circuit" + at);
            if (is_bond_closed_form(n, a) != bo.contains(a)) f.add("bond" + at);
        }
    }
    return {3, "closed forms agree with brute-force oracles on every subset, n <= " + std::to_string(top), !f.any(),
            f.summary(std::to_string(checked) + " subsets, zero discrepancies")};
}

inline Result self_duality(const Options& opt) {
    const int top = std::min(8, opt.max_n);
    detail::Failures f;
    for (int n = 1; n <= top; ++n) {
        std::vector<int> reflect;
        for (int x = 1; x <= 2 * n; ++x) reflect.push_back(2 * n + 1 - x);
        const BasisFamily c = catalan_matroid(n);
        if (!(relabel(dual(c), reflect) == c)) f.add("n=" + std::to_string(n));
    }
    return {4, "relabel(dual(C_n), x -> 2n+1-x) = C_n for n <= " + std::to_string(top), !f.any(),
            f.summary("exact basis-family equality")};
}

inline Result tutte_agreement(const Options& opt) {
    const int top_act = std::min(12, opt.max_n);
    const int top_sub = std::min(6, opt.max_n);
    detail::Failures f;
    const auto q = BivariatePolynomial::q(), t = BivariatePolynomial::t();
    const BivariatePolynomial golden2 = q * q * t + q * t * t;
    const BivariatePolynomial golden3 = q * q * q * t + q * q * t + q * q * t * t + q * t * t + q * t * t * t;
    for (int n = 0; n <= top_act; ++n) {
        const BivariatePolynomial direct = tutte_catalan_direct(n);
        const BasisFamily c = catalan_matroid(n);
        if (!(tutte_via_activities(c) == direct)) f.add("activities differ at n=" + std::to_string(n));
        if (n <= top_sub && !(tutte_via_corank_nullity(c) == direct)) f.add("corank-nullity differs at n=" + std::to_string(n));
        if (n == 2 && !(direct == golden2)) f.add("T_C2 = " + direct.to_string());
        if (n == 3 && !(direct == golden3)) f.add("T_C3 = " + direct.to_string());
    }
    return {5,
            "Tutte: direct = activities (n <= " + std::to_string(top_act) + "), direct = corank-nullity (n <= " +
                std::to_string(top_sub) + "), golden T_C2, T_C3",
            !f.any(), f.summary("exact polynomial equality")};
}

inline Result tutte_symmetry(const Options& opt) {
    const int top = std::min(12, opt.max_n);
    const int top_dual = std::min(6, opt.max_n);
    detail::Failures f;
    for (int n = 0; n <= top; ++n)
        if (!is_symmetric(tutte_catalan_direct(n))) f.add("asymmetric at n=" + std::to_string(n));
    for (int n = 0; n <= top_dual; ++n) {
        const BasisFamily c = catalan_matroid(n);
        if (!(tutte_via_activities(dual(c)) == tutte_via_activities(c).swapped()))
            f.add("T_{M*}(q,t) != T_M(t,q) at n=" + std::to_string(n));
    }
    return {6,
            "Tutte symmetry (n <= " + std::to_string(top) + ") and T_{M*}(q,t) = T_M(t,q) (n <= " +
                std::to_string(top_dual) + ")",
            !f.any(), f.summary("symmetric; duality holds")};
}

inline Result generating_function(const Options& opt) {
    const int top_series = std::min(10, opt.max_n);
    const int top_rec = std::min(12, opt.max_n);
    detail::Failures f;
    const PolynomialSeries series = catalan_tutte_series(top_series);
    for (int n = 0; n <= top_series; ++n)
        if (!(series[n] == tutte_catalan_direct(n))) f.add("coefficient of x^" + std::to_string(n));
    for (int n = 0; n <= top_rec; ++n)
        if (!recursion_check(n)) f.add("recursion fails at n=" + std::to_string(n));
    return {7,
            "generating function matches T_{C_n} for n <= " + std::to_string(top_series) + "; recursion for n <= " +
                std::to_string(top_rec),
            !f.any(), f.summary("coefficientwise equality")};
}

inline Result equidistribution(const Options& opt) {
    const int top = std::min(8, opt.max_n);
    detail::Failures f;
    for (int n = 1; n <= top; ++n) {
        const auto [a, b] = stat_histograms(n);
        for (int k = 1; k <= n; ++k) {
            if (BigInt(a[static_cast<std::size_t>(k)]) != a_stat_count(n, k))
                f.add("a-histogram n=" + std::to_string(n) + " k=" + std::to_string(k));
            if (BigInt(b[static_cast<std::size_t>(k)]) != b_stat_count(n, k))
                f.add("b-histogram n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return {8, "a(P) and b(P) histograms equal k/(2n-k) binom(2n-k,n) for n <= " + std::to_string(top), !f.any(),
            f.summary("all histogram entries exact")};
}

inline Result shiftedness(const Options& opt) {
    detail::Failures f;
    std::mt19937_64 rng(opt.seed + 9);
    for (int trial = 0; trial < 50; ++trial) {
        const ShiftVector s = detail::random_shift_vector(rng, 10);
        const auto r = is_shifted_family(independence_complex(shifted_matroid(s)));
        if (!r.ok) f.add("independence complex of SM not shifted at F=" + to_string(r.face));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const ShiftVector s = detail::random_shift_vector(rng, 12);
        const auto rec = recover_shift_vector(shifted_matroid(s));
        if (!rec.shift || !(*rec.shift == s)) f.add("shift vector not recovered");
    }
    int pairs = 0;
    for (int total = 1; total <= 8; ++total) {
        for (const Partition& lambda : partitions_of(total)) {
            for (const Partition& mu : subpartitions(lambda)) {
                ++pairs;
                if (!is_shifted_family(mu_sets(lambda, mu)).ok) f.add("mu-sets not shifted");
            }
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Poset p = detail::random_poset(rng, 7);
        const Subset ideal = detail::random_ideal(rng, p);
        if (!is_shifted_family(iset_family(p, ideal)).ok) f.add("I-sets not shifted");
    }
    return {9, "shifted complexes, shift-vector round-trip, mu-sets (|λ| <= 8) and I-sets (|P| <= 7)", !f.any(),
            f.summary("50 + 50 matroids, " + std::to_string(pairs) + " (λ,μ) pairs, 100 posets")};
}

inline Result young_tableaux(const Options&) {
    detail::Failures f;
    int shapes = 0;
    for (int total = 1; total <= 8; ++total) {
        for (const Partition& lambda : partitions_of(total)) {
            ++shapes;
            if (!same_members(first_row_sets(lambda), shifted_matroid(first_row_shift_vector(lambda))))
                f.add("first-row sets differ for a shape of size " + std::to_string(total));
        }
    }
    const auto counter = find_non_matroid_mu_family(8);
    std::string found = "no non-matroid mu-family";
    if (!counter) {
        f.add(found);
    } else {
        auto show = [](const Partition& p) {
            std::string out;
            for (int part : p.parts()) out += (out.empty() ? "" : ",") + std::to_string(part);
            return "(" + out + ")";
        };
        found = "non-matroid mu-family at λ=" + show(counter->first) + ", μ=" + show(counter->second);
    }
    return {10, "first-row sets = bases of SM(first_row_shift_vector) for |λ| <= 8; non-matroid mu-family exists",
            !f.any(), f.summary(std::to_string(shapes) + " shapes; " + found)};
}

inline Result representation(const Options&) {
    detail::Failures f;
    int vectors = 0;
    long subsets = 0;
    for (Subset chosen = 1; chosen <= full_set(8); ++chosen) {
        if (cardinality(chosen) > 4) continue;
        const ShiftVector s(elements(chosen));
        ++vectors;
        const GenericMatrix m = build_representation(s);
        const auto minors = maximal_minors(m.entries());
        std::vector<Subset> bases;
        for (const auto& [cols, det] : minors) {
            ++subsets;
            const bool det_nonzero = det != 0;
            if (det_nonzero) bases.push_back(cols);
            const bool rook = rook_basis_test(s, cols);
            if (rook != has_rook_placement(s, cols) || rook != det_nonzero)
                f.add("rook/matching/determinant disagree at s=" + to_string(chosen) + ", B=" + to_string(cols));
        }
        if (!(BasisFamily(s.last(), bases) == shifted_matroid(s))) f.add("vector matroid differs at s=" + to_string(chosen));
    }
    for (int n = 1; n <= 4; ++n) {
        const auto [s, loop] = catalan_as_shifted(n);
        const IntegerMatrix a = build_representation(s).entries().with_zero_columns(loop - s.last());
        if (!(vector_matroid(a) == catalan_matroid(n))) f.add("Catalan representation differs at n=" + std::to_string(n));
    }
    return {11, "vector_matroid(build_representation(s)) = SM(s) for n <= 4, s_n <= 8, incl. C_n with loop column",
            !f.any(), f.summary(std::to_string(vectors) + " vectors, " + std::to_string(subsets) + " minors")};
}

inline Result non_representability(const Options& opt) {
    detail::Failures f;
    std::string witnesses;
    for (int n = 4; n <= std::min(6, opt.max_n); ++n) {
        const BasisFamily c = catalan_matroid(n);
        const auto w = has_uniform_minor(c, 2, n);
        if (!w) {
            f.add("no U(2," + std::to_string(n) + ") minor in C_" + std::to_string(n));
            continue;
        }
        if (!is_isomorphic(minor(c, w->contract, w->del), uniform(2, n)))
            f.add("witness for n=" + std::to_string(n) + " does not yield U(2,n)");
        witnesses += " C_" + std::to_string(n) + "/" + to_string(w->contract);
    }
    int flats_checked = 0;
    for (int n = 3; n <= std::min(5, opt.max_n); ++n) {
        const BasisFamily c = catalan_matroid(n);
        const RankTable rank(c);
        const SetFamily fl = flats(c);
        std::vector<Subset> hyperplanes;
        for (Subset a : fl.members())
            if (rank(a) == n - 1) hyperplanes.push_back(a);
        for (Subset a : fl.members()) {
            if (rank(a) != n - 2) continue;
            ++flats_checked;
            int brute = 0;
            for (Subset h : hyperplanes) brute += (h & a) == a;
            if (hyperplane_count_over_flat(n, a) != brute) f.add("hyperplane count at A=" + to_string(a));
        }
    }
    for (int n = 3; n <= std::min(6, opt.max_n); ++n) {
        const Subset top = full_set(n - 2) | element_bit(2 * n);
        const BasisFamily c = catalan_matroid(n);
        const SetFamily fl = flats(c);
        int brute = 0;
        for (Subset h : fl.members())
            if ((h & top) == top && rank_of(c, h) == n - 1) ++brute;
        if (brute != n || hyperplane_count_over_flat(n, top) != n)
            f.add("flat {1..n-2,2n} lies in " + std::to_string(brute) + " hyperplanes at n=" + std::to_string(n));
    }
    return {12, "U(2,n) minors of C_n with witness; hyperplane counts over rank-(n-2) flats", !f.any(),
            f.summary("witnesses" + witnesses + "; " + std::to_string(flats_checked) + " flats checked")};
}

inline std::vector<std::function<Result(const Options&)>> all_criteria() {
    return {basis_counts, basis_axioms,     closed_forms,   self_duality,   tutte_agreement, tutte_symmetry,
            generating_function, equidistribution, shiftedness, young_tableaux, representation, non_representability};
}

inline std::vector<Result> run_all(const Options& opt, const std::function<void(const Result&)>& on_result = {}) {
    std::vector<Result> out;
    int id = 0;
    for (const auto& criterion : all_criteria()) {
        ++id;
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criterion(opt);
        } catch (const std::exception& e) {
            r.id = id;
            r.title = "criterion " + std::to_string(id);
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string format_line(const Result& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " -- " << r.detail << " ("
       << static_cast<long>(r.seconds * 1000) << " ms)";
    return os.str();
}

}  // namespace catmat::acceptance
