#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catmat/catalan.hpp"
#include "catmat/complexes.hpp"
#include "catmat/matroid.hpp"
#include "catmat/paths.hpp"
#include "catmat/polynomial.hpp"
#include "catmat/representation.hpp"

namespace catmat::io {

using json = nlohmann::json;

inline json subset_json(Subset s) { return elements(s); }

inline Subset parse_subset(const json& j, int ground_size) {
    if (!j.is_array()) throw DomainError("expected an array of elements");
    Subset s = 0;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw DomainError("set elements must be integers");
        const int v = e.get<int>();
        if (v < 1 || v > ground_size) throw DomainError("element " + std::to_string(v) + " outside ground set");
        if (contains(s, v)) throw DomainError("duplicate element " + std::to_string(v));
        s |= element_bit(v);
    }
    return s;
}

/// Members in lexicographic order, as nested arrays.
inline json members_json(const std::vector<Subset>& sets) {
    std::vector<Subset> sorted = sets;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    json out = json::array();
    for (Subset s : sorted) out.push_back(subset_json(s));
    return out;
}

inline json to_json(const StepSet& p) { return json{{"n", p.half_length()}, {"ups", subset_json(p.ups())}}; }

inline StepSet step_set_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    if (n < 0 || 2 * n > kMaxGround) throw DomainError("half length out of range");
    return StepSet(n, parse_subset(j.at("ups"), 2 * n));
}

inline json to_json(const BasisFamily& f) { return json{{"m", f.ground_size()}, {"bases", members_json(f.bases())}}; }

inline BasisFamily basis_family_from_json(const json& j) {
    const int m = j.at("m").get<int>();
    if (m < 0 || m > kMaxGround) throw DomainError("ground size out of range");
    std::vector<Subset> bases;
    for (const auto& b : j.at("bases")) bases.push_back(parse_subset(b, m));
    return BasisFamily(m, std::move(bases));
}

inline json to_json(const SetFamily& f) { return json{{"m", f.ground_size()}, {"members", members_json(f.members())}}; }

inline json coefficient_json(const BigInt& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
}

/// [{"q": i, "t": j, "c": coeff}, ...] sorted by (q, t).
inline json to_json(const BivariatePolynomial& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json{{"q", e.first}, {"t", e.second}, {"c", coefficient_json(c)}});
    return out;
}

inline BivariatePolynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("polynomial must be an array of terms");
    BivariatePolynomial p;
    for (const auto& term : j) {
        const auto& c = term.at("c");
        const BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long>());
        p.add_term(term.at("q").get<int>(), term.at("t").get<int>(), coeff);
    }
    return p;
}

inline json to_json(const ShiftVector& s) { return s.values(); }
inline ShiftVector shift_vector_from_json(const json& j) { return ShiftVector(j.get<std::vector<int>>()); }

inline json to_json(const Partition& p) { return p.parts(); }
inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json to_json(const Poset& p) {
    json covers = json::array();
    for (const auto& [i, k] : p.covers()) covers.push_back({i, k});
    return json{{"size", p.size()}, {"covers", covers}};
}

inline Poset poset_from_json(const json& j) {
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw DomainError("cover must be a pair");
        covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return Poset(j.at("size").get<int>(), std::move(covers));
}

inline json to_json(const Tableau& t) { return t.rows(); }

/// Row-major array of decimal strings.
inline json to_json(const IntegerMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntegerMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("matrix must be an array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
    IntegerMatrix m(rows, cols);
    for (int i = 1; i <= rows; ++i) {
        const auto& row = j[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != cols) throw DomainError("ragged matrix");
        for (int c = 1; c <= cols; ++c) m.at(i, c) = BigInt(row[static_cast<std::size_t>(c - 1)].get<std::string>());
    }
    return m;
}

inline json witness_json(const MinorWitness& w, int k, int l) {
    return json{{"contract", subset_json(w.contract)},
                {"delete", subset_json(w.del)},
                {"minor", "U(" + std::to_string(k) + "," + std::to_string(l) + ")"}};
}

}  // namespace catmat::io
