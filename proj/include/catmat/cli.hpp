#pragma once

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catmat/acceptance.hpp"
#include "catmat/catalan.hpp"
#include "catmat/complexes.hpp"
#include "catmat/io.hpp"
#include "catmat/matroid.hpp"
#include "catmat/paths.hpp"
#include "catmat/representation.hpp"
#include "catmat/tutte.hpp"

namespace catmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResource = 3;

namespace detail {

using json = nlohmann::json;

struct Context {
    std::ostream& out;
    std::string format = "text";
    long max_subsets = 1L << 20;
    bool json() const { return format == "json"; }
};

inline void print_family(Context& ctx, const std::vector<Subset>& members) { ctx.out << io::members_json(members).dump() << "\n"; }

inline SetFamily closed_form_sweep(const Context& ctx, int n, bool (*pred)(int, Subset)) {
    require_bound(n >= 0 && 2 * n < 63 && (1L << (2 * n)) <= ctx.max_subsets,
                  "subset sweep over 2^" + std::to_string(2 * n) + " sets exceeds --max-subsets " +
                      std::to_string(ctx.max_subsets));
    std::vector<Subset> out;
    for (Subset a = 0; a < (Subset{1} << (2 * n)); ++a)
        if (pred(n, a)) out.push_back(a);
    return SetFamily(2 * n, std::move(out));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
}

inline int catalan_tutte(Context& ctx, int n, const std::string& method) {
    BivariatePolynomial p;
    if (method == "direct") {
        p = tutte_catalan_direct(n);
    } else if (method == "activities") {
        p = tutte_via_activities(catalan_matroid(n));
    } else if (method == "subsets") {
        p = tutte_via_corank_nullity(catalan_matroid(n));
    } else {
        p = catalan_tutte_series(n)[n];
    }
    if (ctx.json())
        ctx.out << io::to_json(p).dump() << "\n";
    else
        ctx.out << p.to_string() << "\n";
    return kExitOk;
}

inline int catalan_stats(Context& ctx, int n) {
    if (n < 1) throw DomainError("stats need n >= 1");
    const auto [a, b] = stat_histograms(n);
    if (ctx.json()) {
        json ja = json::array(), jb = json::array(), jc = json::array();
        for (int k = 1; k <= n; ++k) {
            ja.push_back(a[static_cast<std::size_t>(k)]);
            jb.push_back(b[static_cast<std::size_t>(k)]);
            jc.push_back(io::coefficient_json(a_stat_count(n, k)));
        }
        ctx.out << json{{"n", n}, {"a", ja}, {"b", jb}, {"closed_form", jc}}.dump() << "\n";
        return kExitOk;
    }
    ctx.out << "k a(P) b(P) k/(2n-k)*binom(2n-k,n)\n";
    for (int k = 1; k <= n; ++k)
        ctx.out << k << " " << a[static_cast<std::size_t>(k)] << " " << b[static_cast<std::size_t>(k)] << " "
                << a_stat_count(n, k).get_str() << "\n";
    return kExitOk;
}

inline int shifted_recover(Context& ctx, const std::string& path) {
    const BasisFamily f = io::basis_family_from_json(read_json_file(path));
    const ShiftRecovery r = recover_shift_vector(f);
    if (ctx.json()) {
        json j{{"shifted", r.shift.has_value()}, {"candidate", r.candidate}};
        if (!r.shift) {
            j["discrepancy"] = io::subset_json(r.discrepancy);
            j["discrepancy_in"] = r.discrepancy_is_extra ? "reconstruction" : "input";
        }
        ctx.out << j.dump() << "\n";
        return kExitOk;
    }
    if (r.shift) {
        ctx.out << io::to_json(*r.shift).dump() << "\n";
    } else {
        ctx.out << "not a shifted matroid: candidate s = " << io::to_json(ShiftVector(r.candidate)).dump() << ", "
                << to_string(r.discrepancy)
                << (r.discrepancy_is_extra ? " is a basis of SM(s) but not of the input" : " is in the input but not a basis of SM(s)")
                << "\n";
    }
    return kExitOk;
}

inline int represent(Context& ctx, const std::vector<int>& s_values, bool emit, bool verify) {
    const ShiftVector s(s_values);
    const GenericMatrix m = build_representation(s);
    bool ok = true;
    json j{{"s", s.values()}, {"rows", m.rows()}, {"cols", m.cols()}};
    if (emit) j["matrix"] = io::to_json(m.entries());
    if (verify) {
        ok = vector_matroid(m) == shifted_matroid(s);
        j["verified"] = ok;
    }
    if (ctx.json()) {
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << "SM" << io::to_json(s).dump() << ": " << m.rows() << "x" << m.cols() << " generic staircase matrix\n";
        if (emit) ctx.out << j["matrix"].dump() << "\n";
        if (verify) ctx.out << (ok ? "verified: vector matroid equals SM(s)" : "MISMATCH: vector matroid differs from SM(s)") << "\n";
    }
    return ok ? kExitOk : kExitFailed;
}

inline int minor_search(Context& ctx, int n, const std::vector<int>& target) {
    if (target.size() != 2) throw DomainError("--target expects k,l");
    const int k = target[0], l = target[1];
    const auto w = has_uniform_minor(catalan_matroid(n), k, l);
    if (ctx.json()) {
        ctx.out << (w ? io::witness_json(*w, k, l) : json{{"minor", nullptr}}).dump() << "\n";
    } else if (w) {
        ctx.out << "U(" << k << "," << l << ") minor of C_" << n << ": contract " << to_string(w->contract) << " delete "
                << to_string(w->del) << "\n";
    } else {
        ctx.out << "no U(" << k << "," << l << ") minor in C_" << n << "\n";
    }
    return kExitOk;
}

inline int syt(Context& ctx, const std::vector<int>& shape, bool first_row, const std::vector<int>& mu) {
    const Partition lambda(shape);
    if (first_row) {
        print_family(ctx, first_row_sets(lambda).members());
        return kExitOk;
    }
    if (!mu.empty()) {
        print_family(ctx, mu_sets(lambda, Partition(mu)).members());
        return kExitOk;
    }
    const auto tableaux = enumerate_syt(lambda);
    if (ctx.json()) {
        json arr = json::array();
        for (const auto& t : tableaux) arr.push_back(io::to_json(t));
        ctx.out << arr.dump() << "\n";
        return kExitOk;
    }
    bool first = true;
    for (const auto& t : tableaux) {
        if (!first) ctx.out << "\n";
        first = false;
        for (const auto& row : t.rows()) {
            for (std::size_t c = 0; c < row.size(); ++c) ctx.out << (c ? " " : "") << row[c];
            ctx.out << "\n";
        }
    }
    return kExitOk;
}

inline int verify_all(Context& ctx, int max_n) {
    acceptance::Options opt;
    opt.max_n = max_n;
    bool all = true;
    json arr = json::array();
    acceptance::run_all(opt, [&](const acceptance::Result& r) {
        all = all && r.passed;
        if (ctx.json())
            arr.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        else
            ctx.out << acceptance::format_line(r) << "\n" << std::flush;
    });
    if (ctx.json()) ctx.out << arr.dump() << "\n";
    return all ? kExitOk : kExitFailed;
}

}  // namespace detail

/// Parses argv and dispatches one subcommand. Exit codes: 0 ok, 1 check failed,
/// 2 usage or domain error, 3 resource bound exceeded.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    detail::Context ctx{out};
    CLI::App app{"Catalan and shifted matroids: bases, closed forms, Tutte polynomials, representations"};
    app.name("catmat");
    app.require_subcommand(1);
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-subsets", ctx.max_subsets, "Upper bound on 2^m subset sweeps")->check(CLI::PositiveNumber);
    app.fallthrough();

    int n = 0;
    std::vector<int> set_values, s_values, target, shape, mu, ideal;
    std::string method = "direct", path;
    bool emit = false, verify = false, first_row = false;
    int max_n = 1000;
    std::function<int()> action;

    auto* catalan = app.add_subcommand("catalan", "Catalan matroid C_n");
    catalan->require_subcommand(1);
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Half-length n")->required()->check(CLI::NonNegativeNumber); };

    auto* c_bases = catalan->add_subcommand("bases", "Up-step sets of Dyck paths");
    add_n(c_bases);
    c_bases->callback([&] { action = [&] { detail::print_family(ctx, catalan_matroid(n).bases()); return kExitOk; }; });

    auto* c_rank = catalan->add_subcommand("rank", "Rank of a subset of [2n]");
    add_n(c_rank);
    c_rank->add_option("--set", set_values, "Comma-separated elements")->delimiter(',');
    c_rank->callback([&] {
        action = [&] {
            if (2 * n > kMaxGround) throw DomainError("n too large");
            const Subset a = make_subset(set_values);
            if ((a & ~full_set(2 * n)) != 0) throw DomainError("set is not contained in [2n]");
            const int r = rank_closed_form(n, a);
            if (ctx.json())
                ctx.out << nlohmann::json{{"n", n}, {"set", io::subset_json(a)}, {"rank", r}}.dump() << "\n";
            else
                ctx.out << r << "\n";
            return kExitOk;
        };
    });

    struct SweepCmd {
        const char* name;
        const char* help;
        bool (*pred)(int, Subset);
    };
    for (const SweepCmd& cmd : {SweepCmd{"flats", "Flats via the closed form", is_flat_closed_form},
                                SweepCmd{"circuits", "Circuits via the closed form", is_circuit_closed_form},
                                SweepCmd{"bonds", "Bonds via the closed form", is_bond_closed_form}}) {
        auto* sub = catalan->add_subcommand(cmd.name, cmd.help);
        add_n(sub);
        auto pred = cmd.pred;
        sub->callback([&, pred] {
            action = [&, pred] {
                detail::print_family(ctx, detail::closed_form_sweep(ctx, n, pred).members());
                return kExitOk;
            };
        });
    }

    auto* c_tutte = catalan->add_subcommand("tutte", "Tutte polynomial of C_n");
    add_n(c_tutte);
    c_tutte->add_option("--method", method, "direct|activities|subsets|series")
        ->check(CLI::IsMember({"direct", "activities", "subsets", "series"}));
    c_tutte->callback([&] { action = [&] { return detail::catalan_tutte(ctx, n, method); }; });

    auto* c_stats = catalan->add_subcommand("stats", "a(P)/b(P) histograms against the closed form");
    add_n(c_stats);
    c_stats->callback([&] { action = [&] { return detail::catalan_stats(ctx, n); }; });

    auto* shifted = app.add_subcommand("shifted", "Shifted matroids SM(s)");
    shifted->require_subcommand(1);
    auto* s_bases = shifted->add_subcommand("bases", "Bases of SM(s)");
    s_bases->add_option("--s", s_values, "Shift vector")->required()->delimiter(',');
    s_bases->callback([&] {
        action = [&] { detail::print_family(ctx, shifted_matroid(ShiftVector(s_values)).bases()); return kExitOk; };
    });
    auto* s_recover = shifted->add_subcommand("recover", "Recover s from a basis family file");
    s_recover->add_option("--bases-file", path, "BasisFamily JSON")->required();
    s_recover->callback([&] { action = [&] { return detail::shifted_recover(ctx, path); }; });
    auto* s_axioms = shifted->add_subcommand("check-axioms", "Check B1/B2 for SM(s)");
    s_axioms->add_option("--s", s_values, "Shift vector")->required()->delimiter(',');
    s_axioms->callback([&] {
        action = [&] {
            const AxiomCheck r = check_basis_axioms(shifted_matroid(ShiftVector(s_values)));
            if (ctx.json())
                ctx.out << nlohmann::json{{"ok", r.ok()}, {"detail", r.describe()}}.dump() << "\n";
            else
                ctx.out << r.describe() << "\n";
            return r.ok() ? kExitOk : kExitFailed;
        };
    });

    auto* rep = app.add_subcommand("represent", "Generic staircase matrix representing SM(s)");
    rep->add_option("--s", s_values, "Shift vector")->required()->delimiter(',');
    rep->add_flag("--emit-matrix", emit, "Print the matrix");
    rep->add_flag("--verify", verify, "Compare the vector matroid with SM(s)");
    rep->callback([&] { action = [&] { return detail::represent(ctx, s_values, emit, verify); }; });

    auto* mn = app.add_subcommand("minor", "Search C_n for a uniform minor");
    mn->add_option("--n", n, "Half-length n")->required()->check(CLI::NonNegativeNumber);
    mn->add_option("--target", target, "k,l for U(k,l)")->required()->delimiter(',');
    mn->callback([&] { action = [&] { return detail::minor_search(ctx, n, target); }; });

    auto* sy = app.add_subcommand("syt", "Standard Young tableaux");
    sy->add_option("--shape", shape, "Partition")->required()->delimiter(',');
    auto* fr = sy->add_flag("--first-row", first_row, "First-row sets");
    sy->add_option("--mu", mu, "Sub-shape for mu-sets")->delimiter(',')->excludes(fr);
    sy->callback([&] { action = [&] { return detail::syt(ctx, shape, first_row, mu); }; });

    auto* po = app.add_subcommand("poset", "Poset I-set families");
    po->require_subcommand(1);
    auto* isets = po->add_subcommand("isets", "I-sets of all linear extensions");
    isets->add_option("--file", path, "Poset JSON")->required();
    isets->add_option("--ideal", ideal, "Order ideal")->delimiter(',');
    isets->callback([&] {
        action = [&] {
            const Poset p = io::poset_from_json(detail::read_json_file(path));
            const Subset i = make_subset(ideal);
            detail::print_family(ctx, iset_family(p, i).members());
            return kExitOk;
        };
    });

    auto* ver = app.add_subcommand("verify", "Acceptance checks");
    ver->require_subcommand(1);
    auto* ver_all = ver->add_subcommand("all", "Run every acceptance criterion");
    ver_all->add_option("--max-n", max_n, "Cap on the Catalan half-length ranges")->check(CLI::PositiveNumber);
    ver_all->callback([&] { action = [&] { return detail::verify_all(ctx, max_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitDomain;
    }

    try {
        return action ? action() : kExitDomain;
    } catch (const ResourceError& e) {
        err << "resource bound: " << e.what() << "\n";
        return kExitResource;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const nlohmann::json::exception& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace catmat::cli
