#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "catmat/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "catmat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = catmat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CATMAT_TEST_DATA) + "/" + name; }

void expect_output(const std::vector<std::string>& args, const std::string& expected) {
    const Outcome o = run(args);
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out, expected);
}

}  // namespace

TEST(Cli, DocumentedExamples) {
    expect_output({"catalan", "tutte", "--n", "2", "--method", "direct"}, "q^2*t + q*t^2\n");
    expect_output({"catalan", "bases", "--n", "2", "--format", "json"}, "[[1,2],[1,3]]\n");
    expect_output({"shifted", "bases", "--s", "2,3"}, "[[1,2],[1,3],[2,3]]\n");
}

TEST(Cli, FormatFlagMayPrecedeTheSubcommand) {
    expect_output({"--format", "json", "catalan", "bases", "--n", "2"}, "[[1,2],[1,3]]\n");
}

TEST(Cli, CatalanSubcommands) {
    expect_output({"catalan", "rank", "--n", "3", "--set", "2,4,6"}, "2\n");
    expect_output({"catalan", "rank", "--n", "3", "--set", "2,4,6", "--format", "json"},
                  "{\"n\":3,\"rank\":2,\"set\":[2,4,6]}\n");
    expect_output({"catalan", "rank", "--n", "2"}, "0\n");
    expect_output({"catalan", "flats", "--n", "2"}, "[[1,2,3,4],[1,4],[2,3,4],[4]]\n");
    expect_output({"catalan", "circuits", "--n", "2"}, "[[2,3],[4]]\n");
    expect_output({"catalan", "bonds", "--n", "2"}, "[[1],[2,3]]\n");
    expect_output({"catalan", "stats", "--n", "3"}, "k a(P) b(P) k/(2n-k)*binom(2n-k,n)\n1 2 2 2\n2 2 2 2\n3 1 1 1\n");
    expect_output({"catalan", "stats", "--n", "3", "--format", "json"},
                  "{\"a\":[2,2,1],\"b\":[2,2,1],\"closed_form\":[2,2,1],\"n\":3}\n");
}

TEST(Cli, TutteMethodsAgree) {
    const std::string c3 = "q^3*t + q^2*t + q^2*t^2 + q*t^2 + q*t^3\n";
    for (const char* method : {"direct", "activities", "subsets", "series"})
        expect_output({"catalan", "tutte", "--n", "3", "--method", method}, c3);
    expect_output({"catalan", "tutte", "--n", "1", "--format", "json"}, "[{\"c\":1,\"q\":1,\"t\":1}]\n");
}

TEST(Cli, Shifted) {
    expect_output({"shifted", "recover", "--bases-file", data("sm_2_5_6.json")}, "[2,5,6]\n");
    expect_output({"shifted", "recover", "--bases-file", data("two_bases.json")},
                  "not a shifted matroid: candidate s = [3,4], {1,3} is a basis of SM(s) but not of the input\n");
    expect_output({"shifted", "recover", "--bases-file", data("two_bases.json"), "--format", "json"},
                  "{\"candidate\":[3,4],\"discrepancy\":[1,3],\"discrepancy_in\":\"reconstruction\",\"shifted\":false}\n");
    expect_output({"shifted", "check-axioms", "--s", "1,3,5"}, "ok\n");
}

TEST(Cli, Represent) {
    expect_output({"represent", "--s", "1,3", "--emit-matrix", "--verify"},
                  "SM[1,3]: 2x3 generic staircase matrix\n[[\"1\",\"0\",\"0\"],[\"3\",\"9\",\"81\"]]\n"
                  "verified: vector matroid equals SM(s)\n");
    expect_output({"represent", "--s", "1,3", "--verify", "--format", "json"},
                  "{\"cols\":3,\"rows\":2,\"s\":[1,3],\"verified\":true}\n");
}

TEST(Cli, MinorAndTableaux) {
    const Outcome m = run({"minor", "--n", "4", "--target", "2,4", "--format", "json"});
    EXPECT_EQ(m.code, 0);
    const auto j = nlohmann::json::parse(m.out);
    EXPECT_EQ(j["minor"], "U(2,4)");
    const catmat::Subset c = catmat::io::parse_subset(j["contract"], 8);
    const catmat::Subset d = catmat::io::parse_subset(j["delete"], 8);
    EXPECT_TRUE(catmat::is_isomorphic(catmat::minor(catmat::catalan_matroid(4), c, d), catmat::uniform(2, 4)));
    expect_output({"minor", "--n", "3", "--target", "2,4"}, "no U(2,4) minor in C_3\n");

    expect_output({"syt", "--shape", "2,1"}, "1 2\n3\n\n1 3\n2\n");
    expect_output({"syt", "--shape", "2,2", "--format", "json"}, "[[[1,2],[3,4]],[[1,3],[2,4]]]\n");
    expect_output({"syt", "--shape", "2,2", "--first-row"}, "[[1,2],[1,3]]\n");
    expect_output({"syt", "--shape", "2,2", "--mu", "1,1"}, "[[1,2],[1,3]]\n");
    expect_output({"poset", "isets", "--file", data("diamond.json"), "--ideal", "1,2"}, "[[1,2],[1,3]]\n");
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args = {"catalan", "bases", "--n", "5"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"catalan", "bases"}).code, 2);
    EXPECT_EQ(run({"catalan", "bases", "--n", "2", "--nope"}).code, 2);
    EXPECT_EQ(run({"catalan", "bases", "--n", "2", "--format", "xml"}).code, 2);
    const Outcome o = run({"frobnicate"});
    EXPECT_NE(o.err.find("Usage"), std::string::npos);
}

TEST(Cli, DomainErrorsExitTwo) {
    EXPECT_EQ(run({"shifted", "bases", "--s", "3,1"}).code, 2);
    EXPECT_EQ(run({"catalan", "rank", "--n", "2", "--set", "7"}).code, 2);
    EXPECT_EQ(run({"catalan", "stats", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"syt", "--shape", "2,2", "--mu", "3"}).code, 2);
    EXPECT_EQ(run({"poset", "isets", "--file", data("diamond.json"), "--ideal", "4"}).code, 2);
    EXPECT_EQ(run({"shifted", "recover", "--bases-file", data("catalan_2.json")}).code, 2);
    EXPECT_EQ(run({"shifted", "recover", "--bases-file", data("broken.json")}).code, 2);
    EXPECT_EQ(run({"shifted", "recover", "--bases-file", data("missing.json")}).code, 2);
    EXPECT_EQ(run({"minor", "--n", "4", "--target", "2"}).code, 2);
}

TEST(Cli, ResourceErrorsExitThreeAndNameTheBound) {
    const Outcome flats = run({"catalan", "flats", "--n", "11"});
    EXPECT_EQ(flats.code, 3);
    EXPECT_NE(flats.err.find("--max-subsets"), std::string::npos);
    EXPECT_EQ(run({"--max-subsets", "16", "catalan", "circuits", "--n", "3"}).code, 3);
    EXPECT_EQ(run({"--max-subsets", "64", "catalan", "circuits", "--n", "3"}).code, 0);
    EXPECT_EQ(run({"catalan", "bases", "--n", "40"}).code, 3);
    EXPECT_EQ(run({"syt", "--shape", "11"}).code, 3);
    EXPECT_EQ(run({"represent", "--s", "7,8,9,10"}).code, 3);
    EXPECT_EQ(run({"minor", "--n", "7", "--target", "2,7"}).code, 3);
}

TEST(Cli, VerifyAllSmall) {
    const Outcome o = run({"verify", "all", "--max-n", "5"});
    EXPECT_EQ(o.code, 0) << o.out;
    int lines = 0;
    std::istringstream in(o.out);
    for (std::string line; std::getline(in, line); ++lines) EXPECT_EQ(line.rfind("PASS", 0), 0u) << line;
    EXPECT_EQ(lines, 12);
}
