#include "cli.hpp"
#include "recipes.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome ec_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ec::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("ec_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST(Cli, DocumentedExamples) {
    Outcome fib = ec_run({"cfinite", "nth", "--rec", "fib", "--n", "11"});
    EXPECT_EQ(fib.code, 0);
    EXPECT_EQ(fib.out, "144\n");

    Outcome shi = ec_run({"reproduce", "shi-regions", "--n", "3"});
    EXPECT_EQ(shi.code, 0);
    EXPECT_NE(shi.out.find("PASS shi-regions"), std::string::npos);
    EXPECT_NE(shi.out.find("expected 16, got 16"), std::string::npos);

    Outcome aztec = ec_run({"count", "aztec", "--n", "2"});
    EXPECT_EQ(aztec.code, 0);
    EXPECT_EQ(aztec.out, "8\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(ec_run({}).code, 2);
    EXPECT_EQ(ec_run({"poset"}).code, 2);
    EXPECT_EQ(ec_run({"poset", "frobnicate", "--poset", "chain:2"}).code, 2);
    EXPECT_EQ(ec_run({"poset", "mobius", "--poset", "bogus:1"}).code, 2);
    EXPECT_EQ(ec_run({"series", "inverse", "--coeffs", "1,x"}).code, 2);
    EXPECT_EQ(ec_run({"graph", "trees", "--file", "/nonexistent/graph.txt"}).code, 2);
    // Computation errors.
    Outcome inv = ec_run({"series", "inverse", "--coeffs", "0,1"});
    EXPECT_EQ(inv.code, 1);
    EXPECT_NE(inv.err.find("NotInvertible"), std::string::npos);
    Outcome unbounded = ec_run({"--format", "json", "ehrhart", "poly", "--file", temp_file("ray.json", R"({"A": [[-1]], "b": [0]})")});
    EXPECT_EQ(unbounded.code, 1);
    auto diag = nlohmann::json::parse(unbounded.err);
    EXPECT_EQ(diag["error"]["kind"], "Unbounded");
    EXPECT_EQ(ec_run({"--help"}).code, 0);
}

TEST(Cli, JsonBigIntegersAreStrings) {
    Outcome o = ec_run({"--format", "json", "cfinite", "nth", "--rec", "fib", "--n", "200"});
    ASSERT_EQ(o.code, 0);
    auto j = json_of(o);
    ASSERT_TRUE(j["value"].is_string());
    EXPECT_EQ(j["value"], "453973694165307953197296969697410619233826");
}

TEST(Cli, SeriesFileRoundTrip) {
    Outcome first = ec_run({"--format", "json", "--order", "6", "series", "inverse", "--coeffs", "1,-1,-1"});
    ASSERT_EQ(first.code, 0);
    auto j = json_of(first);
    EXPECT_EQ(j["coeffs"], nlohmann::json({"1", "1", "2", "3", "5", "8", "13"}));
    // Feeding the output back and inverting again returns the input.
    std::string path = temp_file("series.json", first.out);
    auto back = json_of(ec_run({"--format", "json", "series", "inverse", "--file", path}));
    EXPECT_EQ(back["coeffs"], nlohmann::json({"1", "-1", "-1", "0", "0", "0", "0"}));
    EXPECT_EQ(back["order"], 6);
}

TEST(Cli, Deterministic) {
    std::vector<std::vector<std::string>> runs{{"matroid", "eval", "--matroid", "graphic:complete:4"},
                                               {"--format", "json", "arr", "charpoly", "--arr", "shi:3"},
                                               {"reproduce", "pick", "--seed", "7"},
                                               {"ehrhart", "reciprocity", "--polytope", "simplex:2"}};
    for (const auto& args : runs) {
        Outcome a = ec_run(args), b = ec_run(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, Modules) {
    EXPECT_EQ(ec_run({"graph", "trees", "--graph", "complete:5"}).out, "125\n");
    EXPECT_EQ(ec_run({"graph", "euler", "--graph", "debruijn:2,4"}).out, "16\n");
    EXPECT_EQ(ec_run({"graph", "walks", "--graph", "complete:3", "--from", "0", "--to", "0", "--length", "3"}).code, 0);
    EXPECT_EQ(ec_run({"count", "matchings", "--rect", "2,3"}).out, "3\n");
    EXPECT_EQ(ec_run({"count", "matchings", "--file", temp_file("region.txt", "##\n##\n")}).out, "2\n");
    EXPECT_EQ(ec_run({"count", "routings", "--n", "2"}).out, "20\n");
    EXPECT_EQ(ec_run({"count", "hankel", "--family", "schroder", "--n", "3", "--shifted"}).out, "64\n");
    auto dodgson = json_of(ec_run({"--format", "json", "count", "dodgson", "--matrix", "2,1;1,2"}));
    EXPECT_EQ(dodgson["determinant"], "3");
    EXPECT_EQ(ec_run({"poset", "mobius", "--poset", "boolean:3"}).out.find("mobius: -1") != std::string::npos, true);
    EXPECT_EQ(ec_run({"poset", "linext", "--poset", "grid:2,4"}).out, "14\n");
    EXPECT_EQ(ec_run({"poset", "cdindex", "--poset", "prism:6"}).out, "c^3+6cd+10dc\n");
    EXPECT_EQ(json_of(ec_run({"--format", "json", "arr", "regions", "--arr", "shi:3"}))["regions"], "16");
    EXPECT_EQ(ec_run({"matroid", "tutte", "--matroid", "uniform:2,4", "--backend", "activities"}).out, "x^2+2x+2y+y^2\n");
    EXPECT_EQ(ec_run({"ehrhart", "count", "--polytope", "cube:2", "--n", "3"}).out, "16\n");
    EXPECT_EQ(ec_run({"ehrhart", "hstar", "--polytope", "cross:2"}).out, "1, 2, 1\n");
    auto bridge = json_of(ec_run({"--format", "json", "ehrhart", "bridge", "--poset", "chain:2"}));
    EXPECT_EQ(bridge["ehrhart_match"], true);
}

TEST(Cli, InputFiles) {
    std::string arr = temp_file("arr.txt", "2\n1 0 0\n0 1 0\n1 1 1\n");
    EXPECT_EQ(json_of(ec_run({"--format", "json", "arr", "regions", "--file", arr}))["regions"], "7");

    std::string bases = temp_file("bases.json", R"({"backend": "bases", "ground": ["a","b","c"], "bases": [["a","b"],["a","c"],["b","c"]]})");
    EXPECT_EQ(ec_run({"matroid", "tutte", "--file", bases}).out, "x^2+x+y\n");
    std::string matrix = temp_file("matrix.json", R"({"backend": "matrix", "field": 2, "rows": [[1,0,1],[0,1,1]]})");
    EXPECT_EQ(ec_run({"matroid", "tutte", "--file", matrix}).out, "x^2+x+y\n");
    std::string graph = temp_file("graph.json", R"({"backend": "graph", "edges": [["1","2"],["2","3"],["1","3"]]})");
    EXPECT_EQ(ec_run({"matroid", "tutte", "--file", graph}).out, "x^2+x+y\n");
    std::string uniform = temp_file("uniform.json", R"({"backend": "uniform", "k": 2, "n": 3})");
    EXPECT_EQ(ec_run({"matroid", "tutte", "--file", uniform}).out, "x^2+x+y\n");
    std::string bad = temp_file("bad.json", R"({"backend": "bases", "ground": ["a","b"], "bases": [["a"],["a","b"]]})");
    EXPECT_EQ(ec_run({"matroid", "tutte", "--file", bad}).code, 1);

    std::string simplex = temp_file("simplex.json", R"({"A": [[-1,0,0],[0,-1,0],[0,0,-1]], "b": [0,0,0], "C": [[1,1,1]], "e": ["1"]})");
    EXPECT_EQ(ec_run({"ehrhart", "count", "--file", simplex, "--n", "2"}).out, "6\n");

    std::string graph_txt = temp_file("graph.txt", "undirected\na b\nb c\nc a\n");
    EXPECT_EQ(ec_run({"graph", "trees", "--file", graph_txt}).out, "3\n");
    std::string poset_txt = temp_file("poset.txt", "a < b\na < c\nb < d\nc < d\n");
    EXPECT_NE(ec_run({"poset", "mobius", "--file", poset_txt}).out.find("mobius: 1"), std::string::npos);
}

TEST(Cli, ReproduceAll) {
    Outcome list = ec_run({"reproduce", "--list"});
    EXPECT_EQ(list.code, 0);
    Outcome all = ec_run({"--format", "json", "reproduce", "--all"});
    EXPECT_EQ(all.code, 0) << all.out;
    auto j = json_of(all);
    EXPECT_EQ(j.size(), ec::cli::recipes().size());
    for (const auto& r : j) EXPECT_TRUE(r["pass"].get<bool>()) << r["recipe"];
    EXPECT_EQ(ec_run({"reproduce", "no-such-recipe"}).code, 2);
}
