#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cm2/cli.hpp"
#include "cm2/json_io.hpp"

using namespace cm2;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;

    Json json() const { return parse_json(out); }
};

CliResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"cm2"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(CM2_DATA_DIR) + "/" + name; }

/// Writes content to a fresh temp file and returns its path.
class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("cm2_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                  ".json"))
                    .string();
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check-cm accepts the example ideal") {
    CliResult r = run_cli({"--format", "json", "check-cm", data_file("example_ideal.json")});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["accepted"] == true);
    CHECK(j["witness"]["edges"] == Json::parse("[[1,2],[2,3],[2,4]]"));
}

TEST_CASE("check-cm rejects a common factor with reason nonunit gcd") {
    TempFile bad(R"({"variables": ["x1","x2","x3"], "generators": ["x1*x2", "x2*x3"]})");
    CliResult r = run_cli({"--format", "json", "check-cm", bad.path()});
    CHECK(r.code == 3);
    CHECK(r.json()["reason"] == "nonunit gcd");
}

TEST_CASE("relation-trees report") {
    CliResult r = run_cli({"--format", "json", "relation-trees", data_file("example_ideal.json")});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["trees"] == Json::parse("[[[1,2],[2,3],[2,4]],[[1,2],[2,3],[3,4]]]"));
    CHECK(j["taylor_graph"]["edges"] == Json::parse("[[1,2],[2,3],[2,4],[3,4]]"));
    CHECK(j["matroid_exchange"] == true);
}

TEST_CASE("taylor-graph output feeds classify-graph") {
    CliResult r = run_cli({"--format", "json", "taylor-graph", data_file("example_ideal.json")});
    CHECK(r.code == 0);
    TempFile graph(r.out);
    CliResult c = run_cli({"--format", "json", "classify-graph", graph.path()});
    CHECK(c.code == 0);
    CHECK(c.json()["admissible"] == true);
}

TEST_CASE("check-linear is negative for the example ideal") {
    CliResult r = run_cli({"--format", "json", "check-linear", data_file("example_ideal.json")});
    CHECK(r.code == 3);
    CHECK(r.json()["linear_resolution"] == false);
}

TEST_CASE("compare-spanning reports the missing tree") {
    CliResult r =
        run_cli({"--format", "json", "compare-spanning", data_file("example_ideal.json")});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["relation_trees"] == 2);
    CHECK(j["spanning_trees"] == 3);
    CHECK(j["equal"] == false);
    CHECK(j["spanning_only"] == Json::parse("[[[1,2],[2,4],[3,4]]]"));
}

TEST_CASE("gen-from-tree") {
    SUBCASE("generic ideal of the star tree") {
        CliResult r = run_cli({"--format", "json", "gen-from-tree", data_file("star_tree.json")});
        CHECK(r.code == 0);
        Json j = r.json();
        CHECK(j["generators"] ==
              Json::parse(R"(["x2_1*x3_2*x4_2","x1_2*x3_2*x4_2","x1_2*x2_3*x4_2","x1_2*x2_4*x3_2"])"));
    }
    SUBCASE("labeled tree reproduces the example ideal, round-trips into check-cm") {
        CliResult r = run_cli({"--format", "json", "gen-from-tree", data_file("example_tree.json")});
        CHECK(r.code == 0);
        Json j = r.json();
        CHECK(j["generators"] == Json::parse(R"(["x4*x5*x6","x1*x5*x6","x1*x2*x6","x1*x2*x3*x5"])"));
        TempFile ideal(r.out);
        CliResult c = run_cli({"--format", "json", "check-cm", ideal.path()});
        CHECK(c.code == 0);
        CHECK(c.json()["accepted"] == true);
    }
    SUBCASE("hidden oracle cross-check") {
        CliResult r = run_cli(
            {"--format", "json", "--oracle", "gen-from-tree", data_file("star_tree.json")});
        CHECK(r.code == 0);
        CHECK(r.json()["oracle_agrees"] == true);
    }
}

TEST_CASE("decompose") {
    CliResult r =
        run_cli({"--format", "json", "--oracle", "decompose", data_file("star_tree.json")});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["components"].size() == 6);
    CHECK(j["oracle_agrees"] == true);
}

TEST_CASE("realize emits the worked example bit-exactly") {
    CliResult r = run_cli({"--format", "json", "realize", data_file("example_graph.json")});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["clique_order"]["cliques"] == Json::parse("[[1,2,3],[3,4,5],[5,6],[5,7]]"));
    CHECK(j["clique_order"]["attach_vertices"] == Json::parse("[3,5,5]"));
    CHECK(j["matrix"] == Json::parse(R"([
        ["-x1_1","0","x1_3","0","0","0","0"],
        ["0","-x1_2","x1_3","0","0","0","0"],
        ["0","0","x2_3","-x2_4","0","0","0"],
        ["0","0","x2_3","0","-x2_5","0","0"],
        ["0","0","0","0","x3_5","-x3_6","0"],
        ["0","0","0","0","x4_5","0","-x4_7"]])"));
    CHECK(j["tree"]["edges"] == Json::parse("[[1,3],[2,3],[3,4],[3,5],[5,6],[5,7]]"));
    CHECK(j["verified"]["cm"] == true);
    CHECK(j["verified"]["linear_resolution"] == true);
    CHECK(j["verified"]["taylor_graph_matches"] == true);
}

TEST_CASE("classify-graph rejections") {
    TempFile cycle(R"({"vertices": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]})");
    CliResult r = run_cli({"--format", "json", "classify-graph", cycle.path()});
    CHECK(r.code == 3);
    CHECK(r.json()["admissible"] == false);
    CHECK(r.json()["reason"] == "graph is not chordal");

    TempFile shared(R"({"vertices": 4, "edges": [[1,2],[1,3],[2,3],[1,4],[2,4]]})");
    CliResult s = run_cli({"--format", "json", "classify-graph", shared.path()});
    CHECK(s.code == 3);
    CHECK(s.json()["reason"] == "two maximal cliques share more than one vertex");
}

TEST_CASE("verify-matroid") {
    TempFile good(R"({"vertices": 4, "trees": [[[1,2],[2,3],[3,4]], [[1,2],[2,3],[2,4]]]})");
    CHECK(run_cli({"verify-matroid", good.path()}).code == 0);

    TempFile bad(R"({"vertices": 4, "trees": [[[1,2],[2,3],[3,4]], [[1,2],[1,3],[1,4]]]})");
    CliResult r = run_cli({"--format", "json", "verify-matroid", bad.path()});
    CHECK(r.code == 3);
    CHECK(r.json()["exchange"] == false);
    CHECK(r.json().contains("counterexample"));
}

TEST_CASE("exit codes for error classes") {
    SUBCASE("usage: missing subcommand") { CHECK(run_cli({}).code == 1); }
    SUBCASE("usage: unknown file") {
        CHECK(run_cli({"check-cm", "/nonexistent/path.json"}).code == 1);
    }
    SUBCASE("usage: malformed JSON") {
        TempFile junk("{not json");
        CHECK(run_cli({"check-cm", junk.path()}).code == 1);
    }
    SUBCASE("usage: malformed monomial") {
        TempFile bad(R"({"variables": ["x1"], "generators": ["y9"]})");
        CHECK(run_cli({"check-cm", bad.path()}).code == 1);
    }
    SUBCASE("domain: realize on an inadmissible graph") {
        TempFile cycle(R"({"vertices": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]})");
        CliResult r = run_cli({"--format", "json", "realize", cycle.path()});
        CHECK(r.code == 2);
        CHECK(r.json()["error"] == "domain");
        CHECK(r.json()["reason"] == "graph is not chordal");
    }
    SUBCASE("domain: relation-trees on a non-CM ideal") {
        TempFile bad(R"({"variables": ["x1","x2","x3"], "generators": ["x1","x2","x3"]})");
        CHECK(run_cli({"relation-trees", bad.path()}).code == 2);
    }
    SUBCASE("help exits 0") { CHECK(run_cli({"--help"}).code == 0); }
}

TEST_CASE("text format stays human-readable") {
    CliResult r = run_cli({"check-cm", data_file("example_ideal.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("witness") != std::string::npos);

    CliResult m = run_cli({"realize", data_file("example_graph.json")});
    CHECK(m.code == 0);
    CHECK(m.out.find("x1_3") != std::string::npos);
}

TEST_CASE("dev fuzz subcommands") {
    CHECK(run_cli({"dev", "fuzz-cm", "--seed", "3", "--count", "5"}).code == 0);
    CHECK(run_cli({"dev", "fuzz-realize", "--seed", "3", "--count", "3"}).code == 0);
}

TEST_CASE("--jobs does not change the output") {
    CliResult seq = run_cli({"--format", "json", "relation-trees", data_file("example_ideal.json")});
    CliResult par = run_cli({"--format", "json", "--jobs", "4", "relation-trees",
                             data_file("example_ideal.json")});
    CHECK(seq.code == 0);
    CHECK(par.code == 0);
    CHECK(seq.out == par.out);
}

TEST_CASE("monomial json form round-trips") {
    VarSet v = standard_variables(4);
    Monomial m = parse_monomial(v, "x1^2*x4");
    Json j = monomial_to_json(m);
    CHECK(j == Json::parse(R"([["x1",2],["x4",1]])"));
    CHECK(monomial_from_json(v, j) == m);
    CHECK(monomial_to_json(Monomial::one(v)) == Json::array());
}

TEST_CASE("json output round-trips through the parsers") {
    CliResult r = run_cli({"--format", "json", "gen-from-tree", data_file("star_tree.json")});
    MonomialIdeal ideal = ideal_from_json(r.json());
    CHECK(ideal.generator_count() == 4);

    CliResult t = run_cli({"--format", "json", "taylor-graph", data_file("example_ideal.json")});
    SimpleGraph g = graph_from_json(t.json());
    CHECK(g.vertex_count() == 4);

    CliResult cm = run_cli({"--format", "json", "check-cm", data_file("example_ideal.json")});
    LabeledTree witness = tree_from_json(cm.json()["witness"]);
    CHECK(witness.labeled());
}

TEST_SUITE_END();
