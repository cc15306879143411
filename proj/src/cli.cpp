#include "cm2/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cm2/chordal.hpp"
#include "cm2/fuzz.hpp"
#include "cm2/generic_ideal.hpp"
#include "cm2/json_io.hpp"
#include "cm2/oracle.hpp"
#include "cm2/syzygy.hpp"

namespace cm2::cli {

namespace {

struct Options {
    std::string format = "text";
    int jobs = 1;
    bool oracle_check = false;
    std::string input;

    bool json() const { return format == "json"; }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string edge_text(const Edge& e) {
    return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
}

std::string edge_list_text(std::span<const Edge> edges) {
    std::string s;
    for (const Edge& e : edges) {
        if (!s.empty())
            s += " ";
        s += edge_text(e);
    }
    return s;
}

Json edge_list_json(std::span<const Edge> edges) {
    Json out = Json::array();
    for (const Edge& e : edges)
        out.push_back(Json::array({e.lo, e.hi}));
    return out;
}

Json tree_family_json(std::span<const LabeledTree> trees) {
    Json out = Json::array();
    for (const LabeledTree& t : trees)
        out.push_back(edge_list_json(t.sorted_edges()));
    return out;
}

void print_matrix(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        out << " ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << " " << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << "\n";
    }
}

int cmd_gen_from_tree(const Options& opt, std::ostream& out) {
    LabeledTree tree = tree_from_json(parse_json(read_input(opt.input)));
    VarSet vars;
    std::vector<Monomial> gens;
    if (tree.labeled()) {
        gens = build_cm_ideal(tree);
        vars = tree.labels(0).from_lo.variables();
    } else {
        gens = generic_ideal(tree);
        vars = gens.front().variables();
    }
    MonomialIdeal ideal(vars, std::move(gens));

    bool oracle_agrees = true;
    if (opt.oracle_check && !tree.labeled()) {
        oracle::SignedMonomialMatrix matrix = oracle::generic_sign_matrix(tree, vars);
        for (int j = 1; j <= tree.vertex_count(); ++j) {
            auto det = oracle::det_cofactor(matrix.omit_column(j - 1));
            if (!det || !(det->mono == ideal.generator(j)))
                oracle_agrees = false;
        }
    }

    if (opt.json()) {
        Json j = ideal_to_json(ideal);
        if (opt.oracle_check)
            j["oracle_agrees"] = oracle_agrees;
        emit(out, j);
    } else {
        out << "ideal with " << ideal.generator_count() << " generators:\n";
        for (const Monomial& g : ideal.generators())
            out << "  " << format(g) << "\n";
        if (opt.oracle_check)
            out << "oracle agrees: " << (oracle_agrees ? "yes" : "NO") << "\n";
    }
    return oracle_agrees ? 0 : 2;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
    LabeledTree tree = tree_from_json(parse_json(read_input(opt.input)));
    std::vector<PrimeComponent> components = primary_decomposition_generic(tree);
    VarSet vars = components.front().first.variables();

    bool oracle_agrees = true;
    if (opt.oracle_check) {
        std::vector<std::vector<Monomial>> lists;
        for (const PrimeComponent& c : components)
            lists.push_back({c.first, c.second});
        oracle_agrees = oracle::ideals_equal(generic_ideal(tree), oracle::intersect_ideals(lists));
    }

    if (opt.json()) {
        Json j;
        j["variables"] = variables_to_json(vars);
        Json comps = Json::array();
        for (const PrimeComponent& c : components)
            comps.push_back(Json::array({format(c.first), format(c.second)}));
        j["components"] = std::move(comps);
        if (opt.oracle_check)
            j["oracle_agrees"] = oracle_agrees;
        emit(out, j);
    } else {
        out << components.size() << " prime components:\n";
        for (const PrimeComponent& c : components)
            out << "  (" << format(c.first) << ", " << format(c.second) << ")\n";
        if (opt.oracle_check)
            out << "oracle agrees: " << (oracle_agrees ? "yes" : "NO") << "\n";
    }
    return oracle_agrees ? 0 : 2;
}

int cmd_check_cm(const Options& opt, std::ostream& out) {
    MonomialIdeal ideal = ideal_from_json(parse_json(read_input(opt.input)));
    CmVerdict v = is_cm_codim2(ideal);
    if (opt.json()) {
        Json j;
        j["accepted"] = v.accepted;
        if (v.accepted)
            j["witness"] = tree_to_json(*v.witness);
        else
            j["reason"] = to_string(*v.reason);
        emit(out, j);
    } else if (v.accepted) {
        out << "Cohen-Macaulay of codimension 2; witness tree: "
            << edge_list_text(v.witness->edges()) << "\n";
    } else {
        out << "rejected: " << to_string(*v.reason) << "\n";
    }
    return v.accepted ? 0 : 3;
}

int cmd_relation_trees(const Options& opt, std::ostream& out) {
    MonomialIdeal ideal = ideal_from_json(parse_json(read_input(opt.input)));
    std::vector<LabeledTree> trees = relation_trees(ideal, opt.jobs);

    std::set<Edge> union_edges;
    for (const LabeledTree& t : trees)
        union_edges.insert(t.edges().begin(), t.edges().end());
    SimpleGraph graph(static_cast<int>(ideal.generator_count()),
                      {union_edges.begin(), union_edges.end()});
    ExchangeResult exchange = verify_matroid_exchange(trees);

    if (opt.json()) {
        Json j;
        j["trees"] = tree_family_json(trees);
        j["taylor_graph"] = graph_to_json(graph);
        j["matroid_exchange"] = exchange.ok;
        emit(out, j);
    } else {
        out << trees.size() << " relation trees:\n";
        for (const LabeledTree& t : trees)
            out << "  " << edge_list_text(t.sorted_edges()) << "\n";
        out << "Taylor graph edges: " << edge_list_text(graph.edges()) << "\n";
        out << "matroid exchange: " << (exchange.ok ? "yes" : "NO") << "\n";
    }
    return 0;
}

int cmd_taylor_graph(const Options& opt, std::ostream& out) {
    MonomialIdeal ideal = ideal_from_json(parse_json(read_input(opt.input)));
    SimpleGraph graph = taylor_graph(ideal, opt.jobs);
    if (opt.json())
        emit(out, graph_to_json(graph));
    else
        out << "Taylor graph on " << graph.vertex_count()
            << " vertices, edges: " << edge_list_text(graph.edges()) << "\n";
    return 0;
}

int cmd_check_linear(const Options& opt, std::ostream& out) {
    MonomialIdeal ideal = ideal_from_json(parse_json(read_input(opt.input)));
    bool linear = has_linear_resolution(ideal, opt.jobs);
    if (opt.json()) {
        Json j;
        j["linear_resolution"] = linear;
        emit(out, j);
    } else {
        out << (linear ? "linear resolution" : "no linear resolution") << "\n";
    }
    return linear ? 0 : 3;
}

int cmd_compare_spanning(const Options& opt, std::ostream& out) {
    MonomialIdeal ideal = ideal_from_json(parse_json(read_input(opt.input)));
    SpanningComparison cmp = spanning_equals_relation(ideal, opt.jobs);
    if (opt.json()) {
        Json j;
        j["relation_trees"] = cmp.relation_tree_count;
        j["spanning_trees"] = cmp.spanning_tree_count;
        j["spanning_only"] = tree_family_json(cmp.spanning_only);
        j["equal"] = cmp.equal;
        emit(out, j);
    } else {
        out << "relation trees: " << cmp.relation_tree_count
            << ", spanning trees of the Taylor graph: " << cmp.spanning_tree_count << "\n";
        for (const LabeledTree& t : cmp.spanning_only)
            out << "  spanning but not a relation tree: " << edge_list_text(t.sorted_edges())
                << "\n";
        out << "equal: " << (cmp.equal ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_realize(const Options& opt, std::ostream& out) {
    SimpleGraph graph = graph_from_json(parse_json(read_input(opt.input)));
    ChordalRealization r = realize(graph);
    RealizationCheck check = verify_realization(r, opt.jobs);

    std::vector<std::vector<std::string>> matrix_text;
    for (const RealizationRow& row : r.matrix_rows)
        matrix_text.push_back(row.text(graph.vertex_count()));

    if (opt.json()) {
        Json j;
        j["graph"] = graph_to_json(r.graph);
        Json order;
        order["cliques"] = Json::array();
        for (const auto& c : r.clique_order.cliques)
            order["cliques"].push_back(c);
        order["attach_vertices"] = r.clique_order.attach_vertices;
        j["clique_order"] = std::move(order);
        Json relabel = Json::array();
        for (int v = 1; v <= graph.vertex_count(); ++v)
            relabel.push_back(r.relabel[v]);
        j["relabeling"] = std::move(relabel);
        j["tree"] = tree_to_json(r.tree);
        Json rows = Json::array();
        for (const auto& row : matrix_text)
            rows.push_back(row);
        j["matrix"] = std::move(rows);
        j["ideal"] = ideal_to_json(r.ideal);
        Json verified;
        verified["cm"] = check.cm_accepted;
        verified["linear_resolution"] = check.linear_resolution;
        verified["taylor_graph_matches"] = check.taylor_graph_matches;
        j["verified"] = std::move(verified);
        emit(out, j);
    } else {
        out << "clique order:\n";
        for (std::size_t i = 0; i < r.clique_order.cliques.size(); ++i) {
            out << "  C" << i + 1 << " = {";
            for (std::size_t k = 0; k < r.clique_order.cliques[i].size(); ++k)
                out << (k ? "," : "") << r.clique_order.cliques[i][k];
            out << "}";
            if (i > 0)
                out << "  attach " << r.clique_order.attach_vertices[i - 1];
            out << "\n";
        }
        out << "tree edges: " << edge_list_text(r.tree.edges()) << "\n";
        out << "matrix:\n";
        print_matrix(out, matrix_text);
        out << "ideal:\n";
        for (const Monomial& g : r.ideal.generators())
            out << "  " << format(g) << "\n";
        out << "verified: " << (check.ok() ? "yes" : "NO") << "\n";
    }
    return check.ok() ? 0 : 2;
}

int cmd_classify_graph(const Options& opt, std::ostream& out) {
    SimpleGraph graph = graph_from_json(parse_json(read_input(opt.input)));
    AdmissibilityResult adm = is_admissible_taylor_graph(graph);
    if (opt.json()) {
        Json j;
        j["admissible"] = adm.ok;
        if (!adm.ok)
            j["reason"] = adm.reason;
        emit(out, j);
    } else {
        out << (adm.ok ? "admissible Taylor graph" : "not admissible: " + adm.reason) << "\n";
    }
    return adm.ok ? 0 : 3;
}

int cmd_verify_matroid(const Options& opt, std::ostream& out) {
    Json j = parse_json(read_input(opt.input));
    if (!j.is_object() || !j.contains("vertices") || !j.contains("trees"))
        throw UsageError("expected { \"vertices\": n, \"trees\": [[[i,j], ...], ...] }");
    int n = j["vertices"].get<int>();
    std::vector<LabeledTree> trees;
    for (const Json& t : j["trees"]) {
        Json tree_json;
        tree_json["vertices"] = n;
        tree_json["edges"] = t;
        trees.push_back(tree_from_json(tree_json));
    }
    ExchangeResult result = verify_matroid_exchange(trees);
    if (opt.json()) {
        Json o;
        o["exchange"] = result.ok;
        if (result.counterexample) {
            Json c;
            c["tree_a"] = edge_list_json(trees[result.counterexample->from_index].sorted_edges());
            c["tree_b"] = edge_list_json(trees[result.counterexample->other_index].sorted_edges());
            c["removed_edge"] =
                Json::array({result.counterexample->removed.lo, result.counterexample->removed.hi});
            o["counterexample"] = std::move(c);
        }
        emit(out, o);
    } else if (result.ok) {
        out << "exchange property holds\n";
    } else {
        out << "exchange fails: removing " << edge_text(result.counterexample->removed)
            << " from " << edge_list_text(trees[result.counterexample->from_index].sorted_edges())
            << " cannot reach "
            << edge_list_text(trees[result.counterexample->other_index].sorted_edges()) << "\n";
    }
    return result.ok ? 0 : 3;
}

int cmd_dev_fuzz_cm(const Options& opt, std::ostream& out, std::uint64_t seed, int count) {
    fuzz::Rng rng(seed);
    int failures = 0;
    for (int k = 0; k < count; ++k) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        LabeledTree tree = fuzz::random_labeled_cm_tree(rng, n);
        MonomialIdeal ideal(tree.labels(0).from_lo.variables(), build_cm_ideal(tree));
        CmVerdict v = is_cm_codim2(ideal);
        bool ok = v.accepted && tree_generates(ideal, tree) &&
                  verify_matroid_exchange(relation_trees(ideal, opt.jobs)).ok;
        if (!ok) {
            ++failures;
            out << "FAIL seed=" << seed << " case=" << k << "\n";
        }
    }
    out << "fuzz-cm: " << (count - failures) << "/" << count << " ok\n";
    return failures ? 3 : 0;
}

int cmd_dev_fuzz_realize(const Options& opt, std::ostream& out, std::uint64_t seed, int count) {
    fuzz::Rng rng(seed);
    int failures = 0;
    for (int k = 0; k < count; ++k) {
        SimpleGraph g = fuzz::random_admissible_graph(rng, 8);
        ChordalRealization r = realize(g);
        if (!verify_realization(r, opt.jobs).ok()) {
            ++failures;
            out << "FAIL seed=" << seed << " case=" << k << "\n";
        }
    }
    out << "fuzz-realize: " << (count - failures) << "/" << count << " ok\n";
    return failures ? 3 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohen-Macaulay codimension-2 monomial ideals: relation trees, "
                 "Hilbert-Burch matrices, Taylor graphs and chordal realizations"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success/affirmative, 1 usage error, 2 domain error,\n"
               "3 negative verdict of a check command.");

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for tree enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--oracle", opt.oracle_check)->group("");  // hidden: cross-check with the slow reference code

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input file or '-' for stdin")->required();
    };

    CLI::App* gen = app.add_subcommand(
        "gen-from-tree", "ideal attached to a tree (generic, or from edge labels)");
    add_input(gen);
    CLI::App* decompose =
        app.add_subcommand("decompose", "primary decomposition of the generic ideal of a tree");
    add_input(decompose);
    CLI::App* check_cm =
        app.add_subcommand("check-cm", "decide Cohen-Macaulayness of codimension 2");
    add_input(check_cm);
    CLI::App* rel_trees = app.add_subcommand("relation-trees", "all relation trees of an ideal");
    add_input(rel_trees);
    CLI::App* tg = app.add_subcommand("taylor-graph", "union of all relation trees");
    add_input(tg);
    CLI::App* check_linear = app.add_subcommand("check-linear", "decide linear resolution");
    add_input(check_linear);
    CLI::App* compare = app.add_subcommand(
        "compare-spanning", "relation trees vs spanning trees of the Taylor graph");
    add_input(compare);
    CLI::App* realize_cmd =
        app.add_subcommand("realize", "realize an admissible graph as a Taylor graph");
    add_input(realize_cmd);
    CLI::App* classify =
        app.add_subcommand("classify-graph", "is the graph an admissible Taylor graph?");
    add_input(classify);
    CLI::App* matroid =
        app.add_subcommand("verify-matroid", "basis exchange property of a tree family");
    add_input(matroid);

    CLI::App* dev = app.add_subcommand("dev", "development helpers")->group("");
    std::uint64_t seed = 1;
    int count = 50;
    CLI::App* fuzz_cm = dev->add_subcommand("fuzz-cm", "random labeled-tree ideals");
    fuzz_cm->add_option("--seed", seed);
    fuzz_cm->add_option("--count", count);
    CLI::App* fuzz_realize = dev->add_subcommand("fuzz-realize", "random admissible graphs");
    fuzz_realize->add_option("--seed", seed);
    fuzz_realize->add_option("--count", count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed())
            return cmd_gen_from_tree(opt, out);
        if (decompose->parsed())
            return cmd_decompose(opt, out);
        if (check_cm->parsed())
            return cmd_check_cm(opt, out);
        if (rel_trees->parsed())
            return cmd_relation_trees(opt, out);
        if (tg->parsed())
            return cmd_taylor_graph(opt, out);
        if (check_linear->parsed())
            return cmd_check_linear(opt, out);
        if (compare->parsed())
            return cmd_compare_spanning(opt, out);
        if (realize_cmd->parsed())
            return cmd_realize(opt, out);
        if (classify->parsed())
            return cmd_classify_graph(opt, out);
        if (matroid->parsed())
            return cmd_verify_matroid(opt, out);
        if (dev->parsed()) {
            if (fuzz_cm->parsed())
                return cmd_dev_fuzz_cm(opt, out, seed, count);
            if (fuzz_realize->parsed())
                return cmd_dev_fuzz_realize(opt, out, seed, count);
            err << "dev needs a subcommand\n";
            return 1;
        }
        err << "no subcommand\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        if (opt.json()) {
            Json j;
            j["error"] = "domain";
            j["reason"] = e.what();
            out << j.dump(2) << "\n";
        } else {
            err << "domain error: " << e.what() << "\n";
        }
        return 2;
    } catch (const PreconditionError& e) {
        if (opt.json()) {
            Json j;
            j["error"] = "domain";
            j["reason"] = e.what();
            out << j.dump(2) << "\n";
        } else {
            err << "domain error: " << e.what() << "\n";
        }
        return 2;
    }
}

}  // namespace cm2::cli
