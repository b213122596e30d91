// Command-line front end: solve / analyze / verify / generate.
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lampack/constructive.hpp"
#include "lampack/families.hpp"
#include "lampack/graph6.hpp"
#include "lampack/harness.hpp"
#include "lampack/solver.hpp"
#include "lampack/structure.hpp"

namespace {

using namespace lampack;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("LAMPACK_NODE_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultNodeBudget;
}

Graph read_one_graph(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        return parse_graph6(line);
    }
    throw std::runtime_error("no graph6 record on input");
}

std::pair<int, int> parse_pair(const std::string& s) {
    std::istringstream is(s);
    int a, b;
    char comma;
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof())
        throw CLI::ValidationError("expected u,v: " + s);
    return {a, b};
}

int cmd_solve(const std::vector<std::string>& req_edges,
              const std::vector<std::string>& forb_edges,
              const std::string& req_path,
              const std::vector<int>& del_vertices, std::uint64_t budget) {
    Graph g = read_one_graph(std::cin);
    PackingConstraints c;
    for (const auto& s : req_edges) {
        auto [u, v] = parse_pair(s);
        c.required_edge = make_edge(u, v);
    }
    for (const auto& s : forb_edges) {
        auto [u, v] = parse_pair(s);
        c.forbidden_edges.push_back(make_edge(u, v));
    }
    if (!req_path.empty()) {
        std::istringstream is(req_path);
        int a, b, ctr;
        char c1, c2;
        if (!(is >> a >> c1 >> ctr >> c2 >> b) || c1 != ',' || c2 != ',')
            throw CLI::ValidationError("expected a,b,c: " + req_path);
        c.required_path = VertexPath3(ctr, a, b);
    }
    c.deleted_vertices = del_vertices;

    auto r = max_packing(g, c, budget);
    if (r.status == SolveStatus::kBudgetExceeded) {
        std::cout << "resource-exhausted nodes=" << r.nodes << "\n";
        return 1;
    }
    if (r.status == SolveStatus::kInfeasible) {
        std::cout << "no packing satisfies the constraints\n";
        std::cout << "factor: no\n";
        return 0;
    }
    int active = g.vertex_count() - static_cast<int>(c.deleted_vertices.size());
    std::cout << "packing size=" << r.packing.size() << " of max "
              << active / 3 << "\n";
    for (const auto& p : r.packing.paths)
        std::cout << "  path " << p.ends[0] << "-" << p.center << "-"
                  << p.ends[1] << "\n";
    bool factor = 3 * r.packing.size() == static_cast<std::size_t>(active);
    std::cout << (factor ? "factor: yes\n" : "factor: no\n");
    return 0;
}

int cmd_analyze() {
    Graph g = read_one_graph(std::cin);
    auto bd = block_decomposition(g);
    auto tp = triangle_profile(g);
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    std::cout << "connected=" << (is_connected(g) ? "yes" : "no") << "\n";
    std::cout << "connectivity=" << vertex_connectivity(g) << "\n";
    std::cout << "claw_free=" << (is_claw_free(g) ? "yes" : "no") << "\n";
    std::cout << "cubic=" << (is_cubic(g) ? "yes" : "no") << "\n";
    std::cout << "blocks=" << bd.blocks.size()
              << " cut_vertices=" << bd.cut_vertices.size()
              << " eb=" << bd.end_block_count << "\n";
    std::cout << "triangles=" << tp.triangles.size() << "\n";
    std::cout << "three_leaf_triangle_family=" << (is_class_A(g) ? "yes" : "no")
              << "\n";
    std::cout << "triangle_blowup=" << (recognize_blowup(g) ? "yes" : "no")
              << "\n";
    return 0;
}

int cmd_verify(const std::string& corpus_path,
               const std::vector<std::string>& theorems, const SweepFilter& f,
               std::uint64_t budget, std::size_t cap, std::uint64_t seed,
               int jobs) {
    std::vector<CorpusError> errors;
    std::vector<CorpusEntry> corpus;
    if (corpus_path == "-") {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(std::cin, line)) {
            lineno++;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line == ">>graph6<<") continue;
            try {
                corpus.push_back({line, parse_graph6(line), lineno});
            } catch (const Graph6Error& e) {
                errors.push_back({lineno, e.what()});
            }
        }
    } else {
        corpus = load_corpus(corpus_path, &errors);
    }
    for (const auto& e : errors)
        std::cerr << "warning: line " << e.line << ": " << e.message << "\n";

    SweepConfig cfg;
    cfg.theorems = theorems;
    cfg.filter = f;
    cfg.check.node_budget = budget;
    cfg.check.universal_cap = cap;
    cfg.check.seed = seed;
    cfg.jobs = jobs;
    auto summary = sweep(corpus, cfg);
    for (const auto& e : summary.entries) std::cout << format_record(e) << "\n";
    std::cout << format_summary(summary) << "\n";
    return summary.counterexamples > 0 ? 1 : 0;
}

int cmd_generate(const std::string& family, int steps, int la, int lb) {
    Graph g(0);
    if (family == "net") {
        g = gen_net();
    } else if (family == "classA") {
        g = gen_class_A(steps);
    } else if (family == "H") {
        auto h = steps > 0 ? gen_H_extended(steps) : gen_H();
        std::cerr << "T=" << h.t[0] << "," << h.t[1] << "," << h.t[2] << "\n";
        g = h.graph;
    } else if (family == "R") {
        auto r = gen_R(la, lb);
        std::cerr << "a=" << r.a.first << "," << r.a.second
                  << " b=" << r.b.first << "," << r.b.second << "\n";
        g = r.graph;
    } else if (family == "Q") {
        auto q = gen_Q(la, lb);
        std::cerr << "e=" << q.e.first << "," << q.e.second << "\n";
        g = q.graph;
    } else if (family == "blowup") {
        Graph base = read_one_graph(std::cin);
        g = triangle_blowup(base).blown;
    } else {
        throw CLI::ValidationError("unknown family: " + family);
    }
    std::cout << emit_graph6(g) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-vertex-path packing toolkit"};
    app.require_subcommand(1);

    std::uint64_t budget = default_budget();

    auto* solve = app.add_subcommand("solve", "maximum packing of a graph6 record from stdin");
    std::vector<std::string> req_edges, forb_edges;
    std::string req_path;
    std::vector<int> del_vertices;
    solve->add_option("--require-edge", req_edges, "u,v the packing must use");
    solve->add_option("--forbid-edge", forb_edges, "u,v the packing must avoid");
    solve->add_option("--require-path", req_path, "a,b,c path (b the middle) the packing must contain");
    solve->add_option("--delete-vertex", del_vertices, "vertex removed before solving");
    solve->add_option("--budget", budget, "solver node budget");

    auto* analyze = app.add_subcommand("analyze", "structural report for a graph6 record from stdin");

    auto* verify = app.add_subcommand("verify", "sweep theorem checks over a graph6 corpus");
    std::string corpus_path = "-";
    std::vector<std::string> theorems;
    SweepFilter filter;
    int min_conn = -1, n_mod_3 = -1, max_n = -1;
    bool want_claw_free = false, want_cubic = false;
    std::size_t cap = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    verify->add_option("--corpus", corpus_path, "graph6 file, or - for stdin");
    verify->add_option("--theorem", theorems, "check id(s); default all")
        ->delimiter(',');
    verify->add_option("--min-connectivity", min_conn, "filter: vertex connectivity at least k");
    verify->add_flag("--claw-free", want_claw_free, "filter: claw-free graphs only");
    verify->add_flag("--cubic", want_cubic, "filter: cubic graphs only");
    verify->add_option("--n-mod-3", n_mod_3, "filter: n mod 3 equals r");
    verify->add_option("--max-n", max_n, "filter: at most n vertices");
    verify->add_option("--budget", budget, "solver node budget per sub-instance");
    verify->add_option("--cap", cap, "cap universal sub-sweeps (0 = automatic)");
    verify->add_option("--seed", seed, "sampling seed for capped sweeps");
    verify->add_option("--jobs", jobs, "worker threads");

    auto* generate = app.add_subcommand("generate", "emit a named family member as graph6");
    std::string family;
    int steps = 0, la = 4, lb = 4;
    generate->add_option("--family", family, "net|classA|H|R|Q|blowup")->required();
    generate->add_option("--steps", steps, "expansion steps (classA, H)");
    generate->add_option("--la", la, "first cycle length (R, Q)");
    generate->add_option("--lb", lb, "second cycle length (R, Q)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed())
            return cmd_solve(req_edges, forb_edges, req_path, del_vertices, budget);
        if (analyze->parsed()) return cmd_analyze();
        if (verify->parsed()) {
            if (min_conn >= 0) filter.min_connectivity = min_conn;
            if (want_claw_free) filter.claw_free = true;
            if (want_cubic) filter.cubic = true;
            if (n_mod_3 >= 0) filter.n_mod_3 = n_mod_3;
            if (max_n >= 0) filter.max_n = max_n;
            return cmd_verify(corpus_path, theorems, filter, budget, cap, seed, jobs);
        }
        if (generate->parsed()) return cmd_generate(family, steps, la, lb);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
