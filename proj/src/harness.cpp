#include "lampack/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "lampack/constructive.hpp"
#include "lampack/families.hpp"
#include "lampack/graph6.hpp"
#include "lampack/solver.hpp"
#include "lampack/structure.hpp"

namespace lampack {

CheckOptions::CheckOptions() : node_budget(kDefaultNodeBudget) {}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::kNotApplicable: return "NOT_APPLICABLE";
        case Outcome::kHolds: return "HOLDS";
        case Outcome::kCounterexample: return "COUNTEREXAMPLE";
        case Outcome::kResourceExhausted: return "RESOURCE_EXHAUSTED";
    }
    return "?";
}

const std::vector<std::string>& all_theorem_ids() {
    static const std::vector<std::string> ids = {
        "T2_1", "T2_2", "T2_3", "T2_4", "T2_5", "T2_6", "T2_7", "T2_8",
        "T2_9", "T2_10", "T2_11", "T2_12", "T2_13", "T2_14",
        "B1_1", "B1_9", "B1_10"};
    return ids;
}

namespace {

struct BudgetStop {
    std::string where;
};

std::string path_str(const VertexPath3& p) {
    return std::to_string(p.ends[0]) + "-" + std::to_string(p.center) + "-" +
           std::to_string(p.ends[1]);
}

std::string edge_str(const Edge& e) {
    return std::to_string(e.first) + "," + std::to_string(e.second);
}

// Per-check context: tallies solver nodes, converts budget trips into
// BudgetStop (never a silent "no").
struct Ctx {
    const Graph& g;
    const CheckOptions& opt;
    std::uint64_t nodes = 0;

    bool factor(const PackingConstraints& c, const std::string& where) {
        auto r = has_factor(g, c, opt.node_budget);
        nodes += r.nodes;
        if (r.status == SolveStatus::kBudgetExceeded) throw BudgetStop{where};
        if (r.status == SolveStatus::kSolved)
            validate_packing(r.packing, g, c, /*require_factor=*/true);
        return r.status == SolveStatus::kSolved;
    }

    int lambda() {
        auto r = max_packing(g, PackingConstraints::none(), opt.node_budget);
        nodes += r.nodes;
        if (r.status == SolveStatus::kBudgetExceeded) throw BudgetStop{"lambda"};
        validate_packing(r.packing, g, PackingConstraints::none(), false);
        return r.packing.size();
    }

    // Universal-quantifier index selection: exhaustive for small graphs,
    // seeded sampling above the cap; the note records the cap and seed.
    std::vector<std::size_t> universe(std::size_t total, std::string* note) {
        std::size_t cap = opt.universal_cap;
        if (cap == 0 && g.vertex_count() > 15) cap = 20000;
        std::vector<std::size_t> idx(total);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        if (cap == 0 || total <= cap) return idx;
        std::mt19937_64 rng(opt.seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(cap);
        std::sort(idx.begin(), idx.end());
        *note = " capped=" + std::to_string(cap) + "/" + std::to_string(total) +
                " seed=" + std::to_string(opt.seed);
        return idx;
    }
};

std::vector<VertexPath3> all_paths(const Graph& g) {
    std::vector<VertexPath3> out;
    for (int c = 0; c < g.vertex_count(); c++) {
        auto nbrs = g.neighbor_list(c);
        for (std::size_t i = 0; i < nbrs.size(); i++)
            for (std::size_t j = i + 1; j < nbrs.size(); j++)
                out.emplace_back(c, nbrs[i], nbrs[j]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<Edge, 3>> edge_triples(const Graph& g) {
    auto es = g.edges();
    std::vector<std::array<Edge, 3>> out;
    for (std::size_t i = 0; i < es.size(); i++)
        for (std::size_t j = i + 1; j < es.size(); j++)
            for (std::size_t k = j + 1; k < es.size(); k++)
                out.push_back({es[i], es[j], es[k]});
    return out;
}

TheoremVerdict na(const std::string& id, const std::string& why) {
    return {id, Outcome::kNotApplicable, why, 0, 0};
}

TheoremVerdict holds(const std::string& id, Ctx& ctx, const std::string& detail) {
    return {id, Outcome::kHolds, detail, ctx.nodes, 0};
}

TheoremVerdict cex(const std::string& id, Ctx& ctx, const std::string& detail) {
    return {id, Outcome::kCounterexample, detail, ctx.nodes, 0};
}

struct Hypotheses {
    int n;
    bool connected;
    bool claw_free;
    int kappa;

    explicit Hypotheses(const Graph& g)
        : n(g.vertex_count()),
          connected(is_connected(g)),
          claw_free(is_claw_free(g)),
          kappa(vertex_connectivity(g)) {}
};

// ---- per-theorem checks -------------------------------------------------

// Blow-up of a cubic 2-connected base: G - L has a factor for every L,
// and the three constructive factor modes match L's triangle test.
TheoremVerdict check_T2_1(const Graph& g, Ctx& ctx) {
    auto m = recognize_blowup(g);
    if (!m) return na("T2_1", "not a triangle blow-up of a simple cubic graph");
    if (vertex_connectivity(m->base) < 2) return na("T2_1", "base not 2-connected");

    auto mode_ok = [&](const LambdaPacking& p, const VertexPath3& l,
                       BlowupFactorMode mode) -> std::string {
        try {
            validate_packing(p, g, PackingConstraints::none(), true);
        } catch (const std::invalid_argument& e) {
            return e.what();
        }
        if (std::find(p.paths.begin(), p.paths.end(), l) == p.paths.end())
            return "factor does not contain L";
        int triangles = 0;
        for (const auto& path : p.paths)
            if (path.induces_triangle(g)) triangles++;
        switch (mode) {
            case BlowupFactorMode::kAllTriangle:
                if (triangles != p.size()) return "non-triangle component present";
                break;
            case BlowupFactorMode::kNoTriangle:
                if (triangles != 0) return "triangle component present";
                break;
            case BlowupFactorMode::kMixed:
                if (triangles == 0) return "no triangle component";
                break;
        }
        return "";
    };

    auto paths = all_paths(g);
    std::string note;
    auto idx = ctx.universe(paths.size(), &note);
    for (std::size_t i : idx) {
        const auto& l = paths[i];
        auto [a, b, c] = l.vertices();
        PackingConstraints minus_l;
        minus_l.deleted_vertices = {a, b, c};
        if (!ctx.factor(minus_l, "G-L for L=" + path_str(l)))
            return cex("T2_1", ctx, "G-L has no factor for L=" + path_str(l));

        std::vector<BlowupFactorMode> modes =
            l.induces_triangle(g)
                ? std::vector<BlowupFactorMode>{BlowupFactorMode::kAllTriangle}
                : std::vector<BlowupFactorMode>{BlowupFactorMode::kNoTriangle,
                                                BlowupFactorMode::kMixed};
        for (auto mode : modes) {
            const char* name = mode == BlowupFactorMode::kAllTriangle ? "a1"
                               : mode == BlowupFactorMode::kNoTriangle ? "a2"
                                                                       : "a3";
            try {
                auto p = blowup_factor(*m, l, mode);
                std::string err = mode_ok(p, l, mode);
                if (!err.empty())
                    return cex("T2_1", ctx, std::string("mode ") + name + " L=" +
                                                path_str(l) + ": " + err);
            } catch (const ConstructionError& e) {
                return cex("T2_1", ctx, std::string("mode ") + name + " L=" +
                                            path_str(l) + ": " + e.what());
            }
        }
        // Constructive route agrees with the solver.
        PackingConstraints with_l;
        with_l.required_path = l;
        if (!ctx.factor(with_l, "factor containing L=" + path_str(l)))
            return cex("T2_1", ctx, "solver finds no factor containing L=" + path_str(l));
    }
    return holds("T2_1", ctx, "paths=" + std::to_string(idx.size()) + note);
}

// 2-connected claw-free, n = 2 mod 3: every vertex has two removable
// partners leaving a connected graph with a factor.
TheoremVerdict check_T2_2(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 2) return na("T2_2", "not 2-connected");
    if (!h.claw_free) return na("T2_2", "not claw-free");
    if (h.n % 3 != 2) return na("T2_2", "n != 2 mod 3");
    std::string cert;
    for (int x = 0; x < h.n; x++) {
        std::vector<int> good;
        for (int z : g.neighbor_list(x)) {
            auto sub = delete_vertices(g, {x, z});
            if (!is_connected(sub.graph)) continue;
            PackingConstraints c;
            c.deleted_vertices = {x, z};
            if (ctx.factor(c, "G-{" + std::to_string(x) + "," + std::to_string(z) + "}"))
                good.push_back(z);
            if (good.size() == 2) break;
        }
        if (good.size() < 2)
            return cex("T2_2", ctx, "x=" + std::to_string(x) + " has " +
                                        std::to_string(good.size()) +
                                        " factor-compatible partners");
        cert += (cert.empty() ? "" : ";") + std::to_string(x) + ":" +
                std::to_string(good[0]) + "," + std::to_string(good[1]);
    }
    return holds("T2_2", ctx, cert);
}

TheoremVerdict check_T2_3(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 3) return na("T2_3", "not 3-connected");
    if (!h.claw_free) return na("T2_3", "not claw-free");
    if (h.n % 3 != 2) return na("T2_3", "n != 2 mod 3");
    for (const auto& [x, y] : g.edges()) {
        PackingConstraints c;
        c.deleted_vertices = {x, y};
        if (!ctx.factor(c, "G-{" + edge_str({x, y}) + "}"))
            return cex("T2_3", ctx, "no factor of G-{" + edge_str({x, y}) + "}");
    }
    return holds("T2_3", ctx, "edges=" + std::to_string(g.edge_count()));
}

// For every edge xy: two paths centered at y through xy whose removal
// leaves a connected graph with a factor.
TheoremVerdict check_T2_4(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 3) return na("T2_4", "not 3-connected");
    if (!h.claw_free) return na("T2_4", "not claw-free");
    if (h.n % 3 != 0) return na("T2_4", "n != 0 mod 3");
    for (const auto& e : g.edges())
        for (const auto& [x, y] : {e, Edge{e.second, e.first}}) {
            int good = 0;
            for (int z : g.neighbor_list(y)) {
                if (z == x) continue;
                VertexPath3 l(y, x, z);
                auto sub = delete_path(g, l);
                if (!is_connected(sub.graph)) continue;
                auto [a, b, c2] = l.vertices();
                PackingConstraints c;
                c.deleted_vertices = {a, b, c2};
                if (ctx.factor(c, "G-L for L=" + path_str(l))) good++;
                if (good == 2) break;
            }
            if (good < 2)
                return cex("T2_4", ctx, "edge " + edge_str({x, y}) + " centered at " +
                                            std::to_string(y) + ": only " +
                                            std::to_string(good) + " good paths");
        }
    return holds("T2_4", ctx, "edges=" + std::to_string(g.edge_count()) + " (both orientations)");
}

TheoremVerdict check_T2_5(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 3) return na("T2_5", "not 3-connected");
    if (!h.claw_free) return na("T2_5", "not claw-free");
    if (h.n % 3 != 0) return na("T2_5", "n != 0 mod 3");
    int checked = 0;
    for (const auto& l : all_paths(g)) {
        if (g.degree(l.center) != 3) continue;
        checked++;
        auto sub = delete_path(g, l);
        if (!is_connected(sub.graph))
            return cex("T2_5", ctx, "G-L disconnected for L=" + path_str(l));
        auto [a, b, c2] = l.vertices();
        PackingConstraints c;
        c.deleted_vertices = {a, b, c2};
        if (!ctx.factor(c, "G-L for L=" + path_str(l)))
            return cex("T2_5", ctx, "no factor of G-L for L=" + path_str(l));
    }
    return holds("T2_5", ctx, "paths=" + std::to_string(checked));
}

TheoremVerdict check_T2_6(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 4) return na("T2_6", "not 4-connected");
    if (!h.claw_free) return na("T2_6", "not claw-free");
    if (h.n % 3 != 0) return na("T2_6", "n != 0 mod 3");
    auto paths = all_paths(g);
    std::string note;
    auto idx = ctx.universe(paths.size(), &note);
    for (std::size_t i : idx) {
        const auto& l = paths[i];
        auto sub = delete_path(g, l);
        if (!is_connected(sub.graph))
            return cex("T2_6", ctx, "G-L disconnected for L=" + path_str(l));
        auto [a, b, c2] = l.vertices();
        PackingConstraints c;
        c.deleted_vertices = {a, b, c2};
        if (!ctx.factor(c, "G-L for L=" + path_str(l)))
            return cex("T2_6", ctx, "no factor of G-L for L=" + path_str(l));
    }
    return holds("T2_6", ctx, "paths=" + std::to_string(idx.size()) + note);
}

TheoremVerdict check_T2_7(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 3) return na("T2_7", "not 3-connected");
    if (!h.claw_free) return na("T2_7", "not claw-free");
    if (h.n % 3 != 0) return na("T2_7", "n != 0 mod 3");
    for (const auto& e : g.edges()) {
        PackingConstraints contain;
        contain.required_edge = e;
        if (!ctx.factor(contain, "factor containing " + edge_str(e)))
            return cex("T2_7", ctx, "no factor containing edge " + edge_str(e));
        PackingConstraints avoid;
        avoid.forbidden_edges = {e};
        if (!ctx.factor(avoid, "factor avoiding " + edge_str(e)))
            return cex("T2_7", ctx, "no factor avoiding edge " + edge_str(e));
    }
    return holds("T2_7", ctx, "edges=" + std::to_string(g.edge_count()));
}

TheoremVerdict check_T2_8(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 2) return na("T2_8", "not 2-connected");
    if (!h.claw_free) return na("T2_8", "not claw-free");
    if (h.n % 3 != 0) return na("T2_8", "n != 0 mod 3");
    for (const auto& e : g.edges()) {
        PackingConstraints avoid;
        avoid.forbidden_edges = {e};
        if (!ctx.factor(avoid, "factor avoiding " + edge_str(e)))
            return cex("T2_8", ctx, "no factor avoiding edge " + edge_str(e));
    }
    return holds("T2_8", ctx, "edges=" + std::to_string(g.edge_count()));
}

TheoremVerdict check_T2_9(const Graph& g, Ctx& ctx) {
    if (!is_class_A(g)) return na("T2_9", "not in the three-leaf triangle family");
    if (ctx.factor(PackingConstraints::none(), "factor"))
        return cex("T2_9", ctx, "family member has a factor");
    return holds("T2_9", ctx, "no factor, as claimed");
}

// The blow-up 3-edge-removal biconditional, both directions.
TheoremVerdict check_T2_10(const Graph& g, Ctx& ctx) {
    auto m = recognize_blowup(g);
    if (!m) return na("T2_10", "not a triangle blow-up of a simple cubic graph");
    if (vertex_connectivity(m->base) < 2) return na("T2_10", "base not 2-connected");
    auto triples = edge_triples(g);
    std::string note;
    auto idx = ctx.universe(triples.size(), &note);
    for (std::size_t i : idx) {
        const auto& t = triples[i];
        auto cls = classify_edge_triple(g, t);
        PackingConstraints c;
        c.forbidden_edges = {t[0], t[1], t[2]};
        bool feasible = ctx.factor(
            c, "G-E for E=" + edge_str(t[0]) + ";" + edge_str(t[1]) + ";" + edge_str(t[2]));
        bool obstructed = cls != EdgeTripleClass::kNone;
        if (feasible == obstructed)
            return cex("T2_10", ctx,
                       "E=" + edge_str(t[0]) + ";" + edge_str(t[1]) + ";" +
                           edge_str(t[2]) + " classified " +
                           (obstructed ? "obstruction" : "removable") + " but factor " +
                           (feasible ? "exists" : "missing"));
    }
    return holds("T2_10", ctx, "triples=" + std::to_string(idx.size()) + note);
}

TheoremVerdict check_T2_11(const Graph& g, Ctx& ctx) {
    auto m = recognize_blowup(g);
    if (!m) return na("T2_11", "not a triangle blow-up of a simple cubic graph");
    if (vertex_connectivity(m->base) < 2) return na("T2_11", "base not 2-connected");
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); i++)
        for (std::size_t j = i + 1; j < es.size(); j++) {
            PackingConstraints c;
            c.forbidden_edges = {es[i], es[j]};
            if (!ctx.factor(c, "G-E for E=" + edge_str(es[i]) + ";" + edge_str(es[j])))
                return cex("T2_11", ctx, "no factor of G-E for E=" + edge_str(es[i]) +
                                             ";" + edge_str(es[j]));
        }
    return holds("T2_11", ctx, "pairs=" + std::to_string(es.size() * (es.size() - 1) / 2));
}

// 3-connected claw-free: G - E (|E|=3) has a factor iff the edge-induced
// shape is neither a claw nor a triangle.
TheoremVerdict check_T2_12(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 3) return na("T2_12", "not 3-connected");
    if (!h.claw_free) return na("T2_12", "not claw-free");
    if (h.n % 3 != 0) return na("T2_12", "n != 0 mod 3");
    auto triples = edge_triples(g);
    std::string note;
    auto idx = ctx.universe(triples.size(), &note);
    for (std::size_t i : idx) {
        const auto& t = triples[i];
        // Edge-induced shape tests (no blow-up precondition here).
        std::uint64_t covered = 0;
        for (const auto& [u, v] : t) covered |= (1ULL << u) | (1ULL << v);
        bool claw = false;
        for (int v : {t[0].first, t[0].second})
            if ((v == t[1].first || v == t[1].second) &&
                (v == t[2].first || v == t[2].second))
                claw = true;
        bool triangle = !claw && std::popcount(covered) == 3;
        PackingConstraints c;
        c.forbidden_edges = {t[0], t[1], t[2]};
        bool feasible = ctx.factor(
            c, "G-E for E=" + edge_str(t[0]) + ";" + edge_str(t[1]) + ";" + edge_str(t[2]));
        if (feasible == (claw || triangle))
            return cex("T2_12", ctx,
                       "E=" + edge_str(t[0]) + ";" + edge_str(t[1]) + ";" +
                           edge_str(t[2]) + (claw ? " (claw)" : triangle ? " (triangle)" : "") +
                           ": factor " + (feasible ? "exists" : "missing"));
    }
    return holds("T2_12", ctx, "triples=" + std::to_string(idx.size()) + note);
}

TheoremVerdict check_T2_13(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 2) return na("T2_13", "not 2-connected");
    if (!h.claw_free) return na("T2_13", "not claw-free");
    if (h.n % 3 != 1) return na("T2_13", "n != 1 mod 3");
    for (int x = 0; x < h.n; x++) {
        PackingConstraints c;
        c.deleted_vertices = {x};
        if (!ctx.factor(c, "G-x for x=" + std::to_string(x)))
            return cex("T2_13", ctx, "no factor of G-x for x=" + std::to_string(x));
    }
    return holds("T2_13", ctx, "vertices=" + std::to_string(h.n));
}

TheoremVerdict check_T2_14(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (h.kappa < 3) return na("T2_14", "not 3-connected");
    if (!h.claw_free) return na("T2_14", "not claw-free");
    if (h.n % 3 != 1) return na("T2_14", "n != 1 mod 3");
    for (int x = 0; x < h.n; x++)
        for (const auto& e : g.edges()) {
            PackingConstraints c;
            c.deleted_vertices = {x};
            if (e.first != x && e.second != x) c.forbidden_edges = {e};
            if (!ctx.factor(c, "G-{x,e} x=" + std::to_string(x) + " e=" + edge_str(e)))
                return cex("T2_14", ctx, "no factor of G-{x,e} for x=" +
                                             std::to_string(x) + " e=" + edge_str(e));
        }
    return holds("T2_14", ctx, "pairs=" + std::to_string(h.n * g.edge_count()));
}

TheoremVerdict check_B1_1(const Graph& g, Ctx& ctx) {
    if (!is_cubic(g)) return na("B1_1", "not cubic");
    int lam = ctx.lambda();
    int bound = (g.vertex_count() + 3) / 4;
    if (lam < bound)
        return cex("B1_1", ctx, "lambda=" + std::to_string(lam) + " < ceil(n/4)=" +
                                    std::to_string(bound));
    return holds("B1_1", ctx, "lambda=" + std::to_string(lam) +
                                  " >= " + std::to_string(bound));
}

TheoremVerdict check_B1_9_impl(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (!h.claw_free) return na("B1_9", "not claw-free");
    bool two_conn = h.kappa >= 2;
    bool two_endblocks =
        h.connected && block_decomposition(g).end_block_count == 2;
    if (!two_conn && !two_endblocks)
        return na("B1_9", "neither 2-connected nor connected with two end-blocks");
    int lam = ctx.lambda();
    int bound = h.n / 3;
    if (lam != bound)
        return cex("B1_9", ctx, "lambda=" + std::to_string(lam) + " != floor(n/3)=" +
                                    std::to_string(bound));
    return holds("B1_9", ctx, "lambda=" + std::to_string(lam));
}

TheoremVerdict check_B1_10(const Graph& g, const Hypotheses& h, Ctx& ctx) {
    if (!h.connected) return na("B1_10", "not connected");
    if (!h.claw_free) return na("B1_10", "not claw-free");
    int eb = block_decomposition(g).end_block_count;
    if (eb < 2) return na("B1_10", "fewer than two end-blocks");
    int lam = ctx.lambda();
    int bound = (h.n - eb + 2) / 3;
    if (lam < bound)
        return cex("B1_10", ctx, "lambda=" + std::to_string(lam) + " < " +
                                     std::to_string(bound) + " (eb=" +
                                     std::to_string(eb) + ")");
    return holds("B1_10", ctx, "lambda=" + std::to_string(lam) + " eb=" +
                                   std::to_string(eb));
}

}  // namespace

TheoremVerdict check_theorem(const std::string& id, const Graph& g,
                             const CheckOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    Ctx ctx{g, opt};
    TheoremVerdict v;
    try {
        if (id == "T2_1") v = check_T2_1(g, ctx);
        else if (id == "T2_9") v = check_T2_9(g, ctx);
        else if (id == "T2_10") v = check_T2_10(g, ctx);
        else if (id == "T2_11") v = check_T2_11(g, ctx);
        else if (id == "B1_1") v = check_B1_1(g, ctx);
        else {
            Hypotheses h(g);
            if (id == "T2_2") v = check_T2_2(g, h, ctx);
            else if (id == "T2_3") v = check_T2_3(g, h, ctx);
            else if (id == "T2_4") v = check_T2_4(g, h, ctx);
            else if (id == "T2_5") v = check_T2_5(g, h, ctx);
            else if (id == "T2_6") v = check_T2_6(g, h, ctx);
            else if (id == "T2_7") v = check_T2_7(g, h, ctx);
            else if (id == "T2_8") v = check_T2_8(g, h, ctx);
            else if (id == "T2_12") v = check_T2_12(g, h, ctx);
            else if (id == "T2_13") v = check_T2_13(g, h, ctx);
            else if (id == "T2_14") v = check_T2_14(g, h, ctx);
            else if (id == "B1_9") v = check_B1_9_impl(g, h, ctx);
            else if (id == "B1_10") v = check_B1_10(g, h, ctx);
            else throw std::invalid_argument("unknown theorem id: " + id);
        }
    } catch (const BudgetStop& b) {
        v = {id, Outcome::kResourceExhausted, "budget tripped at " + b.where,
             ctx.nodes, 0};
    }
    v.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    return v;
}

bool SweepFilter::passes(const Graph& g) const {
    if (max_n && g.vertex_count() > *max_n) return false;
    if (n_mod_3 && g.vertex_count() % 3 != *n_mod_3) return false;
    if (cubic && is_cubic(g) != *cubic) return false;
    if (claw_free && is_claw_free(g) != *claw_free) return false;
    if (min_connectivity && vertex_connectivity(g) < *min_connectivity) return false;
    return true;
}

std::vector<CorpusEntry> load_corpus(const std::string& path,
                                     std::vector<CorpusError>* errors) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            out.push_back({line, parse_graph6(line), lineno});
        } catch (const Graph6Error& e) {
            if (errors) errors->push_back({lineno, e.what()});
        }
    }
    return out;
}

SweepSummary sweep(const std::vector<CorpusEntry>& corpus, const SweepConfig& cfg) {
    const auto& known = all_theorem_ids();
    std::vector<std::string> ids = cfg.theorems.empty() ? known : cfg.theorems;
    for (const auto& id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw std::invalid_argument("unknown theorem id: " + id);

    struct Task {
        std::size_t corpus_index;
        std::string theorem;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < corpus.size(); i++) {
        if (!cfg.filter.passes(corpus[i].graph)) continue;
        for (const auto& id : ids) tasks.push_back({i, id});
    }

    SweepSummary summary;
    summary.entries.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size() || failed.load()) return;
            const auto& task = tasks[t];
            try {
                summary.entries[t] = {
                    task.corpus_index, corpus[task.corpus_index].g6,
                    check_theorem(task.theorem, corpus[task.corpus_index].graph,
                                  cfg.check)};
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(failure_mutex);
                failure = e.what();
                failed.store(true);
                return;
            }
        }
    };
    for (int j = 0; j < jobs; j++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::runtime_error("sweep worker failed: " + failure);

    for (const auto& e : summary.entries) {
        switch (e.verdict.outcome) {
            case Outcome::kHolds: summary.holds++; break;
            case Outcome::kNotApplicable: summary.not_applicable++; break;
            case Outcome::kCounterexample: summary.counterexamples++; break;
            case Outcome::kResourceExhausted: summary.resource_exhausted++; break;
        }
    }
    return summary;
}

std::string format_record(const SweepEntry& e) {
    std::ostringstream os;
    os << "verdict graph=" << e.corpus_index << " g6=" << e.g6
       << " theorem=" << e.verdict.theorem
       << " outcome=" << to_string(e.verdict.outcome)
       << " nodes=" << e.verdict.nodes << " detail=\"" << e.verdict.detail << "\"";
    return os.str();
}

std::string format_summary(const SweepSummary& s) {
    std::ostringstream os;
    os << "summary verdicts=" << s.entries.size() << " holds=" << s.holds
       << " not_applicable=" << s.not_applicable
       << " counterexamples=" << s.counterexamples
       << " resource_exhausted=" << s.resource_exhausted;
    return os.str();
}

}  // namespace lampack
