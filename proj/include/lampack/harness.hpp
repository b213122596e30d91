#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lampack/graph.hpp"

namespace lampack {

enum class Outcome { kNotApplicable, kHolds, kCounterexample, kResourceExhausted };

std::string to_string(Outcome o);

struct TheoremVerdict {
    std::string theorem;
    Outcome outcome = Outcome::kNotApplicable;
    // For kHolds: a short re-validated certificate summary. For
    // kCounterexample: the exact sub-instance parameters that reproduce
    // the failure on this graph.
    std::string detail;
    std::uint64_t nodes = 0;  // total solver nodes spent
    double millis = 0;
};

struct CheckOptions {
    std::uint64_t node_budget;
    // Cap on universally-quantified sub-instance sweeps. 0 = automatic:
    // exhaustive for n <= 15, sampled at 20000 above that. The sampling
    // seed is recorded in the verdict detail.
    std::size_t universal_cap = 0;
    std::uint64_t seed = 0;
    CheckOptions();
};

// Theorem ids: T2_1 .. T2_14 plus the bounds B1_1, B1_9, B1_10.
const std::vector<std::string>& all_theorem_ids();

TheoremVerdict check_theorem(const std::string& id, const Graph& g,
                             const CheckOptions& opt = {});

struct SweepFilter {
    std::optional<int> min_connectivity;
    std::optional<bool> claw_free;
    std::optional<bool> cubic;
    std::optional<int> n_mod_3;
    std::optional<int> max_n;

    bool passes(const Graph& g) const;
};

struct CorpusEntry {
    std::string g6;
    Graph graph;
    std::size_t line = 0;  // 1-based source line, 0 if generated
};

struct CorpusError {
    std::size_t line;
    std::string message;
};

// Reads a graph6 corpus; malformed lines are reported and skipped.
std::vector<CorpusEntry> load_corpus(const std::string& path,
                                     std::vector<CorpusError>* errors);

struct SweepConfig {
    std::vector<std::string> theorems;  // empty = all
    SweepFilter filter;
    CheckOptions check;
    int jobs = 1;
};

struct SweepEntry {
    std::size_t corpus_index;
    std::string g6;
    TheoremVerdict verdict;
};

struct SweepSummary {
    std::vector<SweepEntry> entries;  // deterministic corpus order
    int holds = 0;
    int not_applicable = 0;
    int counterexamples = 0;
    int resource_exhausted = 0;
};

// Fan-out over (graph, theorem) pairs; the verdict stream is merged in
// corpus order regardless of jobs, so output is parallelism-independent.
SweepSummary sweep(const std::vector<CorpusEntry>& corpus, const SweepConfig& cfg);

// One self-describing record line per verdict (no timing, so streams
// are byte-stable across runs).
std::string format_record(const SweepEntry& e);
std::string format_summary(const SweepSummary& s);

}  // namespace lampack
