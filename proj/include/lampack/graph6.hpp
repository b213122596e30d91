#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lampack/graph.hpp"

namespace lampack {

struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (byte " + std::to_string(offset_) + ")"),
          offset(offset_) {}
};

// Short-form graph6 (n <= 62), bit-exact per the published format.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// One record per line; blank lines and an optional ">>graph6<<" header
// are skipped. Malformed lines throw.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace lampack
