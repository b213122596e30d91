#include "lampack/graph6.hpp"

#include <fstream>

namespace lampack {

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error("empty graph6 record", 0);
    if (line[0] == '~')
        throw Graph6Error("long-form graph6 not supported (n > 62)", 0);
    int c0 = static_cast<unsigned char>(line[0]);
    if (c0 < 63 || c0 > 126)
        throw Graph6Error("header character out of range", 0);
    int n = c0 - 63;
    std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() < 1 + need)
        throw Graph6Error("truncated bit field", line.size());
    if (line.size() > 1 + need)
        throw Graph6Error("trailing characters after record", 1 + need);

    std::vector<Edge> edges;
    std::size_t pos = 1;
    int acc = 0, bits = 0;
    for (int v = 1; v < n; v++) {
        for (int u = 0; u < v; u++) {
            if (bits == 0) {
                int c = static_cast<unsigned char>(line[pos]);
                if (c < 63 || c > 126)
                    throw Graph6Error("data character out of range", pos);
                acc = c - 63;
                bits = 6;
                pos++;
            }
            bits--;
            if ((acc >> bits) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero for a canonical record.
    if (bits > 0 && (acc & ((1 << bits) - 1)) != 0)
        throw Graph6Error("nonzero padding bits", pos - 1);
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph too large for short-form graph6");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, bits = 0;
    for (int v = 1; v < n; v++) {
        for (int u = 0; u < v; u++) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                                     e.what());
        }
    }
    return out;
}

}  // namespace lampack
