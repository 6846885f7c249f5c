#include "sombor/graph.hpp"

#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace sombor {

std::vector<std::int64_t> Graph::degrees() const {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

bool Graph::is_connected() const {
    if (vertex_count <= 1) return true;
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(vertex_count));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::vector<std::int64_t> stack{0};
    seen[0] = 1;
    std::int64_t reached = 1;
    while (!stack.empty()) {
        const std::int64_t u = stack.back();
        stack.pop_back();
        for (std::int64_t w : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count;
}

namespace {

bool parse_two_ints(const std::string& s, std::int64_t& a, std::int64_t& b) {
    std::istringstream iss(s);
    if (!(iss >> a >> b)) return false;
    std::string rest;
    if (iss >> rest) return false; // trailing junk
    return true;
}

} // namespace

Graph load_edge_list(std::istream& in) {
    Graph g;
    std::optional<std::int64_t> declared_n;
    std::optional<std::int64_t> declared_m;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::int64_t max_id = -1;
    bool any_content_line = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) continue;

        if (line[i] == '#') {
            // A "# n m" header is only recognized before any edge line; every
            // other hash line is a comment.
            if (!any_content_line && !declared_n) {
                std::int64_t n = 0, m = 0;
                if (parse_two_ints(line.substr(i + 1), n, m)) {
                    if (n < 0 || m < 0)
                        throw ParseError("line " + std::to_string(line_no) +
                                             ": negative size in header",
                                         line_no);
                    declared_n = n;
                    declared_m = m;
                }
            }
            continue;
        }

        any_content_line = true;
        std::int64_t u = 0, v = 0;
        if (!parse_two_ints(line.substr(i), u, v))
            throw ParseError("line " + std::to_string(line_no) +
                                 ": expected two vertex ids, got \"" + line + "\"",
                             line_no);
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) +
                                 ": vertex ids must be nonnegative",
                             line_no);
        if (u == v)
            throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                                  std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge " +
                                  std::to_string(u) + " " + std::to_string(v));
        g.edges.emplace_back(u, v);
        if (v > max_id) max_id = v;
    }

    if (declared_n) {
        if (max_id >= *declared_n)
            throw ValidationError("edge endpoint " + std::to_string(max_id) +
                                  " exceeds declared vertex count " + std::to_string(*declared_n));
        g.vertex_count = *declared_n;
    } else {
        g.vertex_count = max_id + 1;
    }
    if (declared_m && *declared_m != static_cast<std::int64_t>(g.edges.size()))
        throw ValidationError("header declares " + std::to_string(*declared_m) +
                              " edges, file contains " + std::to_string(g.edges.size()));
    return g;
}

Graph load_edge_list_text(const std::string& text) {
    std::istringstream iss(text);
    return load_edge_list(iss);
}

DegreePairPartition degree_pair_partition(const Graph& g) {
    DegreePairPartition part;
    const auto deg = g.degrees();
    for (const auto& [u, v] : g.edges) {
        const DegreePair key(deg[static_cast<std::size_t>(u)], deg[static_cast<std::size_t>(v)]);
        part.counts[key] += 1;
    }
    part.total_edges = Rational(g.edges.size());
    part.vertex_count = Rational(g.vertex_count);
    part.claimed_edges = part.total_edges;
    return part;
}

} // namespace sombor
