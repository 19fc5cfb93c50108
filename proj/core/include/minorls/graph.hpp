#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minorls/bitset.hpp"

namespace minorls {

// A subset of a graph's vertices; capacity equals the graph's vertex count.
using VertexSet = Bitset;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph over dense vertex ids 0..n-1.
// Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates simplicity: throws std::invalid_argument on self-loops,
    // duplicate edges, or endpoint ids outside [0, n).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges normalized as (min,max), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const Bitset& neighbor_mask(int v) const { return adj_mask_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
        return adj_mask_[static_cast<std::size_t>(u)].test(v);
    }

    // Connected components, each as a sorted id list; ordered by smallest member.
    std::vector<std::vector<int>> components() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> adj_mask_;
};

// Edge-list text format:
//   - optional first content line `p <n> <m>` declaring vertex and edge counts
//   - one edge per line: two whitespace-separated decimal ids
//   - lines starting with `#` are comments, blank lines are ignored
// With a header, every id must be < n and the edge count must match m.
// Without one, the vertex count is max id + 1.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Emits the `p <n> <m>` header, then edges sorted by (min id, max id).
void serialize_graph(const Graph& g, std::ostream& out);
std::string serialize_graph(const Graph& g);

struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;  // sub id -> original id
    std::vector<int> to_sub;     // original id -> sub id, -1 if absent
};

// G[s]: the subgraph induced by s, with id maps in both directions.
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct Contraction {
    Graph graph;
    std::vector<int> to_parent;  // new id -> original id (survivors only)
    std::vector<int> to_new;     // original id -> new id, -1 for contracted vertices
};

// Contracts each (contracted, survivor) pair, which must be an edge of g.
// Survivors keep their relative order and are re-indexed densely. Each
// contracted vertex c donates an edge {survivor, x} for every *surviving*
// neighbor x of c. The result is simplified: parallel edges merged,
// self-loops dropped.
Contraction contract_edges(const Graph& g, const std::vector<std::pair<int, int>>& assignment);

// Whitespace-separated vertex ids; `#` comments and blank lines ignored.
std::vector<int> parse_vertex_list(std::istream& in);
std::vector<int> parse_vertex_list(std::string_view text);

}  // namespace minorls
