#include "minorls/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace minorls {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.adj_mask_.assign(static_cast<std::size_t>(n), Bitset(n));
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
        g.adj_mask_[static_cast<std::size_t>(u)].set(v);
        g.adj_mask_[static_cast<std::size_t>(v)].set(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool saw_content = false;
    bool have_header = false;
    long long header_n = 0, header_m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    long long max_id = -1;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (!saw_content && toks[0] == "p") {
            saw_content = true;
            if (toks.size() != 3 || !parse_int(toks[1], header_n) || !parse_int(toks[2], header_m) ||
                header_n < 0 || header_m < 0)
                throw ParseError(lineno, "malformed header, expected `p <n> <m>`");
            have_header = true;
            continue;
        }
        saw_content = true;

        long long u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError(lineno, "malformed edge line, expected two vertex ids");
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (have_header && (u >= header_n || v >= header_n))
            throw ParseError(lineno, "vertex id exceeds declared count " + std::to_string(header_n));
        if (u > v) std::swap(u, v);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        edge_lines.push_back(lineno);
        max_id = std::max(max_id, v);
    }

    // Duplicate detection reports the later of the two offending lines.
    {
        std::vector<std::size_t> order(edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (edges[order[i]] == edges[order[i - 1]]) {
                int at = std::max(edge_lines[order[i]], edge_lines[order[i - 1]]);
                throw ParseError(at, "duplicate edge (" + std::to_string(edges[order[i]].first) +
                                         ", " + std::to_string(edges[order[i]].second) + ")");
            }
        }
    }

    if (have_header && static_cast<long long>(edges.size()) != header_m)
        throw ParseError(lineno, "header declares " + std::to_string(header_m) + " edges, found " +
                                     std::to_string(edges.size()));

    int n = have_header ? static_cast<int>(header_n) : static_cast<int>(max_id + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

void serialize_graph(const Graph& g, std::ostream& out) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.size() != g.vertex_count())
        throw std::invalid_argument("vertex set capacity does not match graph");
    Subgraph out;
    out.to_parent = s.to_vector();
    out.to_sub.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.to_sub[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int su = out.to_sub[static_cast<std::size_t>(u)];
        int sv = out.to_sub[static_cast<std::size_t>(v)];
        if (su >= 0 && sv >= 0) edges.emplace_back(su, sv);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), std::move(edges));
    return out;
}

Contraction contract_edges(const Graph& g, const std::vector<std::pair<int, int>>& assignment) {
    const int n = g.vertex_count();
    std::vector<int> survivor_of(static_cast<std::size_t>(n), -1);
    Bitset contracted(n);
    for (auto [c, s] : assignment) {
        if (!g.has_edge(c, s))
            throw std::invalid_argument("assignment pair (" + std::to_string(c) + ", " +
                                        std::to_string(s) + ") is not an edge");
        if (contracted.test(c))
            throw std::invalid_argument("vertex " + std::to_string(c) + " contracted twice");
        contracted.set(c);
        survivor_of[static_cast<std::size_t>(c)] = s;
    }
    for (auto [c, s] : assignment) {
        (void)c;
        if (contracted.test(s))
            throw std::invalid_argument("survivor " + std::to_string(s) + " is also contracted");
    }

    Contraction out;
    out.to_new.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (!contracted.test(v)) {
            out.to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.to_parent.size());
            out.to_parent.push_back(v);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int nu = out.to_new[static_cast<std::size_t>(u)];
        int nv = out.to_new[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.emplace_back(std::min(nu, nv), std::max(nu, nv));
    }
    for (auto [c, s] : assignment) {
        int ns = out.to_new[static_cast<std::size_t>(s)];
        for (int x : g.neighbors(c)) {
            int nx = out.to_new[static_cast<std::size_t>(x)];
            if (nx < 0 || nx == ns) continue;
            edges.emplace_back(std::min(ns, nx), std::max(ns, nx));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), std::move(edges));
    return out;
}

std::vector<int> parse_vertex_list(std::istream& in) {
    std::vector<int> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            long long v;
            if (!parse_int(tok, v) || v < 0)
                throw ParseError(lineno, "malformed vertex id `" + tok + "`");
            ids.push_back(static_cast<int>(v));
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::vector<int> parse_vertex_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_vertex_list(in);
}

}  // namespace minorls
