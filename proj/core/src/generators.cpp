#include "minorls/generators.hpp"

#include <sstream>
#include <stdexcept>

namespace minorls {

GraphSpec GraphSpec::path(int n) {
    GraphSpec s;
    s.family = Family::path;
    s.length = n;
    return s;
}

GraphSpec GraphSpec::cycle(int n) {
    GraphSpec s;
    s.family = Family::cycle;
    s.length = n;
    return s;
}

GraphSpec GraphSpec::grid(int rows, int cols) {
    GraphSpec s;
    s.family = Family::grid;
    s.rows = rows;
    s.cols = cols;
    return s;
}

GraphSpec GraphSpec::subgrid_random(int rows, int cols, double p, std::uint64_t seed) {
    GraphSpec s;
    s.family = Family::subgrid_random;
    s.rows = rows;
    s.cols = cols;
    s.delete_prob = p;
    s.seed = seed;
    return s;
}

GraphSpec GraphSpec::complete(int n) {
    GraphSpec s;
    s.family = Family::complete;
    s.length = n;
    return s;
}

GraphSpec GraphSpec::star(int leaves) {
    GraphSpec s;
    s.family = Family::star;
    s.length = leaves;
    return s;
}

namespace {

void validate(const GraphSpec& s) {
    using F = GraphSpec::Family;
    switch (s.family) {
        case F::path:
        case F::complete:
        case F::star:
            if (s.length < 1) throw std::invalid_argument("family parameter must be >= 1");
            break;
        case F::cycle:
            if (s.length < 3) throw std::invalid_argument("cycle length must be >= 3");
            break;
        case F::grid:
        case F::subgrid_random:
            if (s.rows < 1 || s.cols < 1)
                throw std::invalid_argument("grid dimensions must be >= 1");
            if (s.family == F::subgrid_random &&
                !(s.delete_prob >= 0.0 && s.delete_prob <= 1.0))
                throw std::invalid_argument("deletion probability must be in [0, 1]");
            break;
    }
}

Graph make_grid(int rows, int cols, double p, std::uint64_t seed, bool randomized) {
    SplitMix64 rng(seed);
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                bool drop = randomized && rng.next_unit() < p;
                if (!drop) edges.emplace_back(id(r, c), id(r, c + 1));
            }
            if (r + 1 < rows) {
                bool drop = randomized && rng.next_unit() < p;
                if (!drop) edges.emplace_back(id(r, c), id(r + 1, c));
            }
        }
    }
    return Graph::from_edges(rows * cols, std::move(edges));
}

}  // namespace

Graph generate(const GraphSpec& spec) {
    validate(spec);
    using F = GraphSpec::Family;
    switch (spec.family) {
        case F::path: {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < spec.length; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edges(spec.length, std::move(edges));
        }
        case F::cycle: {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < spec.length; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, spec.length - 1);
            return Graph::from_edges(spec.length, std::move(edges));
        }
        case F::grid:
            return make_grid(spec.rows, spec.cols, 0.0, 0, false);
        case F::subgrid_random:
            return make_grid(spec.rows, spec.cols, spec.delete_prob, spec.seed, true);
        case F::complete: {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < spec.length; ++u)
                for (int v = u + 1; v < spec.length; ++v) edges.emplace_back(u, v);
            return Graph::from_edges(spec.length, std::move(edges));
        }
        case F::star: {
            std::vector<std::pair<int, int>> edges;
            for (int l = 1; l <= spec.length; ++l) edges.emplace_back(0, l);
            return Graph::from_edges(spec.length + 1, std::move(edges));
        }
    }
    throw std::logic_error("unreachable");
}

GraphSpec GraphSpec::parse(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string family;
    if (!(in >> family)) throw std::invalid_argument("empty graph spec");

    auto want_int = [&](const char* what) {
        long long v;
        if (!(in >> v)) throw std::invalid_argument(std::string("graph spec missing ") + what);
        return static_cast<int>(v);
    };

    GraphSpec s;
    if (family == "path") {
        s = path(want_int("length"));
    } else if (family == "cycle") {
        s = cycle(want_int("length"));
    } else if (family == "grid") {
        int r = want_int("rows");
        s = grid(r, want_int("cols"));
    } else if (family == "subgrid-random") {
        int r = want_int("rows");
        int c = want_int("cols");
        double p;
        if (!(in >> p)) throw std::invalid_argument("graph spec missing deletion probability");
        long long seed;
        if (!(in >> seed)) throw std::invalid_argument("graph spec missing seed");
        s = subgrid_random(r, c, p, static_cast<std::uint64_t>(seed));
    } else if (family == "complete") {
        s = complete(want_int("size"));
    } else if (family == "star") {
        s = star(want_int("leaves"));
    } else {
        throw std::invalid_argument("unknown graph family `" + family + "`");
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("trailing tokens in graph spec");
    validate(s);
    return s;
}

std::string GraphSpec::to_string() const {
    std::ostringstream out;
    using F = Family;
    switch (family) {
        case F::path: out << "path " << length; break;
        case F::cycle: out << "cycle " << length; break;
        case F::grid: out << "grid " << rows << ' ' << cols; break;
        case F::subgrid_random:
            out << "subgrid-random " << rows << ' ' << cols << ' ' << delete_prob << ' ' << seed;
            break;
        case F::complete: out << "complete " << length; break;
        case F::star: out << "star " << length; break;
    }
    return out.str();
}

}  // namespace minorls
