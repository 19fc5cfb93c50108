#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorls/graph.hpp"

namespace minorls {

enum class ProblemKind { independent_set, vertex_cover, dominating_set };

ProblemKind parse_problem(std::string_view name);  // "is" | "vc" | "ds"
std::string problem_name(ProblemKind kind);

// independent-set grows from ∅; vertex-cover and dominating-set shrink from V.
bool maximizing(ProblemKind kind);
VertexSet initial_solution(ProblemKind kind, const Graph& g);

// Exact feasibility predicates: no edge inside u / every edge touched by u /
// every vertex in u or adjacent to u (so an isolated vertex must be in u).
bool is_feasible(const Graph& g, ProblemKind kind, const VertexSet& u);

struct Swap {
    std::vector<int> removed;  // U1, taken out of the solution
    std::vector<int> added;    // V1, brought in from outside
};

// First improving swap under the canonical enumeration order, or nullopt at
// a local optimum.
//
// Canonical order: the larger side of the exchange (added set when
// maximizing, removed set when minimizing) is enumerated by size 1..r, and
// within a size lexicographically by sorted ids; for each such set, the
// smaller partner side by size then lexicographic order. The shape
// constraints are |U1| < |V1| <= r when maximizing and |V1| < |U1| <= r when
// minimizing, so every returned swap strictly improves the objective.
//
// The search prunes, but only where no feasible partner can exist (e.g. a
// non-independent candidate V1 for independent-set), so the returned swap is
// exactly the first one the unpruned order would find.
std::optional<Swap> find_improving_swap(const Graph& g, ProblemKind kind, const VertexSet& u,
                                        int r);

struct TraceStep {
    std::vector<int> removed;
    std::vector<int> added;
    int objective_after = 0;
};

struct SearchTrace {
    std::vector<TraceStep> steps;
    int iterations = 0;
    std::string termination;  // always "local-optimum"
};

struct SearchResult {
    VertexSet solution;
    SearchTrace trace;
};

// Repeats find_improving_swap from the problem's initial solution until no
// improving swap remains. The result is feasible and r-locally optimal.
SearchResult local_search(const Graph& g, ProblemKind kind, int r);

// Independent unpruned check: enumerates every (U1, V1) within the shape
// constraints and tests feasibility directly. Deliberately shares no
// enumeration or pruning code with find_improving_swap.
bool verify_local_optimality(const Graph& g, ProblemKind kind, const VertexSet& u, int r);

// Exchange radius from the target approximation gap: ceil(C_h / eps^2) with
// C_h = 144^2 h^3 for independent-set and 4 * 144^2 h^3 for the others.
// Impractically large for real eps; provided for completeness, while r is
// the primary knob.
long long eps_to_r(double eps, int h, ProblemKind kind);

}  // namespace minorls
