#pragma once

#include <string>
#include <string_view>

#include "minorls/graph.hpp"

namespace minorls {

// Balanced vertex separator: (a, b, x) partition the graph's vertices,
// no edge joins a to b, and |a|, |b| <= ceil(2n/3). size_certified records
// whether |x| <= h^{3/2} * sqrt(n) held for the h it was computed with.
struct SeparatorResult {
    VertexSet a, b, x;
    bool size_certified = false;
};

enum class SeparatorKind { bfs_layer, greedy_refine };

struct SeparatorStrategy {
    SeparatorKind kind = SeparatorKind::bfs_layer;
    // greedy-refine: maximum refinement sweeps over X; 0 means run to fixpoint.
    int refine_passes = 0;

    static SeparatorStrategy parse(std::string_view name);
    std::string to_string() const;
};

// Heuristic separator. The structural invariants (partition, no cross edge,
// balance) always hold; the size bound is recorded, not guaranteed.
//
// bfs-layer packs connected components directly when none exceeds 2n/3;
// otherwise it BFS-layers the oversized component from its smallest id and
// removes the best layer whose removal leaves every group within 2n/3
// (such a layer always exists), preferring layers that produce at least two
// groups, then fewer removed vertices, then a smaller largest group.
// greedy-refine then moves vertices from X into A or B while all invariants
// are preserved.
SeparatorResult find_separator(const Graph& g, const SeparatorStrategy& strategy, int h);

struct SeparatorReport {
    bool partition_ok = false;
    bool no_cross_edge_ok = false;
    bool balance_ok = false;   // both sides <= ceil(2n/3)
    bool size_ok = false;      // |x| <= h^{3/2} sqrt(n), real-valued comparison
    int a_size = 0, b_size = 0, x_size = 0;
    double size_bound = 0.0;

    bool pass() const { return partition_ok && no_cross_edge_ok && balance_ok; }
};

SeparatorReport verify_separator(const Graph& g, const SeparatorResult& s, int h);

}  // namespace minorls
