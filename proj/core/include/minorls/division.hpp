#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorls/graph.hpp"
#include "minorls/separator.hpp"

namespace minorls {

// A collection of pieces covering every vertex and edge of a graph, where
// each interior vertex has all its neighbors inside its piece. Boundaries
// and interiors are derived on construction:
//   boundary(i) = piece(i) ∩ (union of the other pieces)
//   interior(i) = piece(i) \ boundary(i)
class Division {
public:
    // Deduplicates identical pieces and sorts them canonically
    // (smallest member, then size, then lexicographic).
    static Division over(int n, std::vector<std::vector<int>> pieces);

    int vertex_count() const { return n_; }
    int piece_count() const { return static_cast<int>(pieces_.size()); }
    const std::vector<std::vector<int>>& pieces() const { return pieces_; }
    const std::vector<int>& piece(int i) const { return pieces_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& boundary(int i) const { return boundaries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& interior(int i) const { return interiors_[static_cast<std::size_t>(i)]; }

    long long boundary_sum() const { return boundary_sum_; }

    // beta = (sum of piece sizes) - n; counts boundary duplication.
    long long beta() const;

    int max_piece() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> pieces_;
    std::vector<std::vector<int>> boundaries_;
    std::vector<std::vector<int>> interiors_;
    long long boundary_sum_ = 0;
};

struct DivisionStats {
    int r = 0;
    int max_piece = 0;
    long long boundary_sum = 0;
    long long beta_observed = 0;
    std::vector<int> separator_sizes;
    bool all_size_certified = true;
    // Every split left both children with at least a third of the parent.
    bool all_splits_balanced = true;
};

struct DivisionBuild {
    Division division;
    DivisionStats stats;
};

// Raised when a separator fails to shrink the piece it was asked to split
// (both children as large as the parent). Carries the state reached so far.
class DivisionBuildError : public std::runtime_error {
public:
    DivisionBuildError(const std::string& what, std::vector<std::vector<int>> partial)
        : std::runtime_error(what), partial_pieces(std::move(partial)) {}

    std::vector<std::vector<int>> partial_pieces;
};

// Recursive splitting: start from {V}, and while some piece exceeds r
// vertices, replace the largest such piece (ties by smallest member) with
// A∪X and B∪X from a separator of its induced subgraph. Pieces never grow,
// so termination is guaranteed; a non-shrinking split raises
// DivisionBuildError instead of looping.
DivisionBuild build_division(const Graph& g, int r, const SeparatorStrategy& strategy, int h);

struct DivisionReport {
    bool vertex_cover_ok = false;
    bool edge_cover_ok = false;
    bool interior_closure_ok = false;

    bool pass() const { return vertex_cover_ok && edge_cover_ok && interior_closure_ok; }
};

DivisionReport verify_division(const Graph& g, const Division& d);

// Closed-form bound on beta(m) for piece budget r and minor order h:
// (10 h^{3/2}) m / sqrt(r/3) - (10 h^{3/2}) sqrt(m) when m >= r/3, else 0.
double beta_bound(long long m, int r, int h);

struct BoundCheck {
    double lhs = 0.0, rhs = 0.0;
    bool holds = false;
};

struct LemmaBoundsReport {
    bool precondition_met = false;  // 36 h^3 <= r <= n
    bool all_size_certified = false;
    bool all_splits_balanced = false;
    BoundCheck boundary_vs_lemma;   // sum |∂S_i| <= 36 h^{3/2} n / sqrt(r)
    BoundCheck boundary_vs_beta;    // sum |∂S_i| <= 2 * beta  (exact counting identity)
    BoundCheck beta_vs_closed_form; // beta <= beta_bound(n, r, h)
};

LemmaBoundsReport check_lemma_bounds(const DivisionStats& stats, int n, int h);

// One line per piece, sorted ids space-separated; `#` comments allowed.
void serialize_division(const Division& d, std::ostream& out);
std::string serialize_division(const Division& d);
Division parse_division(int n, std::istream& in);
Division parse_division(int n, std::string_view text);

}  // namespace minorls
