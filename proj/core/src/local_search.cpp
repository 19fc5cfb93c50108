#include "minorls/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minorls {

ProblemKind parse_problem(std::string_view name) {
    if (name == "is" || name == "independent-set") return ProblemKind::independent_set;
    if (name == "vc" || name == "vertex-cover") return ProblemKind::vertex_cover;
    if (name == "ds" || name == "dominating-set") return ProblemKind::dominating_set;
    throw std::invalid_argument("unknown problem `" + std::string(name) + "`");
}

std::string problem_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::independent_set: return "independent-set";
        case ProblemKind::vertex_cover: return "vertex-cover";
        case ProblemKind::dominating_set: return "dominating-set";
    }
    return "?";
}

bool maximizing(ProblemKind kind) { return kind == ProblemKind::independent_set; }

VertexSet initial_solution(ProblemKind kind, const Graph& g) {
    return maximizing(kind) ? VertexSet(g.vertex_count()) : Bitset::full(g.vertex_count());
}

bool is_feasible(const Graph& g, ProblemKind kind, const VertexSet& u) {
    const int n = g.vertex_count();
    if (u.size() != n) throw std::invalid_argument("vertex set capacity does not match graph");
    switch (kind) {
        case ProblemKind::independent_set: {
            bool ok = true;
            u.for_each([&](int v) {
                if (ok && g.neighbor_mask(v).intersects(u)) ok = false;
            });
            return ok;
        }
        case ProblemKind::vertex_cover: {
            for (auto [a, b] : g.edges())
                if (!u.test(a) && !u.test(b)) return false;
            return true;
        }
        case ProblemKind::dominating_set: {
            for (int v = 0; v < n; ++v)
                if (!u.test(v) && !g.neighbor_mask(v).intersects(u)) return false;
            return true;
        }
    }
    return false;
}

namespace {

// Lexicographic DFS over size-k subsets of `cand` whose members pass
// `admit(v, state)` and that keep `extend` happy; the first subset for
// which `accept` returns true stops the walk.
//
// Used by the three pruned enumerations below. The prunes preserve the
// canonical first-hit: they only skip candidates that provably admit no
// feasible partner set.

struct MaxSwapWalk {
    const Graph& g;
    const Bitset& u;
    int target_size = 0;
    std::vector<int>& cand;        // outside vertices, ascending
    std::vector<int>& u_nbrs;      // |N(v) ∩ U| per vertex
    std::vector<int> chosen;
    Bitset chosen_mask;
    Bitset required;               // N(chosen) ∩ U, must stay below target_size
    std::optional<Swap> found;

    MaxSwapWalk(const Graph& g_, const Bitset& u_, std::vector<int>& cand_,
                std::vector<int>& u_nbrs_)
        : g(g_), u(u_), cand(cand_), u_nbrs(u_nbrs_), chosen_mask(g_.vertex_count()),
          required(g_.vertex_count()) {}

    bool run(std::size_t start) {
        if (static_cast<int>(chosen.size()) == target_size) {
            if (required.count() < target_size) {
                found = Swap{required.to_vector(), chosen};
                return true;
            }
            return false;
        }
        int need = target_size - static_cast<int>(chosen.size());
        for (std::size_t i = start; i + static_cast<std::size_t>(need) <= cand.size(); ++i) {
            int v = cand[i];
            if (u_nbrs[static_cast<std::size_t>(v)] >= target_size) continue;
            if (g.neighbor_mask(v).intersects(chosen_mask)) continue;  // V1 must be independent
            Bitset saved = required;
            required |= g.neighbor_mask(v) & u;
            if (required.count() < target_size) {
                chosen.push_back(v);
                chosen_mask.set(v);
                if (run(i + 1)) return true;
                chosen_mask.reset(v);
                chosen.pop_back();
            }
            required = std::move(saved);
        }
        return false;
    }
};

std::optional<Swap> find_swap_maximize(const Graph& g, const Bitset& u, int r) {
    const int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (!u.test(v)) cand.push_back(v);

    std::vector<int> u_nbrs(static_cast<std::size_t>(n), 0);
    for (int v : cand) u_nbrs[static_cast<std::size_t>(v)] = (g.neighbor_mask(v) & u).count();

    for (int s = 1; s <= r && s <= static_cast<int>(cand.size()); ++s) {
        MaxSwapWalk walk(g, u, cand, u_nbrs);
        walk.target_size = s;
        if (walk.run(0)) return walk.found;
    }
    return std::nullopt;
}

struct CoverSwapWalk {
    const Graph& g;
    const Bitset& u;
    const Bitset& outside;
    int target_size = 0;
    std::vector<int>& cand;        // solution vertices, ascending
    std::vector<int>& out_nbrs;    // |N(v) \ U| per vertex
    std::vector<int> chosen;
    Bitset chosen_mask;
    Bitset required;               // N(chosen) \ U, the forced V1
    std::optional<Swap> found;

    CoverSwapWalk(const Graph& g_, const Bitset& u_, const Bitset& outside_,
                  std::vector<int>& cand_, std::vector<int>& out_nbrs_)
        : g(g_), u(u_), outside(outside_), cand(cand_), out_nbrs(out_nbrs_),
          chosen_mask(g_.vertex_count()), required(g_.vertex_count()) {}

    bool run(std::size_t start) {
        if (static_cast<int>(chosen.size()) == target_size) {
            if (required.count() < target_size) {
                found = Swap{chosen, required.to_vector()};
                return true;
            }
            return false;
        }
        int need = target_size - static_cast<int>(chosen.size());
        for (std::size_t i = start; i + static_cast<std::size_t>(need) <= cand.size(); ++i) {
            int v = cand[i];
            if (out_nbrs[static_cast<std::size_t>(v)] >= target_size) continue;
            // An edge inside U1 can never be re-covered, so U1 stays independent.
            if (g.neighbor_mask(v).intersects(chosen_mask)) continue;
            Bitset saved = required;
            required |= g.neighbor_mask(v) & outside;
            if (required.count() < target_size) {
                chosen.push_back(v);
                chosen_mask.set(v);
                if (run(i + 1)) return true;
                chosen_mask.reset(v);
                chosen.pop_back();
            }
            required = std::move(saved);
        }
        return false;
    }
};

std::optional<Swap> find_swap_cover(const Graph& g, const Bitset& u, int r) {
    const int n = g.vertex_count();
    Bitset outside = Bitset::full(n).and_not(u);
    std::vector<int> cand = u.to_vector();

    std::vector<int> out_nbrs(static_cast<std::size_t>(n), 0);
    for (int v : cand) out_nbrs[static_cast<std::size_t>(v)] = (g.neighbor_mask(v) & outside).count();

    for (int s = 1; s <= r && s <= static_cast<int>(cand.size()); ++s) {
        CoverSwapWalk walk(g, u, outside, cand, out_nbrs);
        walk.target_size = s;
        if (walk.run(0)) return walk.found;
    }
    return std::nullopt;
}

struct DominateSwapWalk {
    const Graph& g;
    const Bitset& u;
    const Bitset& outside;
    int target_size = 0;
    std::vector<int>& cand;        // solution vertices, ascending
    std::vector<int> chosen;
    Bitset chosen_mask;
    std::optional<Swap> found;

    DominateSwapWalk(const Graph& g_, const Bitset& u_, const Bitset& outside_,
                     std::vector<int>& cand_)
        : g(g_), u(u_), outside(outside_), cand(cand_), chosen_mask(g_.vertex_count()) {}

    bool dominated_by(int v, const Bitset& d) const {
        return d.test(v) || g.neighbor_mask(v).intersects(d);
    }

    bool leaf() {
        const int n = g.vertex_count();
        Bitset remaining = u.and_not(chosen_mask);

        // Vertices losing their dominator all sit in N[U1].
        std::vector<int> undominated;
        Bitset touched = chosen_mask;
        for (int v : chosen) touched |= g.neighbor_mask(v);
        touched.for_each([&](int v) {
            if (!dominated_by(v, remaining)) undominated.push_back(v);
        });

        if (undominated.empty()) {
            found = Swap{chosen, {}};
            return true;
        }

        // Partner sets of the first feasible size are minimal, so every
        // member dominates some lost vertex; restricting candidates to
        // N[undominated] outside U keeps the lexicographic first hit.
        Bitset partner_pool(n);
        for (int w : undominated) {
            if (outside.test(w)) partner_pool.set(w);
            partner_pool |= g.neighbor_mask(w) & outside;
        }
        std::vector<int> pool = partner_pool.to_vector();

        std::vector<int> pick;
        for (int t = 1; t < target_size; ++t) {
            if (t > static_cast<int>(pool.size())) break;
            pick.clear();
            if (partner_dfs(pool, undominated, t, 0, pick)) {
                found = Swap{chosen, pick};
                return true;
            }
        }
        return false;
    }

    bool partner_dfs(const std::vector<int>& pool, const std::vector<int>& undominated, int t,
                     std::size_t start, std::vector<int>& pick) {
        if (static_cast<int>(pick.size()) == t) {
            Bitset pm = Bitset::of(g.vertex_count(), pick);
            for (int w : undominated)
                if (!dominated_by(w, pm)) return false;
            return true;
        }
        int need = t - static_cast<int>(pick.size());
        for (std::size_t i = start; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
            pick.push_back(pool[i]);
            if (partner_dfs(pool, undominated, t, i + 1, pick)) return true;
            pick.pop_back();
        }
        return false;
    }

    bool run(std::size_t start) {
        if (static_cast<int>(chosen.size()) == target_size) return leaf();
        int need = target_size - static_cast<int>(chosen.size());
        for (std::size_t i = start; i + static_cast<std::size_t>(need) <= cand.size(); ++i) {
            chosen.push_back(cand[i]);
            chosen_mask.set(cand[i]);
            if (run(i + 1)) return true;
            chosen_mask.reset(cand[i]);
            chosen.pop_back();
        }
        return false;
    }
};

std::optional<Swap> find_swap_dominate(const Graph& g, const Bitset& u, int r) {
    const int n = g.vertex_count();
    Bitset outside = Bitset::full(n).and_not(u);
    std::vector<int> cand = u.to_vector();

    for (int s = 1; s <= r && s <= static_cast<int>(cand.size()); ++s) {
        DominateSwapWalk walk(g, u, outside, cand);
        walk.target_size = s;
        if (walk.run(0)) return walk.found;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Swap> find_improving_swap(const Graph& g, ProblemKind kind, const VertexSet& u,
                                        int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (!is_feasible(g, kind, u))
        throw std::invalid_argument("solution is not feasible for " + problem_name(kind));
    switch (kind) {
        case ProblemKind::independent_set: return find_swap_maximize(g, u, r);
        case ProblemKind::vertex_cover: return find_swap_cover(g, u, r);
        case ProblemKind::dominating_set: return find_swap_dominate(g, u, r);
    }
    return std::nullopt;
}

SearchResult local_search(const Graph& g, ProblemKind kind, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    const int n = g.vertex_count();
    VertexSet u = initial_solution(kind, g);
    SearchTrace trace;

    while (auto swap = find_improving_swap(g, kind, u, r)) {
        const int removed = static_cast<int>(swap->removed.size());
        const int added = static_cast<int>(swap->added.size());
        bool shape_ok = maximizing(kind) ? (removed < added && added <= r)
                                         : (added < removed && removed <= r);
        if (!shape_ok) throw std::logic_error("swap violates the exchange shape");

        for (int v : swap->removed) u.reset(v);
        for (int v : swap->added) u.set(v);
        trace.steps.push_back(TraceStep{swap->removed, swap->added, u.count()});
        ++trace.iterations;
        if (trace.iterations > n) throw std::logic_error("swap count exceeded vertex count");
    }
    trace.termination = "local-optimum";
    return SearchResult{std::move(u), std::move(trace)};
}

namespace {

// Plain combination scan used only by the verifier.
template <class F>
bool for_each_combination(const std::vector<int>& items, int k, F&& f) {
    if (k > static_cast<int>(items.size())) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> pick(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i)
            pick[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (f(pick)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                             static_cast<int>(items.size()) - k + i)
            --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

bool verify_local_optimality(const Graph& g, ProblemKind kind, const VertexSet& u, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (!is_feasible(g, kind, u))
        throw std::invalid_argument("solution is not feasible for " + problem_name(kind));

    const int n = g.vertex_count();
    std::vector<int> inside = u.to_vector();
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
        if (!u.test(v)) outside.push_back(v);

    const std::vector<int>& big = maximizing(kind) ? outside : inside;
    const std::vector<int>& small = maximizing(kind) ? inside : outside;

    for (int s = 1; s <= r && s <= static_cast<int>(big.size()); ++s) {
        bool improved = for_each_combination(big, s, [&](const std::vector<int>& big_pick) {
            for (int t = 0; t < s && t <= static_cast<int>(small.size()); ++t) {
                bool hit = for_each_combination(small, t, [&](const std::vector<int>& small_pick) {
                    VertexSet candidate = u;
                    const auto& removed = maximizing(kind) ? small_pick : big_pick;
                    const auto& added = maximizing(kind) ? big_pick : small_pick;
                    for (int v : removed) candidate.reset(v);
                    for (int v : added) candidate.set(v);
                    return is_feasible(g, kind, candidate);
                });
                if (hit) return true;
                if (t == 0 && small.empty()) break;
            }
            return false;
        });
        if (improved) return false;
    }
    return true;
}

long long eps_to_r(double eps, int h, ProblemKind kind) {
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must be in (0, 1]");
    if (h < 2) throw std::invalid_argument("h must be >= 2");
    double c = 144.0 * 144.0 * std::pow(h, 3);
    if (kind != ProblemKind::independent_set) c *= 4.0;
    return static_cast<long long>(std::ceil(c / (eps * eps)));
}

}  // namespace minorls
