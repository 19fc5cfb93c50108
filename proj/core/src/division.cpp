#include "minorls/division.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace minorls {

Division Division::over(int n, std::vector<std::vector<int>> pieces) {
    for (auto& p : pieces) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        if (!p.empty() && (p.front() < 0 || p.back() >= n))
            throw std::invalid_argument("piece member out of range");
        if (p.empty()) throw std::invalid_argument("empty piece");
    }
    std::sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) {
        if (x.front() != y.front()) return x.front() < y.front();
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

    Division d;
    d.n_ = n;
    d.pieces_ = std::move(pieces);

    std::vector<int> multiplicity(static_cast<std::size_t>(n), 0);
    for (const auto& p : d.pieces_)
        for (int v : p) ++multiplicity[static_cast<std::size_t>(v)];

    d.boundaries_.reserve(d.pieces_.size());
    d.interiors_.reserve(d.pieces_.size());
    for (const auto& p : d.pieces_) {
        std::vector<int> bd, in;
        for (int v : p) {
            if (multiplicity[static_cast<std::size_t>(v)] > 1)
                bd.push_back(v);
            else
                in.push_back(v);
        }
        d.boundary_sum_ += static_cast<long long>(bd.size());
        d.boundaries_.push_back(std::move(bd));
        d.interiors_.push_back(std::move(in));
    }
    return d;
}

long long Division::beta() const {
    long long total = 0;
    for (const auto& p : pieces_) total += static_cast<long long>(p.size());
    return total - n_;
}

int Division::max_piece() const {
    std::size_t m = 0;
    for (const auto& p : pieces_) m = std::max(m, p.size());
    return static_cast<int>(m);
}

DivisionBuild build_division(const Graph& g, int r, const SeparatorStrategy& strategy, int h) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (g.vertex_count() < 1) throw std::invalid_argument("division requires a nonempty graph");

    const int n = g.vertex_count();
    DivisionStats stats;
    stats.r = r;

    std::vector<std::vector<int>> work;
    std::vector<std::vector<int>> done;
    {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        work.push_back(std::move(all));
    }

    auto all_pieces = [&] {
        std::vector<std::vector<int>> out = done;
        out.insert(out.end(), work.begin(), work.end());
        return out;
    };

    while (!work.empty()) {
        // Largest piece first, ties by smallest member.
        std::size_t pick = 0;
        for (std::size_t i = 1; i < work.size(); ++i) {
            if (work[i].size() > work[pick].size() ||
                (work[i].size() == work[pick].size() && work[i].front() < work[pick].front()))
                pick = i;
        }
        std::vector<int> piece = std::move(work[pick]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));

        if (static_cast<int>(piece.size()) <= r) {
            done.push_back(std::move(piece));
            continue;
        }

        auto sub = induced_subgraph(g, Bitset::of(n, piece));
        SeparatorResult sep = find_separator(sub.graph, strategy, h);

        const long long m = static_cast<long long>(piece.size());
        stats.separator_sizes.push_back(sep.x.count());
        stats.all_size_certified = stats.all_size_certified && sep.size_certified;

        auto lift = [&](const Bitset& side) {
            std::vector<int> out;
            (side | sep.x).for_each([&](int v) { out.push_back(sub.to_parent[static_cast<std::size_t>(v)]); });
            std::sort(out.begin(), out.end());
            return out;
        };
        std::vector<int> p1 = lift(sep.a);
        std::vector<int> p2 = lift(sep.b);

        if (static_cast<long long>(p1.size()) >= m || static_cast<long long>(p2.size()) >= m) {
            work.push_back(std::move(piece));
            throw DivisionBuildError(
                "separator failed to shrink a piece of " + std::to_string(m) +
                    " vertices (strategy " + strategy.to_string() + ")",
                all_pieces());
        }
        stats.all_splits_balanced = stats.all_splits_balanced &&
                                    3 * static_cast<long long>(p1.size()) >= m &&
                                    3 * static_cast<long long>(p2.size()) >= m;
        work.push_back(std::move(p1));
        work.push_back(std::move(p2));
    }

    DivisionBuild out{Division::over(n, std::move(done)), std::move(stats)};
    out.stats.max_piece = out.division.max_piece();
    out.stats.boundary_sum = out.division.boundary_sum();
    out.stats.beta_observed = out.division.beta();
    return out;
}

DivisionReport verify_division(const Graph& g, const Division& d) {
    const int n = g.vertex_count();
    DivisionReport rep;

    Bitset covered(n);
    for (const auto& p : d.pieces())
        for (int v : p) covered.set(v);
    rep.vertex_cover_ok = covered == Bitset::full(n);

    rep.edge_cover_ok = true;
    {
        std::vector<Bitset> piece_masks;
        piece_masks.reserve(static_cast<std::size_t>(d.piece_count()));
        for (const auto& p : d.pieces()) piece_masks.push_back(Bitset::of(n, p));
        for (auto [u, v] : g.edges()) {
            bool inside = false;
            for (const auto& m : piece_masks) {
                if (m.test(u) && m.test(v)) {
                    inside = true;
                    break;
                }
            }
            if (!inside) {
                rep.edge_cover_ok = false;
                break;
            }
        }
    }

    rep.interior_closure_ok = true;
    for (int i = 0; i < d.piece_count() && rep.interior_closure_ok; ++i) {
        Bitset mask = Bitset::of(n, d.piece(i));
        for (int v : d.interior(i)) {
            if (!g.neighbor_mask(v).is_subset_of(mask)) {
                rep.interior_closure_ok = false;
                break;
            }
        }
    }
    return rep;
}

double beta_bound(long long m, int r, int h) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (h < 2) throw std::invalid_argument("h must be >= 2");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (3.0 * static_cast<double>(m) < static_cast<double>(r)) return 0.0;
    double c = 10.0 * std::pow(h, 1.5);
    return c * static_cast<double>(m) / std::sqrt(static_cast<double>(r) / 3.0) -
           c * std::sqrt(static_cast<double>(m));
}

LemmaBoundsReport check_lemma_bounds(const DivisionStats& stats, int n, int h) {
    LemmaBoundsReport rep;
    rep.precondition_met = 36.0 * std::pow(h, 3) <= stats.r && stats.r <= n;
    rep.all_size_certified = stats.all_size_certified;
    rep.all_splits_balanced = stats.all_splits_balanced;

    rep.boundary_vs_lemma.lhs = static_cast<double>(stats.boundary_sum);
    rep.boundary_vs_lemma.rhs = 36.0 * std::pow(h, 1.5) * n / std::sqrt(static_cast<double>(stats.r));
    rep.boundary_vs_lemma.holds = rep.boundary_vs_lemma.lhs <= rep.boundary_vs_lemma.rhs;

    rep.boundary_vs_beta.lhs = static_cast<double>(stats.boundary_sum);
    rep.boundary_vs_beta.rhs = 2.0 * static_cast<double>(stats.beta_observed);
    rep.boundary_vs_beta.holds = stats.boundary_sum <= 2 * stats.beta_observed;

    rep.beta_vs_closed_form.lhs = static_cast<double>(stats.beta_observed);
    rep.beta_vs_closed_form.rhs = beta_bound(n, stats.r, h);
    rep.beta_vs_closed_form.holds = rep.beta_vs_closed_form.lhs <= rep.beta_vs_closed_form.rhs;
    return rep;
}

void serialize_division(const Division& d, std::ostream& out) {
    for (const auto& p : d.pieces()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << p[i];
        }
        out << '\n';
    }
}

std::string serialize_division(const Division& d) {
    std::ostringstream out;
    serialize_division(d, out);
    return out.str();
}

Division parse_division(int n, std::istream& in) {
    std::vector<std::vector<int>> pieces;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<int> piece;
        std::string tok;
        bool comment = false;
        while (ls >> tok) {
            if (tok[0] == '#') {
                comment = true;
                break;
            }
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size() || v < 0) throw std::invalid_argument("");
                piece.push_back(v);
            } catch (...) {
                throw ParseError(lineno, "malformed vertex id `" + tok + "`");
            }
        }
        (void)comment;
        if (!piece.empty()) pieces.push_back(std::move(piece));
    }
    return Division::over(n, std::move(pieces));
}

Division parse_division(int n, std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_division(n, in);
}

}  // namespace minorls
