#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "minorls/graph.hpp"

namespace minorls {

// Deterministic test-instance families. grid and subgrid-random are planar
// by construction, hence K5-minor-free.
struct GraphSpec {
    enum class Family { path, cycle, grid, subgrid_random, complete, star };

    Family family = Family::path;
    int length = 1;        // path/cycle/complete vertex count; star leaf count
    int rows = 1, cols = 1;
    double delete_prob = 0.0;  // subgrid-random only
    std::uint64_t seed = 0;    // subgrid-random only

    static GraphSpec path(int n);
    static GraphSpec cycle(int n);
    static GraphSpec grid(int rows, int cols);
    static GraphSpec subgrid_random(int rows, int cols, double p, std::uint64_t seed);
    static GraphSpec complete(int n);
    static GraphSpec star(int leaves);

    // One-line form used by corpus files, e.g. "grid 4 4",
    // "subgrid-random 4 5 0.3 7", "path 9".
    static GraphSpec parse(std::string_view line);
    std::string to_string() const;
};

// Deterministic function of the spec, including the seed. Grid ids are
// row-major: (r, c) -> r*cols + c. subgrid-random scans grid edges in
// row-major vertex order (right edge, then down edge) and deletes each
// independently with probability delete_prob under splitmix64(seed).
// Deleting edges never removes vertices; isolated vertices are kept.
Graph generate(const GraphSpec& spec);

// splitmix64; one stream per generator invocation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace minorls
