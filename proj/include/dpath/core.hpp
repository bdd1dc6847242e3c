#pragma once

#include <vector>

#include "dpath/errors.hpp"

namespace dpath {

// Disjoint union of paths. Vertices are numbered 1..n consecutively,
// path by path; distance is finite only within a single path.
struct PathTopology {
    std::vector<int> lengths;  // vertex count per path, each >= 1
    std::vector<int> starts;   // first vertex (1-based) of each path
    int n = 0;

    PathTopology() = default;
    explicit PathTopology(std::vector<int> lens);

    int num_paths() const { return static_cast<int>(lengths.size()); }
    bool single_path() const { return lengths.size() == 1; }

    // 0-based index of the path containing vertex v (1 <= v <= n).
    int path_of(int v) const;

    bool operator==(const PathTopology& o) const { return lengths == o.lengths; }
};

// Total color assignment; colors[v-1] is the color of vertex v.
struct Coloring {
    std::vector<int> colors;

    bool operator==(const Coloring& o) const { return colors == o.colors; }
};

// Distance Precoloring Extension with Demands. Colors are 1..num_colors,
// precoloring[v-1] == 0 marks a free vertex, demands[c-1] is the exact
// number of vertices that must be *newly* colored with c.
struct DPEDInstance {
    PathTopology topology;
    int num_colors = 0;
    int d = 0;
    std::vector<int> precoloring;
    std::vector<int> demands;

    int num_precolored() const;
    int num_free() const { return topology.n - num_precolored(); }
    // True iff the demands sum to exactly the number of free vertices.
    bool is_demand_consistent() const;

    bool operator==(const DPEDInstance& o) const {
        return topology == o.topology && num_colors == o.num_colors && d == o.d &&
               precoloring == o.precoloring && demands == o.demands;
    }
};

// Distance Precoloring Extension: same data, no demand function.
struct DpeInstance {
    PathTopology topology;
    int num_colors = 0;
    int d = 0;
    std::vector<int> precoloring;

    bool operator==(const DpeInstance& o) const {
        return topology == o.topology && num_colors == o.num_colors && d == o.d &&
               precoloring == o.precoloring;
    }
};

// List Coloring with Demands. Lists are sorted, non-empty subsets of
// 1..num_colors. An empty demand vector means "no demands" (the DLC
// variant); d defaults to 1 for plain LCD.
struct LCDInstance {
    PathTopology topology;
    int num_colors = 0;
    int d = 1;
    std::vector<std::vector<int>> lists;
    std::vector<int> demands;  // empty == no demands

    bool has_demands() const { return !demands.empty(); }

    bool operator==(const LCDInstance& o) const {
        return topology == o.topology && num_colors == o.num_colors && d == o.d &&
               lists == o.lists && demands == o.demands;
    }
};

// Throw SemanticError if the instance violates its type invariants.
void validate(const DPEDInstance& inst);
void validate(const DpeInstance& inst);
void validate(const LCDInstance& inst);

// True iff no two equal-colored vertices lie at path distance <= d.
// d = 0 is always valid.
bool verify_d_distance(const PathTopology& topology, const Coloring& coloring, int d);

// Same check on a partial assignment (0 = uncolored); only colored pairs count.
bool partial_d_distance_valid(const PathTopology& topology,
                              const std::vector<int>& assignment, int d);

bool verify_dped_solution(const DPEDInstance& inst, const Coloring& coloring);
bool verify_lcd_solution(const LCDInstance& inst, const Coloring& coloring);

// True iff no color is missing from a vertex's list while present on the
// lists of both its neighbors within one path.
bool is_non_alternating(const LCDInstance& inst);

}  // namespace dpath
