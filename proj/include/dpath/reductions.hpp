#pragma once

#include <vector>

#include "dpath/core.hpp"

namespace dpath {

// Multidimensional subset sum: pick a subset of the item vectors whose
// coordinatewise sum equals the target.
struct MssInstance {
    int k = 0;                            // dimension
    std::vector<std::vector<int>> items;  // each of length k, entries >= 0
    std::vector<int> target;              // length k

    bool operator==(const MssInstance&) const = default;
};

void validate(const MssInstance& inst);

// Precoloring extension on a unit interval graph given by left endpoints:
// vertices u, v are adjacent iff |left[u] - left[v]| <= n. Endpoints must be
// pairwise distinct integers from [0, n^2].
struct UnitIntervalPce {
    int num_colors = 0;
    std::vector<int> left;         // left interval endpoint per vertex
    std::vector<int> precoloring;  // 0 = uncolored

    int n() const { return static_cast<int>(left.size()); }
    bool operator==(const UnitIntervalPce&) const = default;
};

void validate(const UnitIntervalPce& inst);

// Subset-sum to list coloring with demands on disjoint unit-distance paths.
// One gadget path of 6*|item| vertices per item; the universal color is
// k+1, fill colors k+2 and k+3, the slack color k+4. When the items cannot
// cover the target (sum of all entries below the target sum), returns a
// fixed trivially infeasible image; when there are no nonzero items and the
// target is zero, a fixed trivially feasible one.
LCDInstance reduce_mss_to_lcd(const MssInstance& inst);

// Forbidden color sets on the edges of a single normalized non-alternating
// path: for every vertex, its list is the complement of the union of the
// forbidden sets on its incident edges, and no color is forbidden on three
// consecutive edges.
struct EdgeForbidAssignment {
    std::vector<std::vector<int>> forbidden;  // per edge, sorted
};

EdgeForbidAssignment compute_edge_forbidden_sets(const LCDInstance& inst);

// Single-path normalization used before the distance-coloring reduction: two
// fresh colors (indices c+1, c+2) are threaded through two fresh buffer
// vertices at both ends and between consecutive paths; every list receives
// both fresh colors and the buffers demand exactly one use of each per pair.
struct LcdNormalization {
    LCDInstance instance;
    std::vector<int> original_positions;  // position of each input vertex
};

LcdNormalization normalize_lcd(const LCDInstance& inst);

// List coloring with demands to distance precoloring extension with demands:
// d = 2t+1 for t normalized colors, one main (free) vertex per normalized
// vertex spaced d apart, and precolored auxiliary vertices in between that
// encode the edge-forbidden sets; auxiliary colors t+1 .. t+d+1 cycle
// elsewhere with zero demand.
struct LcdToDpedReduction {
    DPEDInstance instance;
    LcdNormalization normalization;
    std::vector<int> main_positions;  // per normalized vertex
};

LcdToDpedReduction reduce_lcd_to_dped(const LCDInstance& inst);

// Restricts a solution of the reduced instance to the original vertices.
Coloring lift_dped_to_lcd(const LcdToDpedReduction& red, const Coloring& solution);

// Unit interval precoloring extension to distance precoloring extension
// without demands: d = 3n, every left endpoint value i is represented by
// path position 3i + d (plus one, with 1-based positions); all other
// positions carry a cyclic precoloring with d+1 fresh colors c+1 .. c+d+1.
struct PceToDpeReduction {
    DpeInstance instance;
    std::vector<int> representative_positions;  // per original vertex
};

PceToDpeReduction reduce_pce_to_dpe(const UnitIntervalPce& inst);

// Distance precoloring extension to the demanded variant on a single path:
// appends (c-1)*n isolated vertices so that every color can demand exactly
// its unused quota, then joins all pieces with d-vertex buffers precolored
// greedily from 2d+1 fresh zero-demand colors.
struct DpeToDpedReduction {
    DPEDInstance instance;
    std::vector<int> original_positions;  // per original vertex
};

DpeToDpedReduction reduce_dpe_to_dped(const DpeInstance& inst);

// Restricts a solution of the reduced instance to the original vertices.
Coloring lift_dped_to_dpe(const DpeToDpedReduction& red, const Coloring& solution);

}  // namespace dpath
