#pragma once

#include <vector>

#include "dpath/core.hpp"

namespace dpath {

struct ApproxReport {
    long long achieved_error = 0;  // sum over colors of |demand - fresh uses|
    long long bound = 0;           // guaranteed ceiling: 4*p*(d+1)^2 + p
    std::vector<int> per_color_deviations;  // demand minus fresh uses, per color
};

struct ApproxResult {
    Coloring coloring;
    ApproxReport report;
};

// Additive-error solver for single-path instances with arbitrary precoloring.
// Colors the whole path ignoring the precoloring with demands lifted by the
// precolored occurrences, erases a radius 2(d+1)^2 zone around each precolored
// vertex, restores the precoloring, and refills the gaps (greedy sweeps,
// block morphing, or exact segment solves, depending on gap shape and the
// number of colors). The output always satisfies the
// precoloring and the distance constraint; only the demand counts may drift,
// by at most the reported bound on feasible instances. Requires at least d+2
// colors when d >= 1. Throws Infeasible when the precoloring itself violates
// the distance constraint or a gap admits no valid refill.
ApproxResult solve_approx(const DPEDInstance& inst);

namespace detail {
// Morphing schedule between two injective blocks of d+1 colors drawn from
// 1..num_colors: returns 2(d+1) blocks, adjacent ones (including start before
// and target after) differing in at most one position, such that the
// concatenation start + blocks + target is d-distance valid. Replacement
// colors are the smallest ones absent from the current block, which is why
// num_colors >= d+2 is required.
std::vector<std::vector<int>> morph_blocks(const std::vector<int>& start,
                                           const std::vector<int>& target, int num_colors);
}  // namespace detail

}  // namespace dpath
