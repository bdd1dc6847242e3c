#pragma once

#include <optional>

#include "dpath/core.hpp"

namespace dpath {

struct WindowDpOptions {
    // Cap on the total number of DP states materialized across all levels.
    long long max_states = 50'000'000;
};

// Exact solver for single-path instances with arbitrary precoloring and
// demands. Dynamic program whose state after vertex i is the ordered window
// of the last min(i, d) colors together with per-color usage counts (capped
// at the color's total quota). Reconstructs a witness via parent pointers.
std::optional<Coloring> solve_dped_dp(const DPEDInstance& inst,
                                      const WindowDpOptions& opts = {});

// Exact solver for list coloring without demands (demands on the instance
// raise DemandsUnsupported). Lists are pruned to the 2d+1 smallest colors per
// vertex; paths are handled independently. Polynomial for fixed d.
std::optional<Coloring> solve_dlc_dp(const LCDInstance& inst);

namespace detail {
// DLC on one path with the list-pruning step toggleable; exposed so the
// pruning step can be validated against the unpruned search.
std::optional<std::vector<int>> dlc_single_path(const std::vector<std::vector<int>>& lists,
                                                int d, bool prune);
}  // namespace detail

}  // namespace dpath
