#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dpath/core.hpp"
#include "dpath/nfa.hpp"

namespace dpath {

// Exponential-time exact reference solvers. These exist to be obviously
// correct, not fast; every other solver is validated against them.
struct OracleOptions {
    int max_free = 16;       // free-vertex budget for the coloring oracles
    int max_word_length = 14;  // total-count budget for the CMPL oracle
};

// Depth-first search over free vertices in index order, colors ascending.
// Returns the lexicographically smallest feasible assignment over the free
// vertices, or absent when the instance is infeasible.
// Throws BudgetExceeded when the number of free vertices exceeds the budget.
std::optional<Coloring> oracle_dped(const DPEDInstance& inst, const OracleOptions& opts = {});

// Analogous reference for LCD, honoring lists and the instance's d.
// An empty demand vector lifts the demand constraint (the DLC variant).
std::optional<Coloring> oracle_lcd(const LCDInstance& inst, const OracleOptions& opts = {});

// Reference for constrained Parikh membership: the lexicographically
// smallest P-constrained word of L(nfa) with exactly the target letter
// counts, or absent. Throws InconsistentConstraints when two constraints
// fix one position differently, BudgetExceeded past the word-length budget.
std::optional<std::vector<int>> oracle_cmpl(const Nfa& nfa, const std::vector<int>& target,
                                            const std::vector<std::pair<int, int>>& constraints,
                                            const OracleOptions& opts = {});

}  // namespace dpath
