#pragma once

#include <optional>

#include "dpath/core.hpp"

namespace dpath {

// View of a single path whose precolored vertices form a (possibly empty)
// prefix and a (possibly empty) suffix. `prefix_end` is the last precolored
// prefix position (0 if none); `suffix_begin` is the first precolored suffix
// position (n+1 if none). Free vertices are prefix_end+1 .. suffix_begin-1.
struct EndPrecoloredView {
    int prefix_end = 0;
    int suffix_begin = 0;

    // Throws NotSinglePath / NotEndPrecolored when the instance does not fit
    // the shape this solver handles.
    static EndPrecoloredView from(const DPEDInstance& inst);
};

// Exact greedy solver for end-precolored single paths. Scans left to right;
// at each free vertex picks, among colors with positive remaining demand not
// occurring within distance d, the one with maximum remaining demand, ties
// broken by earliest first occurrence in the precolored suffix (absent colors
// last), then by smallest color index. Complete on this instance class:
// returns a coloring iff one exists.
std::optional<Coloring> solve_greedy(const DPEDInstance& inst);

}  // namespace dpath
