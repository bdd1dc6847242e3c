#include "dpath/greedy.hpp"

#include <numeric>
#include <set>
#include <tuple>

namespace dpath {

EndPrecoloredView EndPrecoloredView::from(const DPEDInstance& inst) {
    if (inst.topology.num_paths() != 1)
        throw NotSinglePath("end-precolored solver requires a single path");
    int n = inst.topology.n;
    int prefix_end = 0;
    while (prefix_end < n && inst.precoloring[prefix_end] != 0) ++prefix_end;
    int suffix_begin = n + 1;
    while (suffix_begin > prefix_end + 1 && inst.precoloring[suffix_begin - 2] != 0)
        --suffix_begin;
    for (int v = prefix_end + 1; v < suffix_begin; ++v)
        if (inst.precoloring[v - 1] != 0)
            throw NotEndPrecolored("precolored vertex " + std::to_string(v) +
                                   " is neither in the prefix nor the suffix");
    return {prefix_end, suffix_begin};
}

std::optional<Coloring> solve_greedy(const DPEDInstance& inst) {
    validate(inst);
    auto view = EndPrecoloredView::from(inst);
    int n = inst.topology.n;
    int d = inst.d;
    int c = inst.num_colors;

    if (!partial_d_distance_valid(inst.topology, inst.precoloring, inst.d)) return std::nullopt;
    long long total = std::accumulate(inst.demands.begin(), inst.demands.end(), 0LL);
    if (total != view.suffix_begin - 1 - view.prefix_end) return std::nullopt;

    // pos[a]: first occurrence of color a in the precolored suffix, n+1 if absent.
    std::vector<int> pos(c, n + 1);
    for (int v = n; v >= view.suffix_begin; --v) pos[inst.precoloring[v - 1] - 1] = v;

    std::vector<int> col = inst.precoloring;
    std::vector<int> remaining = inst.demands;

    // Colors currently feasible (no occurrence in the active window) with
    // positive remaining demand, ordered by the selection rule.
    using Key = std::tuple<int, int, int>;  // (-remaining, pos, color)
    auto key = [&](int a) { return Key{-remaining[a - 1], pos[a - 1], a}; };
    std::set<Key> ready;
    std::vector<int> window_count(c, 0);  // occurrences of each color in [i-d, i+d]

    auto add_occurrence = [&](int a) {
        if (window_count[a - 1]++ == 0 && remaining[a - 1] > 0) ready.erase(key(a));
    };
    auto drop_occurrence = [&](int a) {
        if (--window_count[a - 1] == 0 && remaining[a - 1] > 0) ready.insert(key(a));
    };

    int first_free = view.prefix_end + 1;
    for (int a = 1; a <= c; ++a)
        if (remaining[a - 1] > 0) ready.insert(key(a));
    for (int v = std::max(1, first_free - d); v < first_free; ++v) add_occurrence(col[v - 1]);
    for (int v = first_free; v <= std::min(n, first_free + d); ++v)
        if (col[v - 1] != 0) add_occurrence(col[v - 1]);

    for (int i = first_free; i < view.suffix_begin; ++i) {
        if (ready.empty()) return std::nullopt;
        int a = std::get<2>(*ready.begin());
        ready.erase(ready.begin());
        col[i - 1] = a;
        --remaining[a - 1];
        ++window_count[a - 1];  // a now occurs at i itself
        // Advance the window from center i to center i+1.
        if (i - d >= 1) drop_occurrence(col[i - d - 1]);
        if (i + d + 1 <= n && col[i + d] != 0) add_occurrence(col[i + d]);
    }

    for (int a = 1; a <= c; ++a)
        if (remaining[a - 1] != 0) return std::nullopt;
    return Coloring{std::move(col)};
}

}  // namespace dpath
