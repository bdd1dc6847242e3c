#include "dpath/core.hpp"

#include <algorithm>
#include <numeric>

namespace dpath {

PathTopology::PathTopology(std::vector<int> lens) : lengths(std::move(lens)) {
    starts.reserve(lengths.size());
    int next = 1;
    for (int len : lengths) {
        if (len < 1) throw SemanticError("path length must be positive");
        starts.push_back(next);
        next += len;
    }
    n = next - 1;
}

int PathTopology::path_of(int v) const {
    // starts is sorted; find the last start <= v.
    auto it = std::upper_bound(starts.begin(), starts.end(), v);
    return static_cast<int>(it - starts.begin()) - 1;
}

int DPEDInstance::num_precolored() const {
    return static_cast<int>(std::count_if(precoloring.begin(), precoloring.end(),
                                          [](int c) { return c != 0; }));
}

bool DPEDInstance::is_demand_consistent() const {
    long long total = std::accumulate(demands.begin(), demands.end(), 0LL);
    return total == num_free();
}

void validate(const DPEDInstance& inst) {
    if (inst.num_colors < 1) throw SemanticError("number of colors must be positive");
    if (inst.d < 0) throw SemanticError("distance must be non-negative");
    if (static_cast<int>(inst.precoloring.size()) != inst.topology.n)
        throw SemanticError("precoloring size does not match vertex count");
    if (static_cast<int>(inst.demands.size()) != inst.num_colors)
        throw SemanticError("demand vector size does not match color count");
    for (int c : inst.precoloring)
        if (c < 0 || c > inst.num_colors) throw SemanticError("precolor out of range");
    for (int q : inst.demands)
        if (q < 0) throw SemanticError("demand must be non-negative");
}

void validate(const DpeInstance& inst) {
    if (inst.num_colors < 1) throw SemanticError("number of colors must be positive");
    if (inst.d < 0) throw SemanticError("distance must be non-negative");
    if (static_cast<int>(inst.precoloring.size()) != inst.topology.n)
        throw SemanticError("precoloring size does not match vertex count");
    for (int c : inst.precoloring)
        if (c < 0 || c > inst.num_colors) throw SemanticError("precolor out of range");
}

void validate(const LCDInstance& inst) {
    if (inst.num_colors < 1) throw SemanticError("number of colors must be positive");
    if (inst.d < 0) throw SemanticError("distance must be non-negative");
    if (static_cast<int>(inst.lists.size()) != inst.topology.n)
        throw SemanticError("list count does not match vertex count");
    for (const auto& list : inst.lists) {
        if (list.empty()) throw SemanticError("color list must be non-empty");
        for (size_t i = 0; i < list.size(); ++i) {
            if (list[i] < 1 || list[i] > inst.num_colors)
                throw SemanticError("list color out of range");
            if (i > 0 && list[i] <= list[i - 1])
                throw SemanticError("list colors must be strictly increasing");
        }
    }
    if (!inst.demands.empty()) {
        if (static_cast<int>(inst.demands.size()) != inst.num_colors)
            throw SemanticError("demand vector size does not match color count");
        for (int q : inst.demands)
            if (q < 0) throw SemanticError("demand must be non-negative");
    }
}

bool partial_d_distance_valid(const PathTopology& topology,
                              const std::vector<int>& assignment, int d) {
    if (d <= 0) return true;
    for (int p = 0; p < topology.num_paths(); ++p) {
        int lo = topology.starts[p];
        int hi = lo + topology.lengths[p] - 1;
        for (int u = lo; u <= hi; ++u) {
            if (assignment[u - 1] == 0) continue;
            int stop = std::min(u + d, hi);
            for (int v = u + 1; v <= stop; ++v)
                if (assignment[v - 1] == assignment[u - 1]) return false;
        }
    }
    return true;
}

bool verify_d_distance(const PathTopology& topology, const Coloring& coloring, int d) {
    return partial_d_distance_valid(topology, coloring.colors, d);
}

bool verify_dped_solution(const DPEDInstance& inst, const Coloring& coloring) {
    int n = inst.topology.n;
    if (static_cast<int>(coloring.colors.size()) != n) return false;
    for (int c : coloring.colors)
        if (c < 1 || c > inst.num_colors) return false;
    for (int v = 1; v <= n; ++v)
        if (inst.precoloring[v - 1] != 0 && coloring.colors[v - 1] != inst.precoloring[v - 1])
            return false;
    if (!verify_d_distance(inst.topology, coloring, inst.d)) return false;
    std::vector<int> fresh(inst.num_colors, 0);
    for (int v = 1; v <= n; ++v)
        if (inst.precoloring[v - 1] == 0) ++fresh[coloring.colors[v - 1] - 1];
    return fresh == inst.demands;
}

bool verify_lcd_solution(const LCDInstance& inst, const Coloring& coloring) {
    int n = inst.topology.n;
    if (static_cast<int>(coloring.colors.size()) != n) return false;
    for (int v = 1; v <= n; ++v) {
        const auto& list = inst.lists[v - 1];
        if (!std::binary_search(list.begin(), list.end(), coloring.colors[v - 1]))
            return false;
    }
    if (!verify_d_distance(inst.topology, coloring, inst.d)) return false;
    if (inst.has_demands()) {
        std::vector<int> used(inst.num_colors, 0);
        for (int c : coloring.colors) ++used[c - 1];
        if (used != inst.demands) return false;
    }
    return true;
}

bool is_non_alternating(const LCDInstance& inst) {
    for (int p = 0; p < inst.topology.num_paths(); ++p) {
        int lo = inst.topology.starts[p];
        int hi = lo + inst.topology.lengths[p] - 1;
        for (int v = lo + 1; v <= hi - 1; ++v) {
            const auto& mid = inst.lists[v - 1];
            const auto& left = inst.lists[v - 2];
            const auto& right = inst.lists[v];
            for (int c : left) {
                if (std::binary_search(mid.begin(), mid.end(), c)) continue;
                if (std::binary_search(right.begin(), right.end(), c)) return false;
            }
        }
    }
    return true;
}

}  // namespace dpath
