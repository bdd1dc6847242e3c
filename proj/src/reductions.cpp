#include "dpath/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dpath/errors.hpp"

namespace dpath {

void validate(const MssInstance& inst) {
    if (inst.k < 1) throw SemanticError("subset-sum dimension must be positive");
    if (static_cast<int>(inst.target.size()) != inst.k)
        throw SemanticError("target vector length must equal the dimension");
    for (int t : inst.target)
        if (t < 0) throw SemanticError("target entries must be nonnegative");
    for (const auto& item : inst.items) {
        if (static_cast<int>(item.size()) != inst.k)
            throw SemanticError("item vector length must equal the dimension");
        for (int x : item)
            if (x < 0) throw SemanticError("item entries must be nonnegative");
    }
}

void validate(const UnitIntervalPce& inst) {
    int n = inst.n();
    if (n < 1) throw SemanticError("interval instance needs at least one vertex");
    if (inst.num_colors < 1) throw SemanticError("interval instance needs a color");
    if (static_cast<int>(inst.precoloring.size()) != n)
        throw SemanticError("precoloring length must equal the number of vertices");
    std::set<int> seen;
    for (int l : inst.left) {
        if (l < 0 || l > n * n)
            throw SemanticError("interval endpoints must lie in [0, n^2]");
        if (!seen.insert(l).second)
            throw SemanticError("interval endpoints must be pairwise distinct");
    }
    for (int x : inst.precoloring)
        if (x < 0 || x > inst.num_colors)
            throw SemanticError("precolor outside the color range");
}

LCDInstance reduce_mss_to_lcd(const MssInstance& inst) {
    validate(inst);
    int k = inst.k;
    int universal = k + 1, fill1 = k + 2, fill2 = k + 3, slack = k + 4;
    long long total = 0, target_sum = 0;
    for (const auto& item : inst.items)
        total += std::accumulate(item.begin(), item.end(), 0LL);
    target_sum = std::accumulate(inst.target.begin(), inst.target.end(), 0LL);

    LCDInstance out;
    out.num_colors = k + 4;
    out.d = 1;
    if (total < target_sum) {
        // No subset can cover the target; emit a fixed infeasible image.
        out.topology = PathTopology({1});
        out.lists = {{1}};
        out.demands.assign(out.num_colors, 0);
        return out;
    }
    if (total == 0) {
        // Every item is all-zero and so is the target; trivially feasible.
        out.topology = PathTopology({1});
        out.lists = {{universal}};
        out.demands.assign(out.num_colors, 0);
        out.demands[universal - 1] = 1;
        return out;
    }

    std::vector<int> lengths;
    for (const auto& item : inst.items) {
        long long weight = std::accumulate(item.begin(), item.end(), 0LL);
        if (weight == 0) continue;  // empty gadget, contributes nothing
        int weight_n = static_cast<int>(weight);
        lengths.push_back(6 * weight_n);
        // The gadget offers the universal color everywhere plus one partner
        // color per vertex.  A demand-respecting coloring must use the
        // universal color on a maximum independent set of the gadget path,
        // i.e. on all odd or all even positions -- but a size-3N independent
        // set in a 6N-path may also switch parity once, coloring an odd
        // prefix and an even suffix.  To rule the switch out, the partner
        // colors are staggered: the first fill color sits on the first N even
        // positions and the last N odd positions, so a parity switch always
        // picks up strictly more than N of it.  Since its total demand is one
        // N per gadget, every gadget is then forced onto a pure parity class.
        std::vector<int> targets;
        for (int j = 1; j <= k; ++j)
            for (int rep = 0; rep < item[j - 1]; ++rep) targets.push_back(j);
        for (int pos = 1; pos <= 6 * weight_n; ++pos) {
            int rank = (pos + 1) / 2;  // index among positions of this parity
            int partner;
            if (pos % 2 == 1)
                partner = rank <= weight_n       ? targets[rank - 1]
                          : rank <= 2 * weight_n ? fill2
                                                 : fill1;
            else
                partner = rank <= weight_n       ? fill1
                          : rank <= 2 * weight_n ? slack
                                                 : fill2;
            out.lists.push_back({universal, partner});
        }
    }
    for (auto& list : out.lists) std::sort(list.begin(), list.end());
    out.topology = PathTopology(lengths);
    out.demands.assign(out.num_colors, 0);
    for (int j = 1; j <= k; ++j) out.demands[j - 1] = inst.target[j - 1];
    out.demands[universal - 1] = static_cast<int>(3 * total);
    out.demands[fill1 - 1] = static_cast<int>(total);
    out.demands[fill2 - 1] = static_cast<int>(total);
    out.demands[slack - 1] = static_cast<int>(total - target_sum);
    return out;
}

EdgeForbidAssignment compute_edge_forbidden_sets(const LCDInstance& inst) {
    validate(inst);
    if (inst.topology.num_paths() != 1)
        throw NotSinglePath("edge-forbidden sets are defined on a single path");
    int n = inst.topology.n;
    if (n < 2) throw NotNormalized("edge-forbidden sets need at least one edge");
    if (inst.lists[0] != inst.lists[1] || inst.lists[n - 1] != inst.lists[n - 2])
        throw NotNormalized("path endpoints must share the list of their neighbor");
    if (!is_non_alternating(inst))
        throw NotNonAlternating("a color is missing between two lists containing it");

    int c = inst.num_colors;
    auto in_list = [&](int v, int color) {  // v is 1-based
        const auto& l = inst.lists[v - 1];
        return std::binary_search(l.begin(), l.end(), color);
    };

    EdgeForbidAssignment out;
    out.forbidden.resize(n - 1);
    for (int color = 1; color <= c; ++color)
        if (!in_list(1, color)) out.forbidden[0].push_back(color);
    for (int i = 2; i <= n - 2; ++i) {
        for (int color = 1; color <= c; ++color) {
            if (in_list(i, color) || in_list(i + 1, color)) continue;
            bool in_prev = std::binary_search(out.forbidden[i - 2].begin(),
                                              out.forbidden[i - 2].end(), color);
            if (!in_prev || in_list(i + 2, color)) out.forbidden[i - 1].push_back(color);
        }
    }
    if (n > 2) {
        out.forbidden[n - 2].clear();
        for (int color = 1; color <= c; ++color)
            if (!in_list(n, color)) out.forbidden[n - 2].push_back(color);
    }
    return out;
}

LcdNormalization normalize_lcd(const LCDInstance& inst) {
    validate(inst);
    if (!inst.has_demands())
        throw SemanticError("normalization is defined for demanded instances");
    int p = inst.topology.num_paths();
    int extra1 = inst.num_colors + 1, extra2 = inst.num_colors + 2;

    LcdNormalization out;
    LCDInstance& norm = out.instance;
    norm.num_colors = inst.num_colors + 2;
    norm.d = 1;
    std::vector<int> lengths{inst.topology.n + 2 * (p + 1)};
    norm.lists.push_back({extra1, extra2});
    norm.lists.push_back({extra1, extra2});
    for (int q = 0; q < p; ++q) {
        int s = inst.topology.starts[q];
        for (int v = s; v < s + inst.topology.lengths[q]; ++v) {
            out.original_positions.push_back(static_cast<int>(norm.lists.size()) + 1);
            auto list = inst.lists[v - 1];
            list.push_back(extra1);
            list.push_back(extra2);
            norm.lists.push_back(std::move(list));
        }
        norm.lists.push_back({extra1, extra2});
        norm.lists.push_back({extra1, extra2});
    }
    norm.topology = PathTopology(lengths);
    norm.demands = inst.demands;
    norm.demands.push_back(p + 1);
    norm.demands.push_back(p + 1);
    return out;
}

LcdToDpedReduction reduce_lcd_to_dped(const LCDInstance& inst) {
    LcdToDpedReduction out;
    out.normalization = normalize_lcd(inst);
    const LCDInstance& norm = out.normalization.instance;
    EdgeForbidAssignment F = compute_edge_forbidden_sets(norm);

    int n = norm.topology.n;
    int t = norm.num_colors;
    int d = 2 * t + 1;
    auto star = [&](int pos) { return t + 1 + pos % (d + 1); };  // aux color at pos
    auto forbids = [&](int edge, int color) {  // edge 0 means "before the path"
        if (edge == 0) return false;
        const auto& f = F.forbidden[edge - 1];
        return std::binary_search(f.begin(), f.end(), color);
    };

    DPEDInstance& red = out.instance;
    red.topology = PathTopology({n * d + 1});
    red.num_colors = t + d + 1;
    red.d = d;
    red.precoloring.assign(n * d + 1, 0);
    for (int pos = 1; pos <= n * d + 1; ++pos) {
        if ((pos - 1) % d == 0 && pos <= (n - 1) * d + 1) {
            out.main_positions.push_back(pos);
            continue;  // main vertex, left free
        }
        red.precoloring[pos - 1] = star(pos);
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= t; ++j) {
            int first = (i - 1) * d + 2 * j;  // position of the (j,1) vertex
            if (forbids(i, j) && !forbids(i - 1, j))
                red.precoloring[first - 1] = j;
            if (forbids(i, j) && forbids(i - 1, j))
                red.precoloring[first] = j;
        }
    red.demands = norm.demands;
    red.demands.resize(red.num_colors, 0);
    return out;
}

Coloring lift_dped_to_lcd(const LcdToDpedReduction& red, const Coloring& solution) {
    Coloring out;
    for (int v : red.normalization.original_positions)
        out.colors.push_back(solution.colors[red.main_positions[v - 1] - 1]);
    return out;
}

PceToDpeReduction reduce_pce_to_dpe(const UnitIntervalPce& inst) {
    validate(inst);
    int n = inst.n();
    int d = 3 * n;
    int len = 3 * n * n + 2 * d + 1;  // positions 1 .. len

    PceToDpeReduction out;
    DpeInstance& red = out.instance;
    red.topology = PathTopology({len});
    red.num_colors = inst.num_colors + d + 1;
    red.d = d;
    red.precoloring.assign(len, 0);

    // Representative position of endpoint value i: 3i + d, shifted to
    // 1-based indexing.
    std::vector<char> representative(len + 1, 0);
    out.representative_positions.resize(n);
    for (int v = 0; v < n; ++v) {
        int pos = 3 * inst.left[v] + d + 1;
        out.representative_positions[v] = pos;
        representative[pos] = 1;
        red.precoloring[pos - 1] = inst.precoloring[v];
    }
    int rank = 1;
    for (int pos = 1; pos <= len; ++pos) {
        if (representative[pos]) continue;
        red.precoloring[pos - 1] = inst.num_colors + 1 + rank % (d + 1);
        ++rank;
    }
    return out;
}

DpeToDpedReduction reduce_dpe_to_dped(const DpeInstance& inst) {
    validate(inst);
    int n = inst.topology.n;
    int c = inst.num_colors;
    int d = inst.d;

    // Pieces: the original paths followed by (c-1)*n isolated vertices, all
    // joined into one path with a d-vertex buffer between consecutive pieces.
    std::vector<std::pair<int, int>> pieces;  // (length, source start or 0)
    for (int q = 0; q < inst.topology.num_paths(); ++q)
        pieces.emplace_back(inst.topology.lengths[q], inst.topology.starts[q]);
    for (long long extra = static_cast<long long>(c - 1) * n; extra > 0; --extra)
        pieces.emplace_back(1, 0);

    DpeToDpedReduction out;
    DPEDInstance& red = out.instance;
    long long total = 0;
    for (const auto& piece : pieces) total += piece.first;
    total += static_cast<long long>(pieces.size() - 1) * d;
    red.topology = PathTopology({static_cast<int>(total)});
    red.num_colors = c + 2 * d + 1;
    red.d = d;
    red.precoloring.assign(static_cast<size_t>(total), 0);

    int pos = 1;
    std::vector<int> buffer_colors;  // positions already filled with aux colors
    auto greedy_aux = [&](int at) {
        for (int a = c + 1;; ++a) {
            bool used = false;
            for (int u = std::max(1, at - d); u < at && !used; ++u)
                used = red.precoloring[u - 1] == a;
            if (!used) return a;  // at most 2d aux colors can be blocked
        }
    };
    for (size_t i = 0; i < pieces.size(); ++i) {
        auto [length, source] = pieces[i];
        for (int v = 0; v < length; ++v, ++pos) {
            if (source != 0) {
                out.original_positions.push_back(pos);
                red.precoloring[pos - 1] = inst.precoloring[source - 1 + v];
            }
        }
        if (i + 1 < pieces.size())
            for (int v = 0; v < d; ++v, ++pos) red.precoloring[pos - 1] = greedy_aux(pos);
    }

    red.demands.assign(red.num_colors, 0);
    for (int a = 1; a <= c; ++a) red.demands[a - 1] = n;
    for (int x : inst.precoloring)
        if (x != 0) --red.demands[x - 1];
    return out;
}

Coloring lift_dped_to_dpe(const DpeToDpedReduction& red, const Coloring& solution) {
    Coloring out;
    for (int pos : red.original_positions) out.colors.push_back(solution.colors[pos - 1]);
    return out;
}

}  // namespace dpath
