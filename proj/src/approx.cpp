#include "dpath/approx.hpp"

#include <algorithm>
#include <numeric>

#include "dpath/errors.hpp"
#include "dpath/window_dp.hpp"

namespace dpath {

namespace detail {

std::vector<std::vector<int>> morph_blocks(const std::vector<int>& start,
                                           const std::vector<int>& target, int num_colors) {
    int w = static_cast<int>(start.size());
    if (static_cast<int>(target.size()) != w)
        throw SemanticError("morph blocks must have equal width");
    if (num_colors < w + 1)
        throw TooFewColors("block morphing needs a spare color");

    auto spare = [&](const std::vector<int>& block) {
        for (int a = 1;; ++a)
            if (std::find(block.begin(), block.end(), a) == block.end()) return a;
    };

    // Phase i installs target[i] at position i via two snapshots: first evict
    // target[i] from any later position (replacing it with a color absent
    // from the block), then overwrite position i. Every snapshot differs from
    // its predecessor in at most one position and stays injective, so no
    // shared color ever moves to an earlier in-block position -- which is
    // exactly the condition for two adjacent width-(d+1) blocks to be
    // d-distance compatible.
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur = start;
    for (int i = 0; i < w; ++i) {
        auto it = std::find(cur.begin(), cur.end(), target[i]);
        if (it != cur.end() && it != cur.begin() + i) *it = spare(cur);
        blocks.push_back(cur);
        cur[i] = target[i];
        blocks.push_back(cur);
    }
    return blocks;
}

}  // namespace detail

namespace {

struct Refill {
    std::vector<int>& col;
    std::vector<int>& residual;  // quota minus current uses; may go negative
    int n, d, c;

    // True when color a occurs nowhere within distance d of v.
    bool clear(int v, int a) const {
        for (int u = std::max(1, v - d); u <= std::min(n, v + d); ++u)
            if (u != v && col[u - 1] == a) return false;
        return true;
    }

    // Max-residual clear color, ties to the smaller color.
    int pick(int v) const {
        int best = 0;
        for (int a = 1; a <= c; ++a) {
            if (!clear(v, a)) continue;
            if (best == 0 || residual[a - 1] > residual[best - 1]) best = a;
        }
        if (best == 0) throw Infeasible("no color available at vertex " + std::to_string(v));
        return best;
    }

    void place(int v, int a) {
        col[v - 1] = a;
        --residual[a - 1];
    }
};

}  // namespace

ApproxResult solve_approx(const DPEDInstance& inst) {
    validate(inst);
    if (inst.topology.num_paths() != 1)
        throw NotSinglePath("the approximation solver requires a single path");
    int n = inst.topology.n;
    int d = inst.d;
    int c = inst.num_colors;
    if (d >= 1 && c < d + 2)
        throw TooFewColors("approximation needs at least d+2 colors");
    if (!partial_d_distance_valid(inst.topology, inst.precoloring, d))
        throw Infeasible("precoloring violates the distance constraint");

    int p = inst.num_precolored();
    int b = 2 * (d + 1) * (d + 1);

    // Quota per color: demanded fresh uses plus precolored occurrences.
    std::vector<int> residual(c);
    for (int a = 1; a <= c; ++a) residual[a - 1] = inst.demands[a - 1];
    for (int x : inst.precoloring)
        if (x != 0) ++residual[x - 1];

    std::vector<int> col(n, 0);
    Refill refill{col, residual, n, d, c};

    // Pass 1: color the whole path ignoring the precoloring. Max-residual
    // greedy is exact without precoloring: on demand-consistent instances it
    // leaves every residual at zero. A color is always available since at
    // most d are blocked.
    for (int v = 1; v <= n; ++v) refill.place(v, refill.pick(v));

    // Pass 2: erase a radius-b zone around each precolored vertex, then
    // restore the precoloring.
    std::vector<char> zone(n, 0);
    for (int v = 1; v <= n; ++v) {
        if (inst.precoloring[v - 1] == 0) continue;
        for (int u = std::max(1, v - b); u <= std::min(n, v + b); ++u) {
            if (col[u - 1] != 0) ++residual[col[u - 1] - 1];
            col[u - 1] = 0;
            zone[u - 1] = 1;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (inst.precoloring[v - 1] != 0) refill.place(v, inst.precoloring[v - 1]);

    // Pass 3: refill each erased cluster. A cluster is a maximal interval of
    // zone positions; inside it only the restored precolored vertices carry
    // colors, and everything outside clusters is colored.
    auto greedy_fill = [&](int from, int to, int step) {
        for (int v = from; v != to + step; v += step)
            if (col[v - 1] == 0) refill.place(v, refill.pick(v));
    };

    // Exact refill of [lo, hi] against the current colors: uncolored
    // positions offer every clear color, highest residual first (the segment
    // solver prefers early list entries); colored ones are pinned. Places the
    // witness and returns true, or leaves the state untouched.
    auto exact_fill = [&](int lo, int hi) -> bool {
        std::vector<int> order(c);
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int bb) { return residual[a - 1] > residual[bb - 1]; });
        std::vector<std::vector<int>> lists(hi - lo + 1);
        for (int v = lo; v <= hi; ++v) {
            if (col[v - 1] != 0) {
                lists[v - lo] = {col[v - 1]};
                continue;
            }
            for (int a : order)
                if (refill.clear(v, a)) lists[v - lo].push_back(a);
            if (lists[v - lo].empty()) return false;
        }
        auto part = detail::dlc_single_path(lists, d, false);
        if (!part) return false;
        for (int v = lo; v <= hi; ++v)
            if (col[v - 1] == 0) refill.place(v, (*part)[v - lo]);
        return true;
    };

    // Structured repair of one cluster; throws Infeasible when a step gets
    // stuck, which the caller resolves with the exact whole-cluster solver.
    auto repair = [&](int L, int R) {
        if (d == 0 || c >= 2 * d + 1) {
            // At most 2d colors are ever blocked, so greedy cannot get stuck.
            greedy_fill(L, R, 1);
            return;
        }
        std::vector<int> anchors;
        for (int v = L; v <= R; ++v)
            if (inst.precoloring[v - 1] != 0) anchors.push_back(v);
        // Gaps between close precolored vertices: exact segment solve.
        if (anchors.size() >= 2 && !exact_fill(anchors.front(), anchors.back()))
            throw Infeasible("a gap between precolored vertices admits no coloring");
        int w1 = anchors.front();
        if (L < w1) {
            if (L == 1) {
                // No left context: sweep right-to-left, <= d colors blocked.
                greedy_fill(w1 - 1, L, -1);
            } else if (L - d - 1 >= 1 && w1 + d <= n && w1 - L == b) {
                // Standard left neighborhood: pin the boundary block starting
                // at w1, then morph the preceding context block into it.
                for (int v = w1 + 1; v <= w1 + d; ++v) {
                    if (col[v - 1] != 0) continue;
                    int a = 1;
                    while (a <= c && !refill.clear(v, a)) ++a;
                    if (a > c) throw Infeasible("boundary block admits no color");
                    refill.place(v, a);
                }
                std::vector<int> start(col.begin() + (L - d - 2), col.begin() + (L - 1));
                std::vector<int> target(col.begin() + (w1 - 1), col.begin() + (w1 + d));
                int v = L;
                for (const auto& block : detail::morph_blocks(start, target, c))
                    for (int a : block) refill.place(v++, a);
            } else if (!exact_fill(L, w1 - 1)) {
                throw Infeasible("left neighborhood admits no coloring");
            }
        }
        int s = anchors.back() + 1;
        while (s <= R && col[s - 1] != 0) ++s;
        if (s <= R) {
            if (R == n)
                greedy_fill(s, R, 1);  // no right context: <= d colors blocked
            else if (!exact_fill(s, R))
                throw Infeasible("right neighborhood admits no coloring");
        }
    };

    for (int L = 1; L <= n; ++L) {
        if (!zone[L - 1]) continue;
        int R = L;
        while (R < n && zone[R]) ++R;
        std::vector<int> col_backup(col.begin() + (L - 1), col.begin() + R);
        std::vector<int> residual_backup = residual;
        try {
            repair(L, R);
        } catch (const Infeasible&) {
            // The structured repair committed to colors that cannot be
            // finished. The whole-cluster exact solve is authoritative: the
            // fixed context sits at distance >= b from every precolored
            // vertex, which leaves enough room to morph onto any solution,
            // so failure here means the instance itself is infeasible.
            std::copy(col_backup.begin(), col_backup.end(), col.begin() + (L - 1));
            residual = residual_backup;
            if (!exact_fill(L, R))
                throw Infeasible("an erased neighborhood admits no coloring");
        }
        L = R;
    }

    // Pass 4: rebalance inside the erased zones, swapping overused colors to
    // underused ones where the distance constraint allows it.
    for (int v = 1; v <= n; ++v) {
        if (!zone[v - 1] || inst.precoloring[v - 1] != 0) continue;
        int cur = col[v - 1];
        if (residual[cur - 1] >= 0) continue;
        for (int a = 1; a <= c; ++a) {
            if (residual[a - 1] <= 0 || !refill.clear(v, a)) continue;
            ++residual[cur - 1];
            refill.place(v, a);
            break;
        }
    }

    ApproxReport report;
    report.bound = 4LL * p * (d + 1) * (d + 1) + p;
    report.per_color_deviations.resize(c);
    std::vector<int> fresh(c, 0);
    for (int v = 1; v <= n; ++v)
        if (inst.precoloring[v - 1] == 0) ++fresh[col[v - 1] - 1];
    for (int a = 1; a <= c; ++a) {
        report.per_color_deviations[a - 1] = inst.demands[a - 1] - fresh[a - 1];
        report.achieved_error += std::abs(report.per_color_deviations[a - 1]);
    }
    return ApproxResult{Coloring{std::move(col)}, std::move(report)};
}

}  // namespace dpath
