#include "dpath/window_dp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace dpath {

namespace {

// Packs a DP state (window colors followed by capped counts) into a string
// key for deduplication. Colors and counts both fit in a byte for every
// instance size this solver is used on; wider values fall back to two bytes.
std::string pack_key(const std::vector<int>& window, const std::vector<int>& counts) {
    std::string key;
    key.reserve(2 * (window.size() + counts.size()));
    auto put = [&key](int x) {
        key.push_back(static_cast<char>(x & 0xff));
        key.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    for (int w : window) put(w);
    for (int x : counts) put(x);
    return key;
}

struct DpEntry {
    std::vector<int> window;
    std::vector<int> counts;
    int parent;  // index into previous level, -1 at level 0
    int color;   // color placed at this level's vertex
};

}  // namespace

std::optional<Coloring> solve_dped_dp(const DPEDInstance& inst, const WindowDpOptions& opts) {
    validate(inst);
    if (inst.topology.num_paths() != 1)
        throw NotSinglePath("window DP requires a single path");
    int n = inst.topology.n;
    int d = inst.d;
    int c = inst.num_colors;

    // Quota per color: demanded fresh uses plus precolored occurrences.
    std::vector<int> quota(c);
    long long quota_sum = 0;
    for (int a = 1; a <= c; ++a) quota[a - 1] = inst.demands[a - 1];
    for (int x : inst.precoloring)
        if (x != 0) ++quota[x - 1];
    for (int q : quota) quota_sum += q;
    if (quota_sum != n) return std::nullopt;

    std::vector<std::vector<DpEntry>> levels(n + 1);
    levels[0].push_back({{}, std::vector<int>(c, 0), -1, 0});
    long long total_states = 1;

    for (int i = 1; i <= n; ++i) {
        std::unordered_map<std::string, int> seen;
        int forced = inst.precoloring[i - 1];
        for (int prev = 0; prev < static_cast<int>(levels[i - 1].size()); ++prev) {
            const DpEntry& e = levels[i - 1][prev];
            for (int a = (forced ? forced : 1); a <= (forced ? forced : c); ++a) {
                if (e.counts[a - 1] >= quota[a - 1]) continue;
                if (std::find(e.window.begin(), e.window.end(), a) != e.window.end())
                    continue;
                std::vector<int> window = e.window;
                window.push_back(a);
                if (static_cast<int>(window.size()) > std::min(i, d))
                    window.erase(window.begin());
                std::vector<int> counts = e.counts;
                ++counts[a - 1];
                auto [it, inserted] = seen.try_emplace(pack_key(window, counts),
                                                       static_cast<int>(levels[i].size()));
                if (!inserted) continue;
                levels[i].push_back({std::move(window), std::move(counts), prev, a});
                if (++total_states > opts.max_states)
                    throw BudgetExceeded("window DP exceeded " +
                                         std::to_string(opts.max_states) + " states");
            }
        }
        if (levels[i].empty()) return std::nullopt;
    }

    // Any surviving level-n state has every count at quota (counts sum to n
    // and are capped), so it is a solution; take the first.
    std::vector<int> col(n);
    int idx = 0;
    for (int i = n; i >= 1; --i) {
        col[i - 1] = levels[i][idx].color;
        idx = levels[i][idx].parent;
    }
    return Coloring{std::move(col)};
}

namespace detail {

std::optional<std::vector<int>> dlc_single_path(const std::vector<std::vector<int>>& lists,
                                                int d, bool prune) {
    int n = static_cast<int>(lists.size());
    std::vector<std::vector<int>> menu(n);
    for (int i = 0; i < n; ++i) {
        menu[i] = lists[i];
        if (prune && static_cast<int>(menu[i].size()) > 2 * d + 1)
            menu[i].resize(2 * d + 1);  // lists are sorted; keep the smallest
    }

    struct Entry {
        std::vector<int> window;
        int parent;
        int color;
    };
    std::vector<std::vector<Entry>> levels(n + 1);
    levels[0].push_back({{}, -1, 0});

    for (int i = 1; i <= n; ++i) {
        std::unordered_map<std::string, int> seen;
        for (int prev = 0; prev < static_cast<int>(levels[i - 1].size()); ++prev) {
            const Entry& e = levels[i - 1][prev];
            for (int a : menu[i - 1]) {
                if (std::find(e.window.begin(), e.window.end(), a) != e.window.end())
                    continue;
                std::vector<int> window = e.window;
                window.push_back(a);
                if (static_cast<int>(window.size()) > std::min(i, d))
                    window.erase(window.begin());
                auto [it, inserted] = seen.try_emplace(pack_key(window, {}),
                                                       static_cast<int>(levels[i].size()));
                if (!inserted) continue;
                levels[i].push_back({std::move(window), prev, a});
            }
        }
        if (levels[i].empty()) return std::nullopt;
    }

    std::vector<int> col(n);
    int idx = 0;
    for (int i = n; i >= 1; --i) {
        col[i - 1] = levels[i][idx].color;
        idx = levels[i][idx].parent;
    }
    return col;
}

}  // namespace detail

std::optional<Coloring> solve_dlc_dp(const LCDInstance& inst) {
    validate(inst);
    if (inst.has_demands())
        throw DemandsUnsupported("list-coloring DP does not handle demands");
    std::vector<int> col(inst.topology.n, 0);
    for (int p = 0; p < inst.topology.num_paths(); ++p) {
        int s = inst.topology.starts[p];
        std::vector<std::vector<int>> lists(inst.lists.begin() + (s - 1),
                                            inst.lists.begin() + (s - 1) + inst.topology.lengths[p]);
        auto part = detail::dlc_single_path(lists, inst.d, true);
        if (!part) return std::nullopt;
        std::copy(part->begin(), part->end(), col.begin() + (s - 1));
    }
    return Coloring{std::move(col)};
}

}  // namespace dpath
