#include "dpath/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace dpath {

namespace {

// Shared DFS for the two coloring oracles. `candidates` yields the color
// menu of a vertex in ascending order. When demands are present, the search
// additionally prunes on per-color availability: the remaining demand of a
// color can never exceed the number of still-free vertices that list it.
struct ColoringSearch {
    const PathTopology& topology;
    int d;
    std::vector<int> col;        // current assignment, 0 = free
    std::vector<int> remaining;  // remaining demand per color; empty = no demands
    std::vector<int> free_vertices;
    std::vector<std::vector<int>> avail;  // avail[idx][c-1]: suffix availability

    bool conflicts(int v, int color) const {
        if (d == 0) return false;
        int p = topology.path_of(v);
        int lo = std::max(topology.starts[p], v - d);
        int hi = std::min(topology.starts[p] + topology.lengths[p] - 1, v + d);
        for (int u = lo; u <= hi; ++u)
            if (u != v && col[u - 1] == color) return true;
        return false;
    }

    template <typename Candidates>
    void build_avail(int num_colors, const Candidates& candidates) {
        if (remaining.empty()) return;
        avail.assign(free_vertices.size() + 1, std::vector<int>(num_colors, 0));
        for (int idx = static_cast<int>(free_vertices.size()) - 1; idx >= 0; --idx) {
            avail[idx] = avail[idx + 1];
            for (int color : candidates(free_vertices[idx])) ++avail[idx][color - 1];
        }
    }

    bool demand_reachable(size_t idx) const {
        if (remaining.empty()) return true;
        for (size_t c = 0; c < remaining.size(); ++c)
            if (remaining[c] > avail[idx][c]) return false;
        return true;
    }

    template <typename Candidates>
    bool dfs(size_t idx, const Candidates& candidates) {
        if (idx == free_vertices.size()) return true;  // demands hit zero by counting
        if (!demand_reachable(idx)) return false;
        int v = free_vertices[idx];
        for (int color : candidates(v)) {
            if (!remaining.empty() && remaining[color - 1] == 0) continue;
            if (conflicts(v, color)) continue;
            col[v - 1] = color;
            if (!remaining.empty()) --remaining[color - 1];
            if (dfs(idx + 1, candidates)) return true;
            if (!remaining.empty()) ++remaining[color - 1];
            col[v - 1] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> oracle_dped(const DPEDInstance& inst, const OracleOptions& opts) {
    validate(inst);
    int n = inst.topology.n;
    ColoringSearch search{inst.topology, inst.d, inst.precoloring, inst.demands, {}, {}};
    for (int v = 1; v <= n; ++v)
        if (inst.precoloring[v - 1] == 0) search.free_vertices.push_back(v);
    if (static_cast<int>(search.free_vertices.size()) > opts.max_free)
        throw BudgetExceeded("oracle_dped: " + std::to_string(search.free_vertices.size()) +
                             " free vertices exceed budget " + std::to_string(opts.max_free));
    if (!partial_d_distance_valid(inst.topology, inst.precoloring, inst.d)) return std::nullopt;
    long long total = std::accumulate(inst.demands.begin(), inst.demands.end(), 0LL);
    if (total != static_cast<long long>(search.free_vertices.size())) return std::nullopt;

    std::vector<int> all_colors(inst.num_colors);
    std::iota(all_colors.begin(), all_colors.end(), 1);
    auto candidates = [&](int) -> const std::vector<int>& { return all_colors; };
    search.build_avail(inst.num_colors, candidates);
    if (!search.dfs(0, candidates)) return std::nullopt;
    return Coloring{std::move(search.col)};
}

std::optional<Coloring> oracle_lcd(const LCDInstance& inst, const OracleOptions& opts) {
    validate(inst);
    int n = inst.topology.n;
    if (n > opts.max_free)
        throw BudgetExceeded("oracle_lcd: " + std::to_string(n) + " vertices exceed budget " +
                             std::to_string(opts.max_free));
    ColoringSearch search{inst.topology, inst.d, std::vector<int>(n, 0), inst.demands, {}, {}};
    search.free_vertices.resize(n);
    std::iota(search.free_vertices.begin(), search.free_vertices.end(), 1);
    if (inst.has_demands()) {
        long long total = std::accumulate(inst.demands.begin(), inst.demands.end(), 0LL);
        if (total != n) return std::nullopt;
    }
    auto candidates = [&](int v) -> const std::vector<int>& { return inst.lists[v - 1]; };
    search.build_avail(inst.num_colors, candidates);
    if (!search.dfs(0, candidates)) return std::nullopt;
    return Coloring{std::move(search.col)};
}

std::optional<std::vector<int>> oracle_cmpl(const Nfa& nfa, const std::vector<int>& target,
                                            const std::vector<std::pair<int, int>>& constraints,
                                            const OracleOptions& opts) {
    long long m = std::accumulate(target.begin(), target.end(), 0LL);
    if (m > opts.max_word_length)
        throw BudgetExceeded("oracle_cmpl: target sum " + std::to_string(m) +
                             " exceeds budget " + std::to_string(opts.max_word_length));

    std::vector<int> fixed(static_cast<size_t>(m) + 1, 0);  // fixed[i] = forced letter at i
    for (const auto& [pos, letter] : constraints) {
        if (pos < 1 || letter < 1 || letter > nfa.alphabet_size)
            throw InconsistentConstraints("oracle_cmpl: malformed constraint");
        for (const auto& [pos2, letter2] : constraints)
            if (pos2 == pos && letter2 != letter)
                throw InconsistentConstraints("oracle_cmpl: position " + std::to_string(pos) +
                                              " constrained to two letters");
        if (pos > m) return std::nullopt;  // no word of length m satisfies this
        fixed[pos] = letter;
    }

    // Per-(state, letter) successor lists.
    std::vector<std::vector<std::vector<int>>> next(
        nfa.num_states, std::vector<std::vector<int>>(nfa.alphabet_size));
    for (const auto& t : nfa.transitions) next[t[0]][t[1] - 1].push_back(t[2]);

    std::vector<int> word;
    std::vector<int> remaining = target;
    std::vector<char> states(nfa.num_states, 0);
    states[nfa.initial] = 1;

    // DFS over positions, letters ascending; first completed word is the
    // lexicographic minimum.
    auto dfs = [&](auto&& self, long long pos, const std::vector<char>& cur) -> bool {
        if (pos > m) {
            for (int q = 0; q < nfa.num_states; ++q)
                if (cur[q] && nfa.accepting[q]) return true;
            return false;
        }
        for (int letter = 1; letter <= nfa.alphabet_size; ++letter) {
            if (fixed[pos] != 0 && fixed[pos] != letter) continue;
            if (remaining[letter - 1] == 0) continue;
            std::vector<char> succ(nfa.num_states, 0);
            bool any = false;
            for (int q = 0; q < nfa.num_states; ++q)
                if (cur[q])
                    for (int to : next[q][letter - 1]) succ[to] = 1, any = true;
            if (!any) continue;
            --remaining[letter - 1];
            word.push_back(letter);
            if (self(self, pos + 1, succ)) return true;
            word.pop_back();
            ++remaining[letter - 1];
        }
        return false;
    };
    if (!dfs(dfs, 1, states)) return std::nullopt;
    return word;
}

}  // namespace dpath
