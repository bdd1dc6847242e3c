#include "dpath/nfa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dpath/core.hpp"

namespace dpath {

Nfa build_distance_nfa(int alphabet_size, int window) {
    if (alphabet_size < 1 || window < 0)
        throw SemanticError("distance automaton needs alphabet_size >= 1 and window >= 0");
    // States are repeat-free words of length <= window: the trace of the last
    // min(#read, window) letters. A letter is legal iff it does not occur in
    // the trace. All states accept; the automaton is deterministic (partial).
    Nfa nfa;
    nfa.alphabet_size = alphabet_size;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> states;
    auto intern = [&](const std::vector<int>& w) {
        auto [it, inserted] = index.try_emplace(w, static_cast<int>(states.size()));
        if (inserted) states.push_back(w);
        return it->second;
    };
    intern({});
    for (size_t q = 0; q < states.size(); ++q) {
        std::vector<int> cur = states[q];  // copy: states may reallocate below
        for (int a = 1; a <= alphabet_size; ++a) {
            if (std::find(cur.begin(), cur.end(), a) != cur.end()) continue;
            std::vector<int> next = cur;
            next.push_back(a);
            if (static_cast<int>(next.size()) > window) next.erase(next.begin());
            nfa.transitions.push_back({static_cast<int>(q), a, intern(next)});
        }
    }
    nfa.num_states = static_cast<int>(states.size());
    nfa.initial = 0;
    nfa.accepting.assign(nfa.num_states, 1);
    return nfa;
}

CmplAutomaton build_cmpl_automaton(const Nfa& nfa, const ParikhQuery& query) {
    if (static_cast<int>(query.target.size()) != nfa.alphabet_size)
        throw SemanticError("target vector length must equal the alphabet size");
    int k = nfa.alphabet_size;
    long long m = std::accumulate(query.target.begin(), query.target.end(), 0LL);

    // Normalize and dedupe the constraints.
    std::map<int, int> fixed;  // position -> letter
    for (const auto& [pos, letter] : query.constraints) {
        if (letter < 1 || letter > k)
            throw ConstraintConflict("constrained letter " + std::to_string(letter) +
                                     " outside the alphabet");
        if (pos < 1 || pos > m + 1)
            throw PositionOutOfRange("constrained position " + std::to_string(pos) +
                                     " outside [1, " + std::to_string(m + 1) + "]");
        auto [it, inserted] = fixed.try_emplace(pos, letter);
        if (!inserted && it->second != letter)
            throw ConstraintConflict("position " + std::to_string(pos) +
                                     " constrained to two letters");
    }
    int p = static_cast<int>(fixed.size());

    // Ensure the initial state has no incoming transitions so that the
    // in/out doubling below loses no behavior.
    Nfa base = nfa;
    bool initial_entered = false;
    for (const auto& t : base.transitions)
        if (t[2] == base.initial) initial_entered = true;
    if (initial_entered) {
        int fresh = base.num_states++;
        base.accepting.push_back(base.accepting[base.initial]);
        size_t orig = base.transitions.size();
        for (size_t i = 0; i < orig; ++i)
            if (base.transitions[i][0] == base.initial)
                base.transitions.push_back({fresh, base.transitions[i][1], base.transitions[i][2]});
        base.initial = fresh;
    }

    // Copy j (0-based) of the length-tracking automaton: every non-initial
    // state q gets an in-state and an out-state; the initial state gets only
    // an out-state. Original transitions run out-state -> in-state; counter
    // letter k+1+j runs in-state -> out-state.
    int per_copy = 2 * base.num_states - 1;
    auto in_state = [&](int q, int j) {  // q != base.initial
        int local = 2 * (q < base.initial ? q : q - 1);
        return j * per_copy + local;
    };
    auto out_state = [&](int q, int j) {
        if (q == base.initial) return j * per_copy + per_copy - 1;
        return in_state(q, j) + 1;
    };

    CmplAutomaton result;
    Nfa& out = result.nfa;
    out.alphabet_size = k + p + 1;
    out.num_states = (p + 1) * per_copy;
    out.initial = out_state(base.initial, 0);
    out.accepting.assign(out.num_states, 0);
    for (int q = 0; q < base.num_states; ++q)
        if (base.accepting[q]) out.accepting[out_state(q, p)] = 1;

    std::vector<int> letters(p);  // beta_j per constraint, in position order
    {
        int j = 0;
        for (const auto& [pos, letter] : fixed) letters[j++] = letter;
    }
    for (int j = 0; j <= p; ++j) {
        for (const auto& t : base.transitions) {
            out.transitions.push_back({out_state(t[0], j), t[1], in_state(t[2], j)});
            if (j < p && t[1] == letters[j])
                out.transitions.push_back({out_state(t[0], j), t[1], in_state(t[2], j + 1)});
        }
        for (int q = 0; q < base.num_states; ++q)
            if (q != base.initial)
                out.transitions.push_back({in_state(q, j), k + 1 + j, out_state(q, j)});
    }

    // Extended target: counter letter k+1+j must occur exactly i_{j+1}-i_j
    // times, padding with i_0 = 1 and i_{p+1} = m+1. The two halves sum to 2m.
    result.target = query.target;
    int prev = 1;
    for (const auto& [pos, letter] : fixed) {
        result.target.push_back(pos - prev);
        prev = pos;
    }
    result.target.push_back(static_cast<int>(m) + 1 - prev);
    return result;
}

namespace {

// Memoized "can we consume exactly the residual multiset from this state and
// end accepting". Residuals are indexed in mixed radix over the target.
struct ParikhSearch {
    const Nfa& nfa;
    const std::vector<int>& target;
    std::vector<int> radix_step;        // stride per letter in the residual index
    long long num_residuals = 1;
    std::vector<std::vector<std::vector<int>>> next;  // next[q][letter-1]
    std::vector<int8_t> memo_flat;      // 0 unknown, 1 yes, 2 no
    std::unordered_map<long long, int8_t> memo_map;
    bool use_flat = false;

    explicit ParikhSearch(const Nfa& a, const std::vector<int>& t) : nfa(a), target(t) {
        radix_step.resize(target.size());
        for (size_t i = 0; i < target.size(); ++i) {
            radix_step[i] = static_cast<int>(num_residuals);
            num_residuals *= target[i] + 1;
        }
        long long cells = num_residuals * nfa.num_states;
        if (cells <= 8'000'000) {
            use_flat = true;
            memo_flat.assign(static_cast<size_t>(cells), 0);
        }
        next.assign(nfa.num_states,
                    std::vector<std::vector<int>>(nfa.alphabet_size));
        for (const auto& tr : nfa.transitions) next[tr[0]][tr[1] - 1].push_back(tr[2]);
    }

    bool can(int q, std::vector<int>& residual, long long ridx) {
        long long cell = ridx * nfa.num_states + q;
        int8_t cached = use_flat ? memo_flat[cell] : memo_map[cell];
        if (cached) return cached == 1;
        bool ok = false;
        if (ridx == 0) {
            ok = nfa.accepting[q];
        } else {
            for (int a = 1; a <= nfa.alphabet_size && !ok; ++a) {
                if (residual[a - 1] == 0) continue;
                --residual[a - 1];
                for (int q2 : next[q][a - 1])
                    if (can(q2, residual, ridx - radix_step[a - 1])) {
                        ok = true;
                        break;
                    }
                ++residual[a - 1];
            }
        }
        int8_t val = ok ? 1 : 2;
        if (use_flat)
            memo_flat[cell] = val;
        else
            memo_map[cell] = val;
        return ok;
    }
};

}  // namespace

std::optional<std::vector<int>> decide_parikh_membership(const Nfa& nfa,
                                                         const std::vector<int>& target,
                                                         const ParikhOptions& opts) {
    if (static_cast<int>(target.size()) != nfa.alphabet_size)
        throw SemanticError("target vector length must equal the alphabet size");
    for (int t : target)
        if (t < 0) throw SemanticError("target counts must be nonnegative");
    long long m = std::accumulate(target.begin(), target.end(), 0LL);
    if (m > opts.max_total)
        throw BudgetExceeded("parikh membership: target sum " + std::to_string(m) +
                             " exceeds budget " + std::to_string(opts.max_total));

    ParikhSearch search(nfa, target);
    std::vector<int> residual = target;
    long long ridx = 0;
    for (size_t i = 0; i < target.size(); ++i) ridx += search.radix_step[i] * target[i];

    // The automaton is nondeterministic, so the lexicographically smallest
    // witness is traced over subsets of states, consulting the per-state memo.
    std::vector<char> cur(nfa.num_states, 0);
    cur[nfa.initial] = 1;
    {
        bool any = false;
        for (int q = 0; q < nfa.num_states && !any; ++q)
            if (cur[q] && search.can(q, residual, ridx)) any = true;
        if (!any) return std::nullopt;
    }
    std::vector<int> word;
    word.reserve(static_cast<size_t>(m));
    for (long long step = 0; step < m; ++step) {
        bool advanced = false;
        for (int a = 1; a <= nfa.alphabet_size && !advanced; ++a) {
            if (residual[a - 1] == 0) continue;
            std::vector<char> succ(nfa.num_states, 0);
            --residual[a - 1];
            long long ridx2 = ridx - search.radix_step[a - 1];
            bool viable = false;
            for (int q = 0; q < nfa.num_states; ++q)
                if (cur[q])
                    for (int q2 : search.next[q][a - 1])
                        if (!succ[q2]) {
                            succ[q2] = 1;
                            if (search.can(q2, residual, ridx2)) viable = true;
                        }
            if (viable) {
                word.push_back(a);
                cur = std::move(succ);
                ridx = ridx2;
                advanced = true;
            } else {
                ++residual[a - 1];
            }
        }
        if (!advanced) return std::nullopt;  // unreachable: viability was verified
    }
    return word;
}

std::optional<Coloring> solve_dped_fpt(const DPEDInstance& inst, const ParikhOptions& opts) {
    validate(inst);
    if (inst.topology.num_paths() != 1)
        throw NotSinglePath("the Parikh-based solver requires a single path");
    int n = inst.topology.n;
    int c = inst.num_colors;

    std::vector<int> target(c);
    long long sum = 0;
    for (int a = 1; a <= c; ++a) target[a - 1] = inst.demands[a - 1];
    for (int x : inst.precoloring)
        if (x != 0) ++target[x - 1];
    for (int t : target) sum += t;
    if (sum != n) return std::nullopt;

    ParikhQuery query;
    query.target = target;
    for (int v = 1; v <= n; ++v)
        if (inst.precoloring[v - 1] != 0)
            query.constraints.emplace_back(v, inst.precoloring[v - 1]);

    if (n > opts.max_total)
        throw BudgetExceeded("parikh solver: " + std::to_string(n) +
                             " vertices exceed budget " + std::to_string(opts.max_total));
    Nfa base = build_distance_nfa(c, inst.d);
    CmplAutomaton cmpl = build_cmpl_automaton(base, query);
    ParikhOptions inner = opts;
    inner.max_total = 2 * opts.max_total;  // the encoded word has length 2n
    auto word = decide_parikh_membership(cmpl.nfa, cmpl.target, inner);
    if (!word) return std::nullopt;

    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = (*word)[2 * i];
    return Coloring{std::move(col)};
}

std::string dump_nfa(const Nfa& nfa) {
    std::ostringstream os;
    os << "alphabet " << nfa.alphabet_size << "\n";
    os << "states " << nfa.num_states << "\n";
    os << "initial " << nfa.initial << "\n";
    os << "accepting";
    for (int q = 0; q < nfa.num_states; ++q)
        if (nfa.accepting[q]) os << ' ' << q;
    os << "\n";
    auto sorted = nfa.transitions;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& t : sorted) os << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
    return os.str();
}

}  // namespace dpath
