#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpath/core.hpp"

namespace dpath {

// Finite automaton over an integer alphabet with letters 1..alphabet_size.
// States are indexed 0..num_states-1.
struct Nfa {
    int alphabet_size = 0;
    int num_states = 0;
    int initial = 0;
    std::vector<char> accepting;                       // size num_states
    std::vector<std::array<int, 3>> transitions;       // (from, letter, to)

    bool operator==(const Nfa& o) const {
        return alphabet_size == o.alphabet_size && num_states == o.num_states &&
               initial == o.initial && accepting == o.accepting &&
               transitions == o.transitions;
    }
};

// Target occurrence vector plus positional letter constraints (1-based
// positions). Duplicate positions with differing letters are representable;
// they are rejected at solve time.
struct ParikhQuery {
    std::vector<int> target;                      // size == alphabet size
    std::vector<std::pair<int, int>> constraints; // (position, letter)

    bool operator==(const ParikhQuery& o) const {
        return target == o.target && constraints == o.constraints;
    }
};

struct NfaQuery {
    Nfa nfa;
    ParikhQuery query;

    bool operator==(const NfaQuery& o) const { return nfa == o.nfa && query == o.query; }
};

// Automaton accepting exactly the words over 1..k with no two equal letters
// within window t (no repeats at distance <= t). States are the repeat-free
// words of length <= t; the automaton is in fact deterministic and every
// state is accepting.
Nfa build_distance_nfa(int alphabet_size, int window);

struct CmplAutomaton {
    Nfa nfa;                     // alphabet k + p + 1 with counter letters
    std::vector<int> target;     // expanded target vector b'
};

// Interleaves counter letters and chains one automaton copy per constraint,
// turning constrained membership into plain Parikh membership.
// Throws ConstraintConflict if two constraints fix a position differently,
// PositionOutOfRange if a constraint position exceeds sum(b) + 1.
CmplAutomaton build_cmpl_automaton(const Nfa& nfa, const ParikhQuery& query);

struct ParikhOptions {
    int max_total = 32;  // cap on sum of the target vector
};

// Exact decision with witness: a word of L(nfa) with the given letter counts,
// lexicographically smallest, or absent. Memoized search over
// (state, residual-count) pairs; exponential only in the target sum.
std::optional<std::vector<int>> decide_parikh_membership(const Nfa& nfa,
                                                         const std::vector<int>& target,
                                                         const ParikhOptions& opts = {});

// Exact FPT solver for single-path DPED via the distance automaton and
// constrained Parikh membership.
std::optional<Coloring> solve_dped_fpt(const DPEDInstance& inst,
                                       const ParikhOptions& opts = {});

// Line-based transition dump: "from letter to" per line, preceded by a
// small header. Debug aid only; not part of the instance file format.
std::string dump_nfa(const Nfa& nfa);

}  // namespace dpath
