#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dpath/nfa.hpp"
#include "dpath/oracle.hpp"
#include "test_helpers.hpp"

using namespace dpath;

TEST_CASE("distance automaton sizes and structure") {
    // Repeat-free windows over 4 letters, length <= 2: 1 + 4 + 12 states.
    Nfa nfa = build_distance_nfa(4, 2);
    CHECK(nfa.num_states == 17);
    CHECK(nfa.alphabet_size == 4);
    for (char a : nfa.accepting) CHECK(a == 1);

    CHECK(build_distance_nfa(2, 0).num_states == 1);
    CHECK(build_distance_nfa(3, 1).num_states == 4);
}

TEST_CASE("distance automaton accepts exactly the window-repeat-free words") {
    for (int k = 1; k <= 3; ++k)
        for (int t = 0; t <= 2; ++t) {
            Nfa nfa = build_distance_nfa(k, t);
            // All words of length <= 4 over 1..k.
            for (int len = 0; len <= 4; ++len) {
                std::vector<int> word(len, 1);
                for (;;) {
                    bool repeat_free = true;
                    for (int i = 0; i < len && repeat_free; ++i)
                        for (int j = i + 1; j <= std::min(len - 1, i + t); ++j)
                            if (word[i] == word[j]) repeat_free = false;
                    CHECK(helpers::nfa_accepts(nfa, word) == repeat_free);
                    int i = 0;
                    while (i < len && ++word[i] > k) word[i++] = 1;
                    if (i == len) break;
                }
            }
        }
}

TEST_CASE("constraint-chained automaton expands the target as pinned") {
    Nfa nfa = build_distance_nfa(2, 1);
    ParikhQuery query{{2, 1}, {{1, 2}}};
    auto cmpl = build_cmpl_automaton(nfa, query);
    CHECK(cmpl.target == std::vector<int>{2, 1, 0, 3});
    CHECK(cmpl.nfa.alphabet_size == 4);

    SUBCASE("conflicting constraints throw") {
        query.constraints = {{2, 1}, {2, 2}};
        CHECK_THROWS_AS(build_cmpl_automaton(nfa, query), ConstraintConflict);
    }
    SUBCASE("positions past m+1 throw") {
        query.constraints = {{5, 1}};
        CHECK_THROWS_AS(build_cmpl_automaton(nfa, query), PositionOutOfRange);
    }
    SUBCASE("duplicate consistent constraints collapse") {
        query.constraints = {{1, 2}, {1, 2}};
        CHECK(build_cmpl_automaton(nfa, query).target == std::vector<int>{2, 1, 0, 3});
    }
}

TEST_CASE("Parikh membership on the pinned examples") {
    Nfa nfa = build_distance_nfa(3, 2);
    auto got = decide_parikh_membership(nfa, {2, 2, 2});
    REQUIRE(got);
    CHECK(*got == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK_FALSE(decide_parikh_membership(nfa, {3, 0, 0}));

    SUBCASE("budget") {
        ParikhOptions opts;
        opts.max_total = 5;
        CHECK_THROWS_AS(decide_parikh_membership(nfa, {2, 2, 2}, opts), BudgetExceeded);
    }
    SUBCASE("empty target is the empty word") {
        auto empty = decide_parikh_membership(nfa, {0, 0, 0});
        REQUIRE(empty);
        CHECK(empty->empty());
    }
}

TEST_CASE("chained decision agrees with the reference search") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 150; ++iter) {
        int k = helpers::bounded(rng, 1, 2);
        int t = helpers::bounded(rng, 0, 1);
        Nfa nfa = build_distance_nfa(k, t);
        ParikhQuery query;
        query.target.resize(k);
        int total = 0;
        for (int& x : query.target) total += x = helpers::bounded(rng, 0, 2);
        int p = helpers::bounded(rng, 0, 2);
        std::set<int> used;
        for (int j = 0; j < p; ++j) {
            int pos = helpers::bounded(rng, 1, std::max(1, total));
            if (!used.insert(pos).second) continue;
            query.constraints.emplace_back(pos, helpers::bounded(rng, 1, k));
        }
        std::sort(query.constraints.begin(), query.constraints.end());
        auto cmpl = build_cmpl_automaton(nfa, query);
        auto chained = decide_parikh_membership(cmpl.nfa, cmpl.target);
        auto reference = oracle_cmpl(nfa, query.target, query.constraints);
        CHECK(chained.has_value() == reference.has_value());
        if (!chained) continue;
        // Odd letters of the interleaved witness form a valid constrained word.
        std::vector<int> word;
        for (size_t i = 0; i < chained->size(); i += 2) word.push_back((*chained)[i]);
        CHECK(helpers::nfa_accepts(nfa, word));
        std::vector<int> counts(k, 0);
        for (int a : word) ++counts[a - 1];
        CHECK(counts == query.target);
        for (auto [pos, letter] : query.constraints) CHECK(word[pos - 1] == letter);
    }
}

TEST_CASE("FPT solver matches the window DP examples") {
    DPEDInstance inst;
    inst.topology = PathTopology({3});
    inst.num_colors = 2;
    inst.d = 1;
    inst.precoloring = {0, 1, 0};
    inst.demands = {0, 2};
    auto got = solve_dped_fpt(inst);
    REQUIRE(got);
    CHECK(got->colors == std::vector<int>{2, 1, 2});

    SUBCASE("budget applies to the path length") {
        ParikhOptions opts;
        opts.max_total = 2;
        CHECK_THROWS_AS(solve_dped_fpt(inst, opts), BudgetExceeded);
    }
}

TEST_CASE("transition dump is stable") {
    Nfa nfa = build_distance_nfa(1, 1);
    std::string dump = dump_nfa(nfa);
    CHECK(dump.find("states 2") != std::string::npos);
    CHECK(dump == dump_nfa(nfa));
}
