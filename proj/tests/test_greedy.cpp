#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dpath/greedy.hpp"
#include "dpath/oracle.hpp"
#include "test_helpers.hpp"

using namespace dpath;

namespace {

DPEDInstance dped(int n, int c, int d, std::vector<int> pre, std::vector<int> dem) {
    DPEDInstance inst;
    inst.topology = PathTopology({n});
    inst.num_colors = c;
    inst.d = d;
    inst.precoloring = std::move(pre);
    inst.demands = std::move(dem);
    return inst;
}

}  // namespace

TEST_CASE("greedy solves the pinned examples") {
    auto got = solve_greedy(dped(5, 3, 2, {0, 0, 0, 0, 0}, {2, 2, 1}));
    REQUIRE(got);
    CHECK(got->colors == std::vector<int>{1, 2, 3, 1, 2});

    got = solve_greedy(dped(4, 2, 1, {0, 0, 0, 1}, {1, 2}));
    REQUIRE(got);
    CHECK(got->colors == std::vector<int>{2, 1, 2, 1});
}

TEST_CASE("greedy rejects instances outside its class") {
    CHECK_THROWS_AS(solve_greedy(dped(3, 2, 1, {0, 1, 0}, {1, 1})),
                    NotEndPrecolored);
    DPEDInstance two = dped(4, 2, 1, {0, 0, 0, 0}, {2, 2});
    two.topology = PathTopology({2, 2});
    CHECK_THROWS_AS(solve_greedy(two), NotSinglePath);
}

TEST_CASE("end-precolored view shapes") {
    auto view = EndPrecoloredView::from(dped(5, 3, 1, {1, 2, 0, 0, 1}, {1, 1, 0}));
    CHECK(view.prefix_end == 2);
    CHECK(view.suffix_begin == 5);
    view = EndPrecoloredView::from(dped(3, 2, 1, {0, 0, 0}, {2, 1}));
    CHECK(view.prefix_end == 0);
    CHECK(view.suffix_begin == 4);
}

TEST_CASE("greedy is complete on a small exhaustive family") {
    using helpers::demand_vectors;
    // End-precolorings with at most one vertex per side; n <= 5, c <= 3, d <= 2.
    for (int n = 1; n <= 5; ++n)
        for (int c = 1; c <= 3; ++c)
            for (int d = 0; d <= 2; ++d)
                for (int left = 0; left <= (n >= 1 ? 1 : 0); ++left)
                    for (int right = 0; right <= (n >= 2 ? 1 : 0); ++right) {
                        if (left + right > n) continue;
                        for (int lc = 1; lc <= (left ? c : 1); ++lc)
                            for (int rc = 1; rc <= (right ? c : 1); ++rc) {
                                std::vector<int> pre(n, 0);
                                if (left) pre[0] = lc;
                                if (right) pre[n - 1] = rc;
                                int free_count = n - left - right;
                                for (auto& dem : demand_vectors(c, free_count)) {
                                    auto inst = dped(n, c, d, pre, dem);
                                    auto greedy = solve_greedy(inst);
                                    auto exact = oracle_dped(inst);
                                    CHECK(greedy.has_value() == exact.has_value());
                                    if (greedy) CHECK(verify_dped_solution(inst, *greedy));
                                }
                            }
                    }
}

TEST_CASE("greedy handles long paths quickly") {
    const int n = 100000;
    DPEDInstance inst = dped(n, 4, 3, std::vector<int>(n, 0), {n / 4, n / 4, n / 4, n / 4});
    auto got = solve_greedy(inst);
    REQUIRE(got);
    CHECK(verify_dped_solution(inst, *got));
}
