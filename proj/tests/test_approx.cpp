#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "dpath/approx.hpp"
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

long long deviation(const DPEDInstance& inst, const Coloring& col) {
    std::vector<long long> fresh(inst.num_colors, 0);
    for (int v = 1; v <= inst.topology.n; ++v)
        if (inst.precoloring[v - 1] == 0) ++fresh[col.colors[v - 1] - 1];
    long long total = 0;
    for (int a = 0; a < inst.num_colors; ++a)
        total += std::abs(fresh[a] - inst.demands[a]);
    return total;
}

}  // namespace

TEST_CASE("block morphing produces a valid single-step schedule") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        int d = helpers::bounded(rng, 0, 3);
        int c = helpers::bounded(rng, d + 2, d + 5);
        std::vector<int> colors(c);
        std::iota(colors.begin(), colors.end(), 1);
        std::shuffle(colors.begin(), colors.end(), rng);
        std::vector<int> start(colors.begin(), colors.begin() + d + 1);
        std::shuffle(colors.begin(), colors.end(), rng);
        std::vector<int> target(colors.begin(), colors.begin() + d + 1);

        auto blocks = detail::morph_blocks(start, target, c);
        CHECK(blocks.size() == 2u * (d + 1));
        std::vector<int> flat = start;
        for (const auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
        flat.insert(flat.end(), target.begin(), target.end());
        CHECK(verify_d_distance(PathTopology({static_cast<int>(flat.size())}),
                                Coloring{flat}, d));
        // Adjacent snapshots differ in at most one position.
        std::vector<int> prev = start;
        auto steps = blocks;
        steps.push_back(target);
        for (const auto& b : steps) {
            int diff = 0;
            for (int i = 0; i <= d; ++i) diff += b[i] != prev[i];
            CHECK(diff <= 1);
            prev = b;
        }
    }
    CHECK_THROWS_AS(detail::morph_blocks({1, 2}, {2, 1}, 2), TooFewColors);
}

TEST_CASE("approximation is exact without precoloring") {
    auto inst = dped(6, 3, 1, std::vector<int>(6, 0), {2, 2, 2});
    auto result = solve_approx(inst);
    CHECK(result.report.achieved_error == 0);
    CHECK(result.report.bound == 0);
    CHECK(verify_dped_solution(inst, result.coloring));
}

TEST_CASE("approximation on the pinned single-precolor example") {
    // 199 free vertices after fixing vertex 100 to color 2.
    auto inst = dped(200, 3, 1, std::vector<int>(200, 0), {67, 66, 66});
    inst.precoloring[99] = 2;
    auto result = solve_approx(inst);
    CHECK(result.report.bound == 17);  // 4 * 1 * (1+1)^2 + 1
    CHECK(result.report.achieved_error <= 17);
    CHECK(verify_d_distance(inst.topology, result.coloring, inst.d));
    CHECK(result.coloring.colors[99] == 2);
    CHECK(deviation(inst, result.coloring) == result.report.achieved_error);
}

TEST_CASE("approximation guards") {
    CHECK_THROWS_AS(solve_approx(dped(4, 3, 1, {1, 1, 0, 0}, {1, 1, 0})), Infeasible);
    CHECK_THROWS_AS(solve_approx(dped(4, 2, 2, std::vector<int>(4, 0), {2, 2})), TooFewColors);
    DPEDInstance two = dped(4, 3, 1, std::vector<int>(4, 0), {2, 2, 0});
    two.topology = PathTopology({2, 2});
    CHECK_THROWS_AS(solve_approx(two), NotSinglePath);
}

TEST_CASE("approximation respects the bound on random feasible instances") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 120; ++iter) {
        int d = helpers::bounded(rng, 0, 3);
        int c = helpers::bounded(rng, d + 2, d + 4);
        int n = helpers::bounded(rng, 30, 300);
        int p = helpers::bounded(rng, 0, 4);
        // Draw a valid witness coloring, expose p vertices, demand the rest.
        std::vector<int> col(n, 0);
        for (int v = 1; v <= n; ++v) {
            std::vector<int> menu;
            for (int a = 1; a <= c; ++a) {
                bool blocked = false;
                for (int u = std::max(1, v - d); u < v && !blocked; ++u)
                    blocked = col[u - 1] == a;
                if (!blocked) menu.push_back(a);
            }
            col[v - 1] = menu[helpers::bounded(rng, 0, static_cast<int>(menu.size()) - 1)];
        }
        DPEDInstance inst = dped(n, c, d, std::vector<int>(n, 0), std::vector<int>(c, 0));
        for (int i = 0; i < p; ++i) {
            int v = helpers::bounded(rng, 1, n);
            inst.precoloring[v - 1] = col[v - 1];
        }
        for (int v = 1; v <= n; ++v)
            if (inst.precoloring[v - 1] == 0) ++inst.demands[col[v - 1] - 1];

        auto result = solve_approx(inst);
        CHECK(verify_d_distance(inst.topology, result.coloring, inst.d));
        for (int v = 1; v <= n; ++v)
            if (inst.precoloring[v - 1] != 0)
                CHECK(result.coloring.colors[v - 1] == inst.precoloring[v - 1]);
        CHECK(result.report.achieved_error <= result.report.bound);
        CHECK(deviation(inst, result.coloring) == result.report.achieved_error);
    }
}
