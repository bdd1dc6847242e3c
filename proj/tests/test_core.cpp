#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dpath/core.hpp"

using namespace dpath;

TEST_CASE("path topology numbers vertices consecutively") {
    PathTopology t({3, 1, 2});
    CHECK(t.n == 6);
    CHECK(t.starts == std::vector<int>{1, 4, 5});
    CHECK(t.path_of(1) == 0);
    CHECK(t.path_of(3) == 0);
    CHECK(t.path_of(4) == 1);
    CHECK(t.path_of(6) == 2);
    CHECK_FALSE(t.single_path());
    CHECK(PathTopology({5}).single_path());
}

TEST_CASE("d-distance verification") {
    PathTopology path({5});
    CHECK(verify_d_distance(path, Coloring{{1, 2, 3, 1, 2}}, 2));
    CHECK_FALSE(verify_d_distance(path, Coloring{{1, 2, 1, 3, 2}}, 2));
    SUBCASE("d = 0 never conflicts") {
        CHECK(verify_d_distance(path, Coloring{{1, 1, 1, 1, 1}}, 0));
    }
    SUBCASE("distance is infinite across paths") {
        PathTopology two({2, 2});
        CHECK(verify_d_distance(two, Coloring{{1, 2, 2, 1}}, 3));
        CHECK_FALSE(verify_d_distance(two, Coloring{{1, 1, 2, 1}}, 1));
    }
}

TEST_CASE("partial validity ignores uncolored vertices") {
    PathTopology path({4});
    CHECK(partial_d_distance_valid(path, {1, 0, 0, 1}, 2));
    CHECK_FALSE(partial_d_distance_valid(path, {1, 0, 1, 0}, 2));
}

TEST_CASE("solution verifiers") {
    DPEDInstance inst;
    inst.topology = PathTopology({4});
    inst.num_colors = 2;
    inst.d = 1;
    inst.precoloring = {0, 0, 0, 1};
    inst.demands = {1, 2};
    CHECK(inst.num_precolored() == 1);
    CHECK(inst.num_free() == 3);
    CHECK(inst.is_demand_consistent());
    CHECK(verify_dped_solution(inst, Coloring{{2, 1, 2, 1}}));
    // Demands count newly colored vertices only: three 1s but two fresh.
    CHECK_FALSE(verify_dped_solution(inst, Coloring{{1, 2, 1, 1}}));
    CHECK_FALSE(verify_dped_solution(inst, Coloring{{2, 1, 2, 2}}));  // overrides precoloring

    LCDInstance lcd;
    lcd.topology = PathTopology({2});
    lcd.num_colors = 2;
    lcd.d = 1;
    lcd.lists = {{1, 2}, {1, 2}};
    lcd.demands = {1, 1};
    CHECK(verify_lcd_solution(lcd, Coloring{{1, 2}}));
    CHECK_FALSE(verify_lcd_solution(lcd, Coloring{{2, 2}}));
    lcd.lists = {{1}, {1, 2}};
    CHECK_FALSE(verify_lcd_solution(lcd, Coloring{{2, 1}}));  // violates list
}

TEST_CASE("validation rejects malformed instances") {
    DPEDInstance inst;
    inst.topology = PathTopology({3});
    inst.num_colors = 2;
    inst.d = 1;
    inst.precoloring = {0, 3, 0};  // color out of range
    inst.demands = {1, 1};
    CHECK_THROWS_AS(validate(inst), SemanticError);
    inst.precoloring = {0, 1, 0};
    CHECK_NOTHROW(validate(inst));
    inst.demands = {5, 5};  // inconsistent sums are legal data, not errors
    CHECK_NOTHROW(validate(inst));
    CHECK_FALSE(inst.is_demand_consistent());

    LCDInstance lcd;
    lcd.topology = PathTopology({1});
    lcd.num_colors = 2;
    lcd.lists = {{}};
    CHECK_THROWS_AS(validate(lcd), SemanticError);
    lcd.lists = {{2, 1}};  // must be sorted
    CHECK_THROWS_AS(validate(lcd), SemanticError);
    lcd.lists = {{1, 2}};
    CHECK_NOTHROW(validate(lcd));
}

TEST_CASE("non-alternating predicate") {
    LCDInstance lcd;
    lcd.topology = PathTopology({3});
    lcd.num_colors = 2;
    lcd.lists = {{1, 2}, {1}, {1, 2}};  // color 2 missing in the middle only
    CHECK_FALSE(is_non_alternating(lcd));
    lcd.lists = {{1}, {1, 2}, {2}};
    CHECK(is_non_alternating(lcd));
}
