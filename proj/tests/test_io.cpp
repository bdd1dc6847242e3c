#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "dpath/io.hpp"

using namespace dpath;

namespace {

Instance reparse(const Instance& inst) {
    std::istringstream in(serialize_instance(inst));
    return parse_instance(in);
}

}  // namespace

TEST_CASE("parsing the documented example") {
    std::istringstream in(
        "# demo instance\n"
        "DPED\n"
        "paths 1 4\n"
        "colors 2\n"
        "d 1\n"
        "\n"
        "precolor 1\n"
        "4 1\n"
        "demands\n"
        "1 1\n"
        "2 2\n");
    Instance inst = parse_instance(in);
    CHECK(kind_of(inst) == "DPED");
    const auto& dped = std::get<DPEDInstance>(inst);
    CHECK(dped.topology.lengths == std::vector<int>{4});
    CHECK(dped.num_colors == 2);
    CHECK(dped.d == 1);
    CHECK(dped.precoloring == std::vector<int>{0, 0, 0, 1});
    CHECK(dped.demands == std::vector<int>{1, 2});
}

TEST_CASE("round trips for every kind") {
    DPEDInstance dped;
    dped.topology = PathTopology({2, 3});
    dped.num_colors = 3;
    dped.d = 2;
    dped.precoloring = {0, 1, 0, 0, 2};
    dped.demands = {1, 1, 1};
    CHECK(reparse(dped) == Instance{dped});

    DpeInstance dpe;
    dpe.topology = PathTopology({4});
    dpe.num_colors = 2;
    dpe.d = 1;
    dpe.precoloring = {1, 0, 0, 2};
    CHECK(reparse(dpe) == Instance{dpe});

    LCDInstance lcd;
    lcd.topology = PathTopology({3});
    lcd.num_colors = 3;
    lcd.d = 1;
    lcd.lists = {{1, 2}, {2}, {1, 3}};
    lcd.demands = {1, 1, 1};
    CHECK(reparse(lcd) == Instance{lcd});
    lcd.demands.clear();
    CHECK(reparse(lcd) == Instance{lcd});

    MssInstance mss;
    mss.k = 2;
    mss.items = {{1, 0}, {2, 2}};
    mss.target = {3, 2};
    CHECK(reparse(mss) == Instance{mss});

    UnitIntervalPce pce;
    pce.num_colors = 2;
    pce.left = {0, 3, 4};
    pce.precoloring = {1, 0, 2};
    CHECK(reparse(pce) == Instance{pce});

    NfaQuery nfaq;
    nfaq.nfa = build_distance_nfa(2, 1);
    nfaq.query.target = {2, 1};
    nfaq.query.constraints = {{1, 2}, {3, 1}};
    CHECK(reparse(nfaq) == Instance{nfaq});
}

TEST_CASE("lists are sorted on parse") {
    std::istringstream in(
        "LCD\n"
        "paths 1 1\n"
        "colors 3\n"
        "d 1\n"
        "lists\n"
        "3 3 1 2\n"
        "nodemands\n");
    Instance inst = parse_instance(in);
    CHECK(std::get<LCDInstance>(inst).lists == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad_kind("widget\n");
    CHECK_THROWS_AS(parse_instance(bad_kind), ParseError);

    std::istringstream truncated("DPED\npaths 1 4\ncolors 2\n");
    CHECK_THROWS_AS(parse_instance(truncated), ParseError);

    std::istringstream bad_number("DPED\npaths 1 x\n");
    try {
        parse_instance(bad_number);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("semantic errors for well-formed but inconsistent data") {
    std::istringstream out_of_range(
        "DPED\npaths 1 2\ncolors 2\nd 1\nprecolor 1\n3 1\ndemands\n1 1\n2 1\n");
    CHECK_THROWS_AS(parse_instance(out_of_range), Error);
}
