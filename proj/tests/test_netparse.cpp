#include "doctest.h"

#include "endo/families.hpp"
#include "endo/netparse.hpp"

#include <fstream>
#include <sstream>

using namespace endo;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("parse the toy and Lotka-Volterra listings") {
    ReactionNetwork toy = parse_network("X1 -> 2 X2\n2 X2 -> X1\n2 X2 -> X2 + X3\nX2 + X3 -> X1\n");
    ReactionNetwork expected = generate({Family::Toy});
    CHECK(build_matrices(toy).gamma == build_matrices(expected).gamma);
    CHECK(build_matrices(toy).y_source == build_matrices(expected).y_source);

    ReactionNetwork lv = parse_network("X -> 2 X\nX + Y -> 2 Y\nY -> 0");
    CHECK(lv.species_count() == 2);
    CHECK(lv.reaction_count() == 3);
    CHECK(lv.reactions()[2].target.is_zero());
}

TEST_CASE("zero complex, fractions, reversible arrows and pragmas") {
    ReactionNetwork n = parse_network("# name: demo\n# species: B A\n0 -> A\n1/2 A + B <-> 2 B # tail\n");
    CHECK(n.name() == "demo");
    CHECK(n.species()[0].name == "B");
    CHECK(n.reaction_count() == 3);
    CHECK(n.reactions()[0].source.is_zero());
    CHECK(n.reactions()[1].source.coefficient(1) == Rational(1, 2));
    CHECK(n.reactions()[2].source == n.reactions()[1].target);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_network("A -> B\nA -> B + @\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() >= 9);
    }
    CHECK_THROWS_AS(parse_network("A -> A"), ParseError);
    CHECK_THROWS_AS(parse_network("A B"), ParseError);
}

TEST_CASE("serialize round trip") {
    ReactionNetwork toy = generate({Family::Toy});
    std::string text = serialize_network(toy);
    CHECK(parse_network(text) == toy);
    CHECK(serialize_network(ReactionNetwork()).empty());
    for (Family f : all_families()) {
        ReactionNetwork net = generate({f, 2, 1, 1, 1});
        CHECK(parse_network(serialize_network(net)) == net);
    }
}

TEST_CASE("futile cycle golden file") {
    std::string golden = read_file(ENDO_TEST_DATA "/futile_cycle.crn");
    REQUIRE_FALSE(golden.empty());
    CHECK(serialize_network(generate({Family::FutileCycle})) == golden);
    CHECK(parse_network(golden) == generate({Family::FutileCycle}));
}
