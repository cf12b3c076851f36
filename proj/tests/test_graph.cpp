#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iidom/graph.hpp"
#include "iidom/oracle.hpp"
#include "test_support.hpp"

using namespace iidom;
using testutil::make_graph;

TEST_CASE("parse_graph accepts a vertex without edges") {
    Graph g = parse_graph("1 0\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_graph builds a path") {
    Graph g = parse_graph("3 2\n0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse_graph reports duplicate edges with their line") {
    try {
        parse_graph("3 2\n0 1\n0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
    // same edge written in the other direction is still a duplicate
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
}

TEST_CASE("parse_graph error cases carry line numbers") {
    try {
        parse_graph("3 2\n0 1\n1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
    try {
        parse_graph("2 1\n0 5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);       // too few edges
    CHECK_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n"), ParseError);  // trailing content
    CHECK_THROWS_AS(parse_graph(""), ParseError);                 // missing header
    CHECK_THROWS_AS(parse_graph("2 -1\n"), ParseError);
}

TEST_CASE("parse_graph skips comments and blank lines") {
    Graph g = parse_graph("# a path\n\n3 2\n# middle\n0 1\n1 2\n# end\n");
    CHECK(g == parse_graph("3 2\n0 1\n1 2\n"));
}

TEST_CASE("edge line order does not affect the parsed graph") {
    Graph a = parse_graph("4 3\n0 1\n1 2\n2 3\n");
    Graph b = parse_graph("4 3\n2 3\n1 2\n0 1\n");
    CHECK(a == b);
}

TEST_CASE("parse-serialize round trip is the identity") {
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Graph g = testutil::corpus_instance(rng, 6, 5);
        CHECK(parse_graph(to_edge_list(g)) == g);
    }
    Graph empty = parse_graph("0 0\n");
    CHECK(parse_graph(to_edge_list(empty)) == empty);
}

TEST_CASE("assignment_weight sums the values") {
    CHECK(assignment_weight(Assignment(5, 0)) == 0);
    CHECK(assignment_weight({2, 0, 1}) == 3);
    CHECK(assignment_weight({1, 1, 1, 1}) == 4);
}

TEST_CASE("parse_assignment validates values") {
    CHECK(parse_assignment("0 2 0 1\n") == Assignment{0, 2, 0, 1});
    CHECK(parse_assignment("") == Assignment{});
    CHECK_THROWS_AS(parse_assignment("0 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_assignment("0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_assignment("0 x\n"), ParseError);
}

TEST_CASE("checker accepts a dominated path") {
    Graph p3 = family(Family::path, 3);
    CHECK(is_independent_italian(p3, {0, 2, 0}).ok);
}

TEST_CASE("checker rejects adjacent positive values") {
    Graph p2 = family(Family::path, 2);
    auto res = is_independent_italian(p2, {1, 1});
    REQUIRE_FALSE(res.ok);
    CHECK(res.violation.kind == CheckViolation::Kind::adjacent_positive);
    CHECK(res.violation.vertex == 0);
    CHECK(res.violation.other == 1);
}

TEST_CASE("checker scans both conditions") {
    Graph p4 = family(Family::path, 4);
    CHECK(is_independent_italian(p4, {0, 2, 0, 1}).ok);
    auto res = is_independent_italian(p4, {0, 2, 0, 0});
    REQUIRE_FALSE(res.ok);
    CHECK(res.violation.kind == CheckViolation::Kind::undominated);
    CHECK(res.violation.vertex == 3);
}

TEST_CASE("checker requires matching lengths") {
    Graph p3 = family(Family::path, 3);
    CHECK_THROWS_AS(is_independent_italian(p3, {0, 2}), std::invalid_argument);
}

TEST_CASE("greedy_mis_bound on closed forms") {
    CHECK(greedy_mis_bound(family(Family::complete, 5)) == 2);
    CHECK(greedy_mis_bound(make_graph(4, {})) == 8);
    CHECK(greedy_mis_bound(family(Family::path, 4)) == 4);  // greedy picks {0, 2}
}

TEST_CASE("assigning 2 on the greedy MIS always passes the checker") {
    SplitMix64 rng(11);
    for (int i = 0; i < 60; ++i) {
        Graph g = i % 2 == 0 ? testutil::corpus_instance(rng, 6, 4)
                             : testutil::random_any_graph(10, 300, rng);
        Assignment a(g.vertex_count(), 0);
        std::vector<char> blocked(g.vertex_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (blocked[v]) continue;
            a[v] = 2;
            for (int u : g.neighbors(v)) blocked[u] = 1;
        }
        CHECK(is_independent_italian(g, a).ok);
        CHECK(assignment_weight(a) == greedy_mis_bound(g));
    }
}

TEST_CASE("every accepted assignment weighs at least the optimum") {
    SplitMix64 rng(13);
    for (int i = 0; i < 40; ++i) {
        Graph g = testutil::random_any_graph(7, 350, rng);
        long long optimum = brute_force(g).number;
        for (int j = 0; j < 20; ++j) {
            Assignment a = testutil::random_assignment(g.vertex_count(), rng);
            if (is_independent_italian(g, a).ok) CHECK(assignment_weight(a) >= optimum);
        }
    }
}
