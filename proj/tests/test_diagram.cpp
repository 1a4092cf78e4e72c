#include "doctest.h"
#include "lfd/diagram.hpp"

using namespace lfd;

static const char* kMinimalTheta =
    "mode theta\n"
    "vertex a degree 3\n"
    "vertex b degree 3\n"
    "edge e1 a b\n"
    "edge e2 a b\n"
    "edge e3 a b\n"
    "events:\n"
    "V a 0 in=0 out=3 labels=e3,e2,e1\n"
    "V b 0 in=3 out=0\n";

TEST_CASE("parse and serialize round trip") {
    FrontDiagram d = parse_lfd(kMinimalTheta);
    CHECK(d.mode == Mode::theta);
    CHECK(d.vertices.size() == 2);
    CHECK(d.edges.size() == 3);
    CHECK(d.events.size() == 2);
    CHECK(serialize_lfd(d) == kMinimalTheta);
    CHECK(parse_lfd(serialize_lfd(d)) == d);
}

TEST_CASE("parse tolerates comments and blank lines") {
    std::string text =
        "# a knot\nmode knot\n\nedge k\nevents:\n"
        "L 0 k   # birth\nX 0\nX 0\nR 0\n";
    FrontDiagram d = parse_lfd(text);
    CHECK(d.mode == Mode::knot);
    CHECK(d.edges.size() == 1);
    CHECK(d.events.size() == 4);
    CHECK(parse_lfd(serialize_lfd(d)) == d);
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_lfd(""), ParseError);
    CHECK_THROWS_AS(parse_lfd("mode banana\n"), ParseError);
    CHECK_THROWS_AS(parse_lfd("mode knot\nedge k\nevents:\nL zero k\n"), ParseError);
    CHECK_THROWS_AS(parse_lfd("mode knot\nedge k\nevents:\nQ 0\n"), ParseError);
    CHECK_THROWS_AS(parse_lfd("mode knot\nedge k\nL 0 k\n"), ParseError);
    try {
        parse_lfd("mode knot\nedge k\nevents:\nL zero k\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.col == 3);
    }
}

TEST_CASE("sweep produces segments crossings and arcs") {
    FrontDiagram d = parse_lfd(kMinimalTheta);
    Sweep s = sweep_diagram(d);
    CHECK(s.segments.size() == 3);
    CHECK(s.crossings.empty());
    CHECK(s.vertices.size() == 2);
    for (auto& [name, arc] : s.arcs) {
        CHECK(arc.segments.size() == 1);
        CHECK(arc.seg_dir[0] == 1);
        CHECK_FALSE(arc.closed);
    }
    // bottom-to-top birth order at the first vertex: e3, e2, e1
    CHECK(s.segments[0].edge == "e3");
    CHECK(s.segments[1].edge == "e2");
    CHECK(s.segments[2].edge == "e1");
}

TEST_CASE("validate rejects malformed sweeps") {
    // dangling strand
    CHECK_THROWS_AS(validate(parse_lfd("mode knot\nedge k\nevents:\nL 0 k\n")), ValidationError);
    // level out of range
    CHECK_THROWS_AS(validate(parse_lfd("mode knot\nedge k\nevents:\nL 3 k\nR 0\n")), ValidationError);
    // crossing with one strand
    CHECK_THROWS_AS(
        validate(parse_lfd("mode knot\nedge k\nevents:\nL 0 k\nX 1\nR 0\n")), ValidationError);
    // theta with wrong edge count
    CHECK_THROWS_AS(validate(parse_lfd("mode theta\nvertex a degree 3\nvertex b degree 3\n"
                                       "edge e1 a b\nevents:\n")),
                    ValidationError);
    // vertex arity mismatch
    CHECK_THROWS_AS(validate(parse_lfd("mode theta\nvertex a degree 3\nvertex b degree 3\n"
                                       "edge e1 a b\nedge e2 a b\nedge e3 a b\nevents:\n"
                                       "V a 0 in=0 out=2 labels=e2,e1\n"
                                       "V b 0 in=2 out=0\n")),
                    ValidationError);
}

TEST_CASE("knot arc is a closed chain") {
    FrontDiagram d = parse_lfd("mode knot\nedge k\nevents:\nL 0 k\nX 0\nX 0\nR 0\n");
    Sweep s = sweep_diagram(d);
    const EdgeArc& arc = s.arcs.at("k");
    CHECK(arc.closed);
    CHECK(arc.segments.size() == 2);
    CHECK(arc.seg_dir[0] == 1);
    CHECK(arc.seg_dir[1] == -1);
    CHECK(s.crossings.size() == 2);
}

TEST_CASE("vertex cyclic order") {
    FrontDiagram d = parse_lfd(kMinimalTheta);
    Sweep s = sweep_diagram(d);
    // at a: out ends top to bottom = e1,e2,e3; at b: in ends top to bottom
    CHECK(vertex_cyclic_order(s, "a") == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(vertex_cyclic_order(s, "b") == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(cyclic_equal({"e1", "e2", "e3"}, {"e2", "e3", "e1"}));
    CHECK_FALSE(cyclic_equal({"e1", "e2", "e3"}, {"e1", "e3", "e2"}));
}

TEST_CASE("relabel edges") {
    FrontDiagram d = parse_lfd(kMinimalTheta);
    FrontDiagram r = relabel_edges(d, {{"e1", "e2"}, {"e2", "e1"}});
    CHECK(r.edges[0].name == "e2");
    CHECK(r.edges[1].name == "e1");
    CHECK(r.events[0].labels == std::vector<std::string>{"e3", "e1", "e2"});
    validate(r);
}
