#include "doctest.h"
#include "lfd/diagram.hpp"
#include "lfd/invariants.hpp"

using namespace lfd;

namespace {

FrontDiagram minimal_theta(bool twist) {
    std::string text =
        "mode theta\n"
        "vertex a degree 3\nvertex b degree 3\n"
        "edge e1 a b\nedge e2 a b\nedge e3 a b\n"
        "events:\n"
        "V a 0 in=0 out=3 labels=e3,e2,e1\n";
    if (twist) text += "X 0\n";
    text += "V b 0 in=3 out=0\n";
    return parse_lfd(text);
}

}  // namespace

TEST_CASE("minimal theta invariants") {
    ThetaInvariants inv = theta_invariants(minimal_theta(false));
    for (int i = 0; i < 3; i++) {
        CHECK(inv.cycle[i].tb == -1);
        CHECK(inv.cycle[i].rot == 0);
        CHECK(inv.cycle[i].writhe == 0);
        CHECK(inv.cycle[i].up + inv.cycle[i].down == 2);  // two vertex corners per cycle
    }
    CHECK(inv.rotation_defect() == 0);
    CornerClass cc = classify_corner_pattern(minimal_theta(false));
    CHECK(cc.row == 1);
    CHECK(cc.defect == 0);
}

TEST_CASE("twisted minimal theta invariants") {
    ThetaInvariants inv = theta_invariants(minimal_theta(true));
    CHECK(inv.cycle[0].tb == -1);
    CHECK(inv.cycle[1].tb == -1);
    CHECK(inv.cycle[2].tb == -2);
    CHECK(inv.cycle[0].rot == 0);
    CHECK(inv.cycle[1].rot == 0);
    CHECK(inv.cycle[2].rot == -1);
    CHECK(inv.rotation_defect() == -1);
    CornerClass cc = classify_corner_pattern(minimal_theta(true));
    CHECK(cc.row == 2);
    CHECK(cc.defect == -1);
    CHECK(cc.down[0]);
    CHECK(cc.down[1]);
    CHECK_FALSE(cc.down[2]);
}

TEST_CASE("unknot fronts") {
    // flat saucer: tb = -1, rot = 0
    CycleInvariants u = knot_invariants(parse_lfd("mode knot\nedge k\nevents:\nL 0 k\nR 0\n"));
    CHECK(u.tb == -1);
    CHECK(u.rot == 0);
    // one full twist adds two negative crossings
    CycleInvariants t =
        knot_invariants(parse_lfd("mode knot\nedge k\nevents:\nL 0 k\nX 0\nX 0\nR 0\n"));
    CHECK(t.tb == -3);
    CHECK(t.rot == 0);
    CHECK(t.writhe == -2);
    // an upward zigzag shifts rotation by one
    CycleInvariants z =
        knot_invariants(parse_lfd("mode knot\nedge k\nevents:\nL 0 k\nL 0 k\nR 1\nR 0\n"));
    CHECK(z.tb == -2);
    CHECK(z.rot == 1);
    CycleInvariants zm =
        knot_invariants(parse_lfd("mode knot\nedge k\nevents:\nL 0 k\nL 1 k\nR 0\nR 0\n"));
    CHECK(zm.tb == -2);
    CHECK(zm.rot == -1);
}

TEST_CASE("crossing counts on twisted minimal theta") {
    CrossingCounts cc = crossing_counts(minimal_theta(true));
    CHECK(cc.self.at("e1") == 0);
    CHECK(cc.self.at("e2") == 0);
    CHECK(cc.self.at("e3") == 0);
    CHECK(cc.pair.at({"e1", "e2"}) == 0);
    CHECK(cc.pair.at({"e1", "e3"}) == 0);
    CHECK(cc.pair.at({"e2", "e3"}) == -1);
}
