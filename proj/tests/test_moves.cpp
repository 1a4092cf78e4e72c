#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "lfd/invariants.hpp"
#include "lfd/moves.hpp"

using namespace lfd;

namespace {

struct Signature {
    std::array<int, 3> tb{}, rot{};
    std::vector<std::string> order_a, order_b;
};

Signature signature_of(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    Sweep s = sweep_diagram(d);
    ThetaInvariants inv = theta_invariants(s, g);
    Signature sig;
    for (int i = 0; i < 3; i++) {
        sig.tb[i] = inv.cycle[i].tb;
        sig.rot[i] = inv.cycle[i].rot;
    }
    sig.order_a = vertex_cyclic_order(s, g.va);
    sig.order_b = vertex_cyclic_order(s, g.vb);
    return sig;
}

}  // namespace

TEST_CASE("minimal theta has vertex-cusp sites at both vertices") {
    std::vector<Move> sites = enumerate_moves(corpus::minimal_theta());
    CHECK(!sites.empty());
    bool has4 = false, has6 = false;
    for (auto& m : sites) {
        if (m.type == MoveType::m4) has4 = true;
        if (m.type == MoveType::m6) has6 = true;
    }
    CHECK(has4);  // right-cusp rotation at vertex b
    CHECK(has6);  // left-cusp rotation at vertex a
}

TEST_CASE("every enumerated move applies, preserves invariants, and inverts verbatim") {
    for (const FrontDiagram& d : corpus::theta_seeds()) {
        Signature base = signature_of(d);
        std::vector<Move> sites = enumerate_moves(d);
        CHECK(!sites.empty());
        std::set<std::string> seen_types;
        for (const Move& m : sites) {
            FrontDiagram moved = apply_move(d, m);
            Signature sig = signature_of(moved);
            CHECK(sig.tb == base.tb);
            CHECK(sig.rot == base.rot);
            CHECK(cyclic_equal(sig.order_a, base.order_a));
            CHECK(cyclic_equal(sig.order_b, base.order_b));
            FrontDiagram back = apply_move(moved, inverse_move(m));
            CHECK(back.events == d.events);
            seen_types.insert(move_type_name(m.type));
        }
    }
}

TEST_CASE("move catalog reaches all six families across the corpus") {
    std::set<std::string> seen;
    for (const FrontDiagram& d : corpus::theta_seeds())
        for (const Move& m : enumerate_moves(d)) seen.insert(move_type_name(m.type));
    for (const char* t : {"I", "II", "III", "IV", "V", "VI"}) CHECK(seen.count(t));
}

TEST_CASE("moves compose: walk stays invariant") {
    FrontDiagram d = corpus::twisted_theta();
    Signature base = signature_of(d);
    WalkResult w = random_walk(d, 60, 12345);
    CHECK(w.steps_done == 60);
    Signature sig = signature_of(w.result);
    CHECK(sig.tb == base.tb);
    CHECK(sig.rot == base.rot);
    CHECK(cyclic_equal(sig.order_a, base.order_a));
    CHECK(cyclic_equal(sig.order_b, base.order_b));
}

TEST_CASE("random walk is deterministic and honors filters") {
    FrontDiagram d = corpus::overpass_theta();
    WalkResult a = random_walk(d, 25, 7);
    WalkResult b = random_walk(d, 25, 7);
    CHECK(a.result.events == b.result.events);
    CHECK(random_walk(d, 0, 7).result.events == d.events);
    std::vector<MoveType> keep = {MoveType::m1, MoveType::m2, MoveType::m3, MoveType::m5};
    WalkResult f = random_walk(d, 30, 99, keep);
    for (auto& m : f.trace) {
        CHECK(m.type != MoveType::m4);
        CHECK(m.type != MoveType::m6);
    }
    // arity-preserving moves keep the word in standard corner form
    CHECK(classify_corner_pattern(f.result).row == classify_corner_pattern(d).row);
}

TEST_CASE("stabilization shifts exactly the two cycles through the edge") {
    FrontDiagram d = corpus::minimal_theta();
    ThetaInvariants base = theta_invariants(d);
    // cycles through e1: C1 and C2; through e2: C1 and C3; through e3: C2 and C3
    const int touch[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    const int sense[3][2] = {{1, 1}, {-1, 1}, {-1, -1}};  // edge direction within cycle
    for (int e = 0; e < 3; e++) {
        for (bool pos : {true, false}) {
            FrontDiagram s = stabilize(d, "e" + std::to_string(e + 1), pos);
            ThetaInvariants inv = theta_invariants(s);
            int delta = pos ? 1 : -1;
            for (int c = 0; c < 3; c++) {
                bool hit = c == touch[e][0] || c == touch[e][1];
                CHECK(inv.cycle[c].tb == base.cycle[c].tb - (hit ? 1 : 0));
                int want = base.cycle[c].rot;
                if (c == touch[e][0]) want += delta * sense[e][0];
                if (c == touch[e][1]) want += delta * sense[e][1];
                CHECK(inv.cycle[c].rot == want);
            }
        }
    }
}

TEST_CASE("stale move sites are rejected") {
    FrontDiagram d = corpus::minimal_theta();
    std::vector<Move> sites = enumerate_moves(d);
    REQUIRE(!sites.empty());
    Move m = sites.front();
    FrontDiagram other = corpus::twisted_theta();
    if (!m.before.empty()) CHECK_THROWS_AS(apply_move(other, m), ValidationError);
    m.pos = static_cast<int>(d.events.size()) + 5;
    CHECK_THROWS_AS(apply_move(d, m), ValidationError);
}
