#pragma once

#include <cstdint>
#include <vector>

#include "lfd/diagram.hpp"

namespace lfd {

enum class MoveType { m1, m2, m3, m4, m5, m6 };

std::string move_type_name(MoveType t);

// a concrete rewrite site: replace `before` at event index `pos` with `after`.
// the stored words make every move exactly invertible
struct Move {
    MoveType type = MoveType::m1;
    int variant = 0;
    bool expanding = false;  // word grows
    int pos = 0;
    std::vector<Event> before, after;
};

Move inverse_move(const Move& m);

// all applicable rewrite sites; deterministic order
std::vector<Move> enumerate_moves(const FrontDiagram& d);

// splices the rewrite and validates the result; throws ValidationError on a
// stale site (word mismatch) or invalid outcome
FrontDiagram apply_move(const FrontDiagram& d, const Move& m);

// adds a zigzag just after the edge's first segment; positive means the
// rotation of the two cycles through the edge shifts by +1 in their a->b
// sense along that edge, and tb drops by 1 on both. not a Legendrian isotopy
FrontDiagram stabilize(const FrontDiagram& d, const std::string& edge, bool positive);

struct WalkResult {
    FrontDiagram result;
    std::vector<Move> trace;
    int steps_done = 0;
    bool exhausted = false;  // no applicable move before reaching `steps`
};

// seeded deterministic random walk over enumerate_moves; an optional filter
// keeps only the listed move types
WalkResult random_walk(const FrontDiagram& d, int steps, std::uint64_t seed,
                       const std::vector<MoveType>& allowed = {});

}  // namespace lfd
