#pragma once

#include <array>

#include "lfd/diagram.hpp"

namespace lfd {

// prescribed invariants cannot be realized; a user-input error
struct NotRealizable : std::runtime_error {
    explicit NotRealizable(const std::string& msg) : std::runtime_error(msg) {}
};

// a constructed diagram failed its own closed-loop check; a library bug
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// (tb, rot) occurs for a Legendrian unknot iff opposite parity and tb+|rot| <= -1
bool acceptable(int tb, int rot);

FrontDiagram standard_unknot(int tb, int rot);

struct Realizability {
    bool ok = false;
    int condition = 0;   // lowest satisfied of the six r-conditions, 1..6
    std::string reason;  // set when not ok
};

// the three cycles are C1=(e1,-e2), C2=(e1,-e3), C3=(e2,-e3); realizable iff
// each (tb_i, rot_i) is acceptable and rot_1 - rot_2 + rot_3 is 0 or -1
Realizability theta_realizable(const std::array<int, 3>& tb, const std::array<int, 3>& rot);

// the construction is stabilizations plus plain twist boxes between adjacent
// strands, so every cycle is a two-strand curve with kinks: unknotted, and
// the graph embedding stays planar
struct RealizationPlan {
    int condition = 0;           // reported r-condition
    std::array<int, 3> r{};      // |rot_i|
    std::array<int, 3> stabs{};  // signed stabilization count per edge
    std::array<int, 3> boxes{};  // crossing-box sizes per cycle pair
    int rotation = 0;            // which rotation of the strand order leaves a
};

FrontDiagram realize_theta(const std::array<int, 3>& tb, const std::array<int, 3>& rot,
                           RealizationPlan* plan = nullptr);

// true when no edge relabeling + vertex pairing matches both the classical
// invariant vectors and the vertex cyclic orders of the two diagrams
bool distinguish_by_cyclic_order(const FrontDiagram& g, const FrontDiagram& h);

}  // namespace lfd
