#pragma once

#include <array>
#include <map>

#include "lfd/diagram.hpp"

namespace lfd {

struct CycleInvariants {
    int tb = 0;
    int rot = 0;
    int writhe = 0;
    int up = 0, down = 0;  // cusps including vertex corners
};

CycleInvariants cycle_invariants(const CycleTraversal& t);

struct ThetaInvariants {
    std::array<CycleInvariants, 3> cycle;  // C1=(e1,-e2), C2=(e1,-e3), C3=(e2,-e3)
    int rotation_defect() const { return cycle[0].rot - cycle[1].rot + cycle[2].rot; }
};

ThetaInvariants theta_invariants(const FrontDiagram& d);
ThetaInvariants theta_invariants(const Sweep& s, const GraphStructure& g);

CycleInvariants knot_invariants(const FrontDiagram& d);

// corner-pattern classification at the second vertex for diagrams in standard
// form (every cycle turns a corner at both vertices). rows are numbered by the
// 8 up/down patterns of (C1,C2,C3) read as binary with down=0; rows 3 and 6
// cannot occur and raise ValidationError.
struct CornerClass {
    int row = 0;                    // one of 1,2,4,5,7,8
    int defect = 0;                 // rotation defect, 0 or -1
    std::array<bool, 3> down{};     // corner direction per cycle at vb
};

CornerClass classify_corner_pattern(const FrontDiagram& d);

// signed crossing counts between edge strands. self[e] uses the edge's own
// a->b orientation (self-crossing signs do not depend on it); pair[{i,j}]
// with i<j in edge order uses the orientation of the cycle (e_i, -e_j).
struct CrossingCounts {
    std::map<std::string, int> self;
    std::map<std::pair<std::string, std::string>, int> pair;
};

CrossingCounts crossing_counts(const FrontDiagram& d);

}  // namespace lfd
