#pragma once

#include <string>
#include <vector>

#include "lfd/diagram.hpp"
#include "lfd/linkdiag.hpp"

namespace lfd {

enum class VertexType { parallel, antiparallel };

// compares the circular edge order at the two vertices; invariant under moves
VertexType vertex_type(const FrontDiagram& d);

const char* vertex_type_name(VertexType t);

struct PushOffComponent {
    std::string label;  // "T" | "T+" | "T-" | "T1" | "T2" | "T3"
    int sl = 0;         // self-linking number (diagram writhe of the component)
};

struct PushOff {
    LinkDiagram link;
    TracedLink traced;
    Mode source_mode = Mode::knot;
    VertexType vtype = VertexType::parallel;  // theta input only
    std::vector<PushOffComponent> components;
    std::vector<std::vector<int>> linking;  // lk off diagonal, sl on diagonal
    std::vector<int> seg_front;             // link segment -> front segment, -1 structural
    bool cusp_disk_balance = false;  // every band crossing +1 and cusp crossing -1
};

// ribbon boundary of the diagram: each strand is doubled, each edge segment
// carries one half-twist crossing, cusps contribute one twist kink each, and
// every trivalent vertex is replaced by a disk whose boundary arcs join the
// doubled strand ends in their circular order around the vertex
PushOff push_off(const FrontDiagram& d);

}  // namespace lfd
