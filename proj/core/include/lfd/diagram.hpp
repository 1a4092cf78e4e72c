#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfd {

enum class Mode { theta, trivalent, knot };

enum class EventKind { left_cusp, right_cusp, crossing, vertex };

struct Event {
    EventKind kind = EventKind::crossing;
    int level = 0;
    std::string edge;                 // left_cusp: edge label of the born pair
    std::string vertex;               // vertex name
    int in_arity = 0;
    int out_arity = 0;
    std::vector<std::string> labels;  // vertex out labels, bottom to top

    static Event L(int level, std::string edge) {
        Event e; e.kind = EventKind::left_cusp; e.level = level; e.edge = std::move(edge); return e;
    }
    static Event R(int level) {
        Event e; e.kind = EventKind::right_cusp; e.level = level; return e;
    }
    static Event X(int level) {
        Event e; e.kind = EventKind::crossing; e.level = level; return e;
    }
    static Event V(std::string name, int level, int p, int q, std::vector<std::string> labels = {}) {
        Event e; e.kind = EventKind::vertex; e.vertex = std::move(name); e.level = level;
        e.in_arity = p; e.out_arity = q; e.labels = std::move(labels); return e;
    }
    bool operator==(const Event&) const = default;
};

struct VertexDecl {
    std::string name;
    int degree = 3;
    bool operator==(const VertexDecl&) const = default;
};

struct EdgeDecl {
    std::string name;
    std::string v1, v2;  // empty in knot mode
    bool operator==(const EdgeDecl&) const = default;
};

struct FrontDiagram {
    Mode mode = Mode::theta;
    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;
    std::vector<Event> events;
    bool operator==(const FrontDiagram&) const = default;
};

struct ParseError : std::runtime_error {
    int line = 0, col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

struct ValidationError : std::runtime_error {
    int event = -1;  // offending event index, -1 for structural problems
    ValidationError(const std::string& msg, int event_ = -1)
        : std::runtime_error(event_ < 0 ? msg : msg + " (event " + std::to_string(event_) + ")"),
          event(event_) {}
};

FrontDiagram parse_lfd(const std::string& text);
std::string serialize_lfd(const FrontDiagram& d);

// ----- sweep -----

// maximal strand piece: born at a left cusp or vertex output,
// dies at a right cusp or vertex input
struct Segment {
    std::string edge;
    enum class End { left_cusp, right_cusp, vertex_in, vertex_out };
    int birth_event = -1, death_event = -1;
    End birth_kind = End::left_cusp, death_kind = End::right_cusp;
    int birth_partner = -1, death_partner = -1;  // partner segment at a cusp
    bool birth_upper = false, death_upper = false;
    std::string birth_vertex, death_vertex;
    int birth_slot = -1, death_slot = -1;        // offset within the vertex block
};

struct Crossing {
    int event = -1;
    int level = -1;
    int seg_desc = -1;  // arrives from level+1; the over strand in a front
    int seg_asc = -1;   // arrives from level
};

struct VertexEnd {
    std::string edge;
    bool out = false;  // emitted (right side) vs consumed (left side)
    int slot = 0;      // 0 = bottom of that side's block
    int segment = -1;
};

struct VertexInfo {
    std::string name;
    int event = -1;
    int level = 0;
    int in_arity = 0, out_arity = 0;
    std::vector<VertexEnd> ends;
};

struct EdgeArc {
    std::string name;
    bool closed = false;          // knot mode
    std::vector<int> segments;    // ordered from the v1 end (or cyclically, knot mode)
    std::vector<int> seg_dir;     // +1 if v1->v2 traversal passes the segment left to right
};

struct Sweep {
    std::vector<Segment> segments;
    std::vector<Crossing> crossings;
    std::vector<VertexInfo> vertices;
    std::map<std::string, EdgeArc> arcs;
    std::vector<std::vector<int>> state_before;  // strand segment ids before each event
    const VertexInfo* vertex(const std::string& name) const {
        for (auto& v : vertices)
            if (v.name == name) return &v;
        return nullptr;
    }
};

struct GraphStructure {
    Mode mode = Mode::theta;
    struct Cycle {
        std::string plus, minus;  // oriented cycle: plus edge forward, minus edge reversed
    };
    std::vector<Cycle> cycles;          // theta: C1=(e1,-e2), C2=(e1,-e3), C3=(e2,-e3)
    std::vector<std::string> edge_order;
    std::string va, vb;                 // theta endpoints (edges run va -> vb)
};

Sweep sweep_diagram(const FrontDiagram& d);
GraphStructure validate(const FrontDiagram& d);

// ----- traversal -----

struct TraversalStep {
    enum class Kind { cusp, corner, crossing, crossing_other };
    Kind kind = Kind::cusp;
    bool down = false;       // cusp / corner direction
    int sign = 0;            // in-cycle crossing sign; 0 for crossing_other
    int event = -1;
    std::string vertex;      // corner location
};

struct CycleTraversal {
    std::vector<TraversalStep> steps;
    int writhe = 0;                 // sum of in-cycle crossing signs
    int up = 0, down = 0;           // cusps plus corners
    int corner_up = 0, corner_down = 0;
    int ordinary_cusps = 0;
    std::map<int, int> seg_dir;     // traversal x-direction per segment
};

CycleTraversal trace_cycle(const Sweep& s, const std::string& plus, const std::string& minus);
CycleTraversal trace_knot(const Sweep& s);

// right-side ends top->bottom, then left-side ends top->bottom
std::vector<std::string> vertex_cyclic_order(const Sweep& s, const std::string& vertex);

bool cyclic_equal(const std::vector<std::string>& a, const std::vector<std::string>& b);

FrontDiagram relabel_edges(const FrontDiagram& d, const std::map<std::string, std::string>& m);

std::string mode_name(Mode m);

}  // namespace lfd
