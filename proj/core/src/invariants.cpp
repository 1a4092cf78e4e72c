#include "lfd/invariants.hpp"

namespace lfd {

CycleInvariants cycle_invariants(const CycleTraversal& t) {
    CycleInvariants ci;
    ci.writhe = t.writhe;
    ci.up = t.up;
    ci.down = t.down;
    ci.tb = t.writhe - (t.up + t.down) / 2;
    ci.rot = (t.down - t.up) / 2;
    return ci;
}

ThetaInvariants theta_invariants(const Sweep& s, const GraphStructure& g) {
    ThetaInvariants out;
    for (int i = 0; i < 3; i++)
        out.cycle[i] = cycle_invariants(trace_cycle(s, g.cycles[i].plus, g.cycles[i].minus));
    return out;
}

ThetaInvariants theta_invariants(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    if (g.mode != Mode::theta) throw ValidationError("theta invariants require theta mode");
    Sweep s = sweep_diagram(d);
    return theta_invariants(s, g);
}

CycleInvariants knot_invariants(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    if (g.mode != Mode::knot) throw ValidationError("knot invariants require knot mode");
    Sweep s = sweep_diagram(d);
    return cycle_invariants(trace_knot(s));
}

CornerClass classify_corner_pattern(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    if (g.mode != Mode::theta) throw ValidationError("corner classification requires theta mode");
    Sweep s = sweep_diagram(d);
    CornerClass cc;
    for (int i = 0; i < 3; i++) {
        CycleTraversal t = trace_cycle(s, g.cycles[i].plus, g.cycles[i].minus);
        bool found = false;
        for (auto& st : t.steps) {
            if (st.kind == TraversalStep::Kind::corner && st.vertex == g.vb) {
                cc.down[i] = st.down;
                found = true;
            }
        }
        if (!found)
            throw ValidationError("diagram not in standard form: cycle " + std::to_string(i + 1) +
                                  " has no corner at vertex '" + g.vb + "'");
        cc.defect += (i == 1 ? -1 : 1) * cycle_invariants(t).rot;
    }
    // read the pattern as a 3-bit number, up=1, C1 most significant
    int bits = (cc.down[0] ? 0 : 4) | (cc.down[1] ? 0 : 2) | (cc.down[2] ? 0 : 1);
    cc.row = bits + 1;
    if (cc.row == 3 || cc.row == 6)
        throw ValidationError("impossible corner pattern at vertex '" + g.vb + "'");
    return cc;
}

CrossingCounts crossing_counts(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    if (g.mode != Mode::theta) throw ValidationError("crossing counts require theta mode");
    Sweep s = sweep_diagram(d);
    // a->b x-direction of every segment, from its edge's stored arc
    std::map<int, int> fwd;
    for (auto& [name, arc] : s.arcs)
        for (size_t i = 0; i < arc.segments.size(); i++) fwd[arc.segments[i]] = arc.seg_dir[i];
    std::map<std::string, int> edge_index;
    for (int i = 0; i < 3; i++) edge_index[g.edge_order[i]] = i;
    CrossingCounts cc;
    for (auto& e : g.edge_order) cc.self[e] = 0;
    for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++) cc.pair[{g.edge_order[i], g.edge_order[j]}] = 0;
    for (auto& c : s.crossings) {
        const std::string& ea = s.segments[c.seg_desc].edge;
        const std::string& eb = s.segments[c.seg_asc].edge;
        int da = fwd[c.seg_desc], db = fwd[c.seg_asc];
        if (ea == eb) {
            cc.self[ea] += da * db;
        } else {
            int ia = edge_index[ea], ib = edge_index[eb];
            // cycle (e_i, -e_j) with i<j: lower-index edge forward, other reversed
            int sign = da * db * -1;
            if (ia < ib) cc.pair[{ea, eb}] += sign;
            else cc.pair[{eb, ea}] += sign;
        }
    }
    return cc;
}

}  // namespace lfd
