#include "lfd/ribbon.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "lfd/invariants.hpp"
#include "lfd/realize.hpp"

namespace lfd {

const char* vertex_type_name(VertexType t) {
    return t == VertexType::parallel ? "parallel" : "antiparallel";
}

VertexType vertex_type(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    if (g.mode != Mode::theta)
        throw ValidationError("vertex type is defined for theta mode only");
    Sweep s = sweep_diagram(d);
    auto oa = vertex_cyclic_order(s, g.va);
    auto ob = vertex_cyclic_order(s, g.vb);
    return cyclic_equal(oa, ob) ? VertexType::parallel : VertexType::antiparallel;
}

namespace {

// choices that cannot be made on the first pass: which boundary arc of each
// cusp or vertex disk carries the twist kink
struct EmissionPlan {
    std::map<int, bool> kink_inner;                  // cusp event -> kink on inner arc
    std::map<int, std::array<bool, 3>> disk_kinks;   // vertex event -> kink per disk arc
};

struct Builder {
    LinkDiagram link;
    std::vector<int> lpos;        // link segment id per current level
    std::vector<int> lseg_front;  // link segment -> front segment, -1 structural
    std::map<int, int> cusp_probe;  // cusp event -> lower segment of the inner arc

    int create(int p, int front_lo, int front_hi, LinkOrigin origin, int tag) {
        link.events.push_back({LinkEvent::Kind::create, p, true, origin, tag});
        int lo = (int)lseg_front.size();
        lseg_front.push_back(front_lo);
        lseg_front.push_back(front_hi);
        lpos.insert(lpos.begin() + p, {lo, lo + 1});
        return lo;
    }
    void merge(int p, LinkOrigin origin, int tag) {
        link.events.push_back({LinkEvent::Kind::merge, p, true, origin, tag});
        lpos.erase(lpos.begin() + p, lpos.begin() + p + 2);
    }
    void cross(int p, bool over_desc, LinkOrigin origin, int tag) {
        link.events.push_back({LinkEvent::Kind::cross, p, over_desc, origin, tag});
        std::swap(lpos[p], lpos[p + 1]);
    }
    // negative twist loop on the strand at p; the loop's tail continues the strand
    void kink(int p, LinkOrigin origin, int tag) {
        int fs = lseg_front[lpos[p]];
        create(p, -1, fs, LinkOrigin::structure, tag);
        cross(p + 1, false, origin, tag);
        merge(p, LinkOrigin::structure, tag);
    }
};

// disk boundary arcs of a trivalent vertex, indexed 0..2 in the circular order
// of the doubled ends; arc 2 is the outer wrap. pos = strand level to kink,
// edges = the two edge ends the arc connects.
struct DiskArc {
    int pos;
    std::string e1, e2;
};

std::array<DiskArc, 3> disk_arcs(const FrontDiagram& d, const Sweep& fs,
                                 const std::vector<int>& state, int fi) {
    const Event& ev = d.events[fi];
    int m = 2 * ev.level;
    auto in_edge = [&](int k) { return fs.segments[state[ev.level + k]].edge; };
    int p = ev.in_arity, q = ev.out_arity;
    if (p == 0 && q == 3)
        return {{{m + 3, ev.labels[1], ev.labels[2]},
                 {m + 1, ev.labels[0], ev.labels[1]},
                 {m, ev.labels[0], ev.labels[2]}}};
    if (p == 3 && q == 0)
        return {{{m + 1, in_edge(0), in_edge(1)},
                 {m + 3, in_edge(1), in_edge(2)},
                 {m, in_edge(0), in_edge(2)}}};
    if (p == 1 && q == 2)
        return {{{m + 1, ev.labels[0], ev.labels[1]},
                 {m, in_edge(0), ev.labels[0]},
                 {m + 3, in_edge(0), ev.labels[1]}}};
    if (p == 2 && q == 1)
        return {{{m, in_edge(0), ev.labels[0]},
                 {m + 1, in_edge(0), in_edge(1)},
                 {m + 3, in_edge(1), ev.labels[0]}}};
    throw ValidationError("unsupported vertex arity in push-off", fi);
}

Builder build(const FrontDiagram& d, const Sweep& fs, bool anti, const EmissionPlan& plan) {
    Builder b;
    bool band_over = anti;  // descending copy passes over only in the antiparallel case
    std::vector<std::vector<int>> born(d.events.size());
    for (int i = 0; i < (int)fs.segments.size(); ++i)
        born[fs.segments[i].birth_event].push_back(i);
    auto kink_inner = [&](int fi) {
        auto it = plan.kink_inner.find(fi);
        return it == plan.kink_inner.end() || it->second;
    };
    int xing = 0;
    for (int fi = 0; fi < (int)d.events.size(); ++fi) {
        const Event& ev = d.events[fi];
        int m = 2 * ev.level;
        switch (ev.kind) {
            case EventKind::left_cusp: {
                int flo = born[fi][0], fhi = born[fi][1];
                b.create(m, flo, fhi, LinkOrigin::structure, fi);
                b.cusp_probe[fi] = b.create(m + 1, flo, fhi, LinkOrigin::structure, fi);
                b.kink(kink_inner(fi) ? m + 1 : m, LinkOrigin::cusp, fi);
                b.cross(m, band_over, LinkOrigin::band, flo);
                b.cross(m + 2, band_over, LinkOrigin::band, fhi);
                break;
            }
            case EventKind::right_cusp: {
                b.cusp_probe[fi] = b.lpos[m + 1];
                b.kink(kink_inner(fi) ? m + 1 : m, LinkOrigin::cusp, fi);
                b.merge(m + 1, LinkOrigin::structure, fi);
                b.merge(m, LinkOrigin::structure, fi);
                break;
            }
            case EventKind::crossing: {
                b.cross(m + 1, true, LinkOrigin::inherited, xing);
                b.cross(m, true, LinkOrigin::inherited, xing);
                b.cross(m + 2, true, LinkOrigin::inherited, xing);
                b.cross(m + 1, true, LinkOrigin::inherited, xing);
                xing++;
                break;
            }
            case EventKind::vertex: {
                std::array<bool, 3> kinks{};
                if (auto it = plan.disk_kinks.find(fi); it != plan.disk_kinks.end())
                    kinks = it->second;
                auto arcs = disk_arcs(d, fs, fs.state_before[fi], fi);
                int p = ev.in_arity, q = ev.out_arity;
                auto emit_kinks = [&] {
                    for (int a = 0; a < 3; ++a)
                        if (kinks[a]) b.kink(arcs[a].pos, LinkOrigin::disk, fi);
                };
                if (p == 0 && q == 3) {
                    int f0 = born[fi][0], f1 = born[fi][1], f2 = born[fi][2];
                    b.create(m, f0, f2, LinkOrigin::structure, fi);
                    b.create(m + 1, f0, f1, LinkOrigin::structure, fi);
                    b.create(m + 3, f1, f2, LinkOrigin::structure, fi);
                    emit_kinks();
                    b.cross(m, band_over, LinkOrigin::band, f0);
                    b.cross(m + 2, band_over, LinkOrigin::band, f1);
                    b.cross(m + 4, band_over, LinkOrigin::band, f2);
                } else if (p == 3 && q == 0) {
                    emit_kinks();
                    b.merge(m + 1, LinkOrigin::structure, fi);
                    b.merge(m + 1, LinkOrigin::structure, fi);
                    b.merge(m, LinkOrigin::structure, fi);
                } else if (p == 1 && q == 2) {
                    // the disk of a two-sided vertex sits edge-on, so the two
                    // copies of the lone edge cross where they wrap around it
                    int f0 = born[fi][0], f1 = born[fi][1];
                    b.cross(m, band_over, LinkOrigin::wrap, fi);
                    b.create(m + 1, f0, f1, LinkOrigin::structure, fi);
                    emit_kinks();
                    b.cross(m, band_over, LinkOrigin::band, f0);
                    b.cross(m + 2, band_over, LinkOrigin::band, f1);
                } else if (p == 2 && q == 1) {
                    int f0 = born[fi][0];
                    emit_kinks();
                    b.merge(m + 1, LinkOrigin::structure, fi);
                    b.cross(m, band_over, LinkOrigin::wrap, fi);
                    b.cross(m, band_over, LinkOrigin::band, f0);
                } else {
                    throw ValidationError("unsupported vertex arity in push-off", fi);
                }
                break;
            }
        }
    }
    return b;
}

}  // namespace

PushOff push_off(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    if (g.mode == Mode::trivalent)
        throw ValidationError("push-off supports theta and knot mode");
    Sweep fs = sweep_diagram(d);

    PushOff out;
    out.source_mode = g.mode;
    bool theta = g.mode == Mode::theta;
    bool anti = false;
    if (theta) {
        out.vtype = vertex_type(d);
        anti = out.vtype == VertexType::antiparallel;
    }

    // front segment -> traversal direction of the edge's own orientation
    std::map<int, int> dab;
    for (auto& [name, arc] : fs.arcs)
        for (size_t i = 0; i < arc.segments.size(); ++i)
            dab[arc.segments[i]] = arc.seg_dir[i];
    auto edge_index = [&](const std::string& name) {
        for (int i = 0; i < (int)g.edge_order.size(); ++i)
            if (g.edge_order[i] == name) return i;
        throw InternalError("unknown edge in push-off");
    };
    auto seg_edge_index = [&](int fseg) { return edge_index(fs.segments[fseg].edge); };

    // boundary components carry the cycles (e2,-e1), (e1,-e3), (e3,-e2):
    // cdir[k][edge] is the direction multiplier on the edge orientation
    static const int cdir[3][3] = {{-1, 1, 0}, {1, 0, -1}, {0, -1, 1}};
    static const int comp_edges[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    auto pair_cycle = [&](int x, int y) {
        for (int k = 0; k < 3; ++k)
            if ((comp_edges[k][0] == std::min(x, y)) && (comp_edges[k][1] == std::max(x, y)))
                return k;
        throw InternalError("bad edge pair");
    };

    EmissionPlan plan;
    if (theta) {
        std::array<CycleTraversal, 3> tr;
        for (int k = 0; k < 3; ++k)
            tr[k] = trace_cycle(fs, g.cycles[k].plus, g.cycles[k].minus);
        // corner direction of the boundary cycle attached to each disk arc
        auto corner_down = [&](int k, const std::string& vertex, bool& exists) {
            for (auto& st : tr[k].steps)
                if (st.kind == TraversalStep::Kind::corner && st.vertex == vertex) {
                    exists = true;
                    return k == 1 ? st.down : !st.down;  // components reverse cycles 1 and 3
                }
            exists = false;
            return false;
        };
        for (int fi = 0; fi < (int)d.events.size(); ++fi) {
            if (d.events[fi].kind != EventKind::vertex) continue;
            if (!anti) {
                // one twist per vertex: a kink on the outer arc of a one-sided
                // disk, or the wrap crossing of a two-sided disk
                bool mixed = d.events[fi].in_arity % 3 != 0;
                plan.disk_kinks[fi] = {false, false, !mixed};
                continue;
            }
            auto arcs = disk_arcs(d, fs, fs.state_before[fi], fi);
            std::array<bool, 3> kinks{};
            for (int a = 0; a < 3; ++a) {
                int k = pair_cycle(edge_index(arcs[a].e1), edge_index(arcs[a].e2));
                bool exists = false;
                bool down = corner_down(k, d.events[fi].vertex, exists);
                kinks[a] = exists && down;
            }
            plan.disk_kinks[fi] = kinks;
        }
    }

    // component attribution and orientation: each boundary component is
    // oriented by the front cycle it carries (or the knot orientation)
    // a link segment can continue across a two-sided vertex and so cover more
    // than one front segment; the band crossings are reliable markers, since
    // each one sits between the two copies of its tagged front segment
    auto attribute = [&](TracedLink& t, const std::vector<int>&,
                         std::vector<int>& comp_cycle) {
        comp_cycle.assign(t.num_components, -1);
        if (anti) {
            std::vector<std::array<bool, 3>> has(t.num_components);
            for (auto& x : t.crossings) {
                if (x.origin != LinkOrigin::band) continue;
                int e = seg_edge_index(x.tag);
                has[t.seg_comp[x.seg_desc]][e] = true;
                has[t.seg_comp[x.seg_asc]][e] = true;
            }
            for (int c = 0; c < t.num_components; ++c) {
                int cnt = has[c][0] + has[c][1] + has[c][2];
                if (cnt != 2)
                    throw InternalError("push-off component does not carry two edges: comp " +
                                        std::to_string(c) + "/" + std::to_string(t.num_components) +
                                        " edges " + std::to_string(has[c][0]) +
                                        std::to_string(has[c][1]) + std::to_string(has[c][2]));
                comp_cycle[c] = !has[c][2] ? 0 : (!has[c][1] ? 1 : 2);
            }
        }
        std::vector<bool> oriented(t.num_components, false);
        for (auto& x : t.crossings) {
            if (x.origin != LinkOrigin::band) continue;
            for (int s : {x.seg_desc, x.seg_asc}) {
                int c = t.seg_comp[s];
                if (oriented[c]) continue;
                oriented[c] = true;
                int want = dab[x.tag];
                if (anti) want *= cdir[comp_cycle[c]][seg_edge_index(x.tag)];
                if (t.seg_dir[s] != want) t.flip_component(c);
            }
        }
    };

    // first pass: fix the components and decide where each cusp twist lands
    // (on the boundary arc whose component traverses the cusp downward);
    // the kink defaults do not change connectivity or orientations
    {
        Builder a = build(d, fs, anti, plan);
        TracedLink ta = trace_link(a.link);
        std::vector<int> cc;
        attribute(ta, a.lseg_front, cc);
        if (g.mode == Mode::knot) {
            // both copies follow the knot orientation, so split the twists by
            // cusp direction: downward cusps twist one copy, upward the other
            std::map<int, bool> cusp_down;
            for (auto& st : trace_knot(fs).steps)
                if (st.kind == TraversalStep::Kind::cusp) cusp_down[st.event] = st.down;
            for (auto& [fi, probe] : a.cusp_probe)
                plan.kink_inner[fi] = (ta.seg_comp[probe] == 0) == cusp_down.at(fi);
        } else {
            // the copies run opposite ways: the twist lands on the boundary
            // arc whose component traverses the cusp downward
            for (auto& [fi, probe] : a.cusp_probe) {
                bool left = d.events[fi].kind == EventKind::left_cusp;
                plan.kink_inner[fi] = ta.seg_dir[probe] == (left ? 1 : -1);
            }
        }
    }

    Builder b = build(d, fs, anti, plan);
    out.link = std::move(b.link);
    out.seg_front = b.lseg_front;
    out.traced = trace_link(out.link);
    TracedLink& t = out.traced;
    std::vector<int> comp_cycle;
    attribute(t, b.lseg_front, comp_cycle);

    // every band half-twist carries a fixed sign per mode; the copies can run
    // either way past a band, so the over flag is derived from the traced
    // orientations instead of being assumed constant
    int band_sign = theta && !anti ? 1 : -1;
    int wrap_sign = -band_sign;
    for (auto& x : t.crossings) {
        if (x.origin != LinkOrigin::band && x.origin != LinkOrigin::wrap) continue;
        int want = x.origin == LinkOrigin::band ? band_sign : wrap_sign;
        x.over_desc = want * t.seg_dir[x.seg_desc] * t.seg_dir[x.seg_asc] > 0;
        out.link.events[x.event].over_desc = x.over_desc;
    }

    // antiparallel case: a copied crossing between two different boundary
    // components is pushed to the side making its sign match the front cycle
    // sign, flipped when the crossing avoids the components' shared edge
    if (anti) {
        for (auto& x : t.crossings) {
            if (x.origin != LinkOrigin::inherited) continue;
            int ci = t.seg_comp[x.seg_desc], cj = t.seg_comp[x.seg_asc];
            if (ci == cj) continue;
            const Crossing& fc = fs.crossings[x.tag];
            int ex = seg_edge_index(fc.seg_desc), ey = seg_edge_index(fc.seg_asc);
            int s = dab[fc.seg_desc] * dab[fc.seg_asc] * (ex == ey ? 1 : -1);
            int shared = -1;
            for (int e : comp_edges[comp_cycle[ci]])
                for (int f : comp_edges[comp_cycle[cj]])
                    if (e == f) shared = e;
            int tau = s * ((shared == ex || shared == ey) ? 1 : -1);
            x.over_desc = tau * t.seg_dir[x.seg_desc] * t.seg_dir[x.seg_asc] > 0;
            out.link.events[x.event].over_desc = x.over_desc;
        }
    }

    // outputs
    int nc = t.num_components;
    out.linking.assign(nc, std::vector<int>(nc, 0));
    for (int c = 0; c < nc; ++c) out.linking[c][c] = t.component_writhe(c);
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j) {
            int w = t.pair_signed(i, j);
            if (w % 2) throw InternalError("odd inter-component crossing sum");
            out.linking[i][j] = out.linking[j][i] = w / 2;
        }

    out.components.resize(nc);
    for (int c = 0; c < nc; ++c) out.components[c].sl = out.linking[c][c];
    if (g.mode == Mode::knot) {
        if (nc != 2) throw InternalError("knot push-off must have two components");
        CycleInvariants ki = cycle_invariants(trace_knot(fs));
        int a = out.components[0].sl, bsl = out.components[1].sl;
        if (std::minmax(a, bsl) != std::minmax(ki.tb - ki.rot, ki.tb + ki.rot))
            throw InternalError("push-off self-linking mismatch: got " + std::to_string(a) +
                                "," + std::to_string(bsl) + " want " + std::to_string(ki.tb - ki.rot) +
                                "," + std::to_string(ki.tb + ki.rot) + " lk=" +
                                std::to_string(out.linking[0][1]));
        bool first_plus = a == ki.tb - ki.rot;
        out.components[0].label = first_plus ? "T+" : "T-";
        out.components[1].label = first_plus ? "T-" : "T+";
    } else if (!anti) {
        if (nc != 1) throw InternalError("parallel push-off must be connected");
        if (out.components[0].sl != 1)
            throw InternalError("parallel push-off self-linking must be 1, got " +
                                std::to_string(out.components[0].sl));
        out.components[0].label = "T";
    } else {
        if (nc != 3) throw InternalError("antiparallel push-off must have three components");
        for (int c = 0; c < nc; ++c)
            for (int c2 = 0; c2 < c; ++c2)
                if (comp_cycle[c] == comp_cycle[c2])
                    throw InternalError("duplicate component attribution");
        for (int c = 0; c < nc; ++c)
            out.components[c].label = "T" + std::to_string(comp_cycle[c] + 1);
    }

    out.cusp_disk_balance = true;
    for (auto& x : t.crossings) {
        if (x.origin == LinkOrigin::band && t.crossing_sign(x) != 1) out.cusp_disk_balance = false;
        if (x.origin == LinkOrigin::cusp && t.crossing_sign(x) != -1) out.cusp_disk_balance = false;
    }
    return out;
}

}  // namespace lfd
