#include "lfd/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lfd {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::theta: return "theta";
        case Mode::trivalent: return "trivalent";
        case Mode::knot: return "knot";
    }
    return "?";
}

namespace {

struct Token {
    std::string text;
    int line, col;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        lineno++;
        std::vector<Token> toks;
        size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == '#') break;
            if (std::isspace(static_cast<unsigned char>(raw[i]))) { i++; continue; }
            size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != '#') j++;
            toks.push_back({raw.substr(i, j - i), lineno, static_cast<int>(i) + 1});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

int parse_int(const Token& t, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", t.line, t.col);
    }
}

int parse_kv_int(const Token& t, const std::string& key) {
    if (t.text.rfind(key + "=", 0) != 0)
        throw ParseError("expected " + key + "=<n>, got '" + t.text + "'", t.line, t.col);
    Token sub{t.text.substr(key.size() + 1), t.line, t.col + static_cast<int>(key.size()) + 1};
    return parse_int(sub, "integer");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i <= s.size()) {
        size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(s.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

}  // namespace

FrontDiagram parse_lfd(const std::string& text) {
    auto lines = tokenize(text);
    FrontDiagram d;
    size_t li = 0;
    auto need = [&](size_t n, const std::vector<Token>& toks, const char* what) {
        if (toks.size() != n)
            throw ParseError(std::string("malformed ") + what + " line", toks[0].line, toks[0].col);
    };

    if (li >= lines.size()) throw ParseError("empty input, expected mode line", 1, 1);
    {
        auto& t = lines[li];
        need(2, t, "mode");
        if (t[0].text != "mode") throw ParseError("expected 'mode' line first", t[0].line, t[0].col);
        if (t[1].text == "theta") d.mode = Mode::theta;
        else if (t[1].text == "trivalent") d.mode = Mode::trivalent;
        else if (t[1].text == "knot") d.mode = Mode::knot;
        else throw ParseError("unknown mode '" + t[1].text + "'", t[1].line, t[1].col);
        li++;
    }

    while (li < lines.size() && lines[li][0].text == "vertex") {
        auto& t = lines[li];
        need(4, t, "vertex");
        if (t[2].text != "degree")
            throw ParseError("expected 'degree', got '" + t[2].text + "'", t[2].line, t[2].col);
        d.vertices.push_back({t[1].text, parse_int(t[3], "degree")});
        li++;
    }

    while (li < lines.size() && lines[li][0].text == "edge") {
        auto& t = lines[li];
        if (d.mode == Mode::knot) {
            need(2, t, "edge");
            d.edges.push_back({t[1].text, "", ""});
        } else {
            need(4, t, "edge");
            d.edges.push_back({t[1].text, t[2].text, t[3].text});
        }
        li++;
    }

    if (li >= lines.size() || lines[li][0].text != "events:" || lines[li].size() != 1) {
        int ln = li < lines.size() ? lines[li][0].line : (lines.empty() ? 1 : lines.back()[0].line + 1);
        throw ParseError("expected 'events:' line", ln, 1);
    }
    li++;

    for (; li < lines.size(); li++) {
        auto& t = lines[li];
        const std::string& op = t[0].text;
        if (op == "L") {
            need(3, t, "L");
            d.events.push_back(Event::L(parse_int(t[1], "level"), t[2].text));
        } else if (op == "R") {
            need(2, t, "R");
            d.events.push_back(Event::R(parse_int(t[1], "level")));
        } else if (op == "X") {
            need(2, t, "X");
            d.events.push_back(Event::X(parse_int(t[1], "level")));
        } else if (op == "V") {
            if (t.size() != 5 && t.size() != 6)
                throw ParseError("malformed V line", t[0].line, t[0].col);
            int p = parse_kv_int(t[3], "in");
            int q = parse_kv_int(t[4], "out");
            std::vector<std::string> labels;
            if (t.size() == 6) {
                auto& lt = t[5];
                if (lt.text.rfind("labels=", 0) != 0)
                    throw ParseError("expected labels=..., got '" + lt.text + "'", lt.line, lt.col);
                labels = split_commas(lt.text.substr(7));
                for (auto& s : labels)
                    if (s.empty()) throw ParseError("empty edge label in labels=", lt.line, lt.col);
            }
            if (static_cast<int>(labels.size()) != q)
                throw ParseError("labels count does not match out arity", t[0].line, t[0].col);
            d.events.push_back(Event::V(t[1].text, parse_int(t[2], "level"), p, q, std::move(labels)));
        } else {
            throw ParseError("unknown event '" + op + "'", t[0].line, t[0].col);
        }
    }
    return d;
}

std::string serialize_lfd(const FrontDiagram& d) {
    std::ostringstream out;
    out << "mode " << mode_name(d.mode) << "\n";
    for (auto& v : d.vertices) out << "vertex " << v.name << " degree " << v.degree << "\n";
    for (auto& e : d.edges) {
        out << "edge " << e.name;
        if (d.mode != Mode::knot) out << " " << e.v1 << " " << e.v2;
        out << "\n";
    }
    out << "events:\n";
    for (auto& ev : d.events) {
        switch (ev.kind) {
            case EventKind::left_cusp: out << "L " << ev.level << " " << ev.edge << "\n"; break;
            case EventKind::right_cusp: out << "R " << ev.level << "\n"; break;
            case EventKind::crossing: out << "X " << ev.level << "\n"; break;
            case EventKind::vertex: {
                out << "V " << ev.vertex << " " << ev.level
                    << " in=" << ev.in_arity << " out=" << ev.out_arity;
                if (!ev.labels.empty()) {
                    out << " labels=";
                    for (size_t i = 0; i < ev.labels.size(); i++)
                        out << (i ? "," : "") << ev.labels[i];
                }
                out << "\n";
                break;
            }
        }
    }
    return out.str();
}

Sweep sweep_diagram(const FrontDiagram& d) {
    Sweep s;
    std::map<std::string, const EdgeDecl*> edges;
    for (auto& e : d.edges) {
        if (!edges.emplace(e.name, &e).second)
            throw ValidationError("duplicate edge '" + e.name + "'");
    }
    std::set<std::string> vnames;
    std::map<std::string, const VertexDecl*> vdecls;
    for (auto& v : d.vertices) {
        if (!vnames.insert(v.name).second)
            throw ValidationError("duplicate vertex '" + v.name + "'");
        vdecls[v.name] = &v;
    }
    auto check_edge = [&](const std::string& name, int ev) -> const EdgeDecl& {
        auto it = edges.find(name);
        if (it == edges.end()) throw ValidationError("unknown edge '" + name + "'", ev);
        return *it->second;
    };
    auto incident = [&](const EdgeDecl& e, const std::string& v) {
        return e.v1 == v || e.v2 == v;
    };

    std::vector<int> strands;  // segment ids bottom to top
    std::set<std::string> seen_vertices;
    for (int ei = 0; ei < static_cast<int>(d.events.size()); ei++) {
        s.state_before.push_back(strands);
        const Event& ev = d.events[ei];
        int n = static_cast<int>(strands.size());
        switch (ev.kind) {
            case EventKind::left_cusp: {
                if (ev.level < 0 || ev.level > n)
                    throw ValidationError("left cusp level out of range", ei);
                check_edge(ev.edge, ei);
                int lo = static_cast<int>(s.segments.size());
                int hi = lo + 1;
                Segment a, b;
                a.edge = b.edge = ev.edge;
                a.birth_event = b.birth_event = ei;
                a.birth_kind = b.birth_kind = Segment::End::left_cusp;
                a.birth_partner = hi;
                b.birth_partner = lo;
                b.birth_upper = true;
                s.segments.push_back(a);
                s.segments.push_back(b);
                strands.insert(strands.begin() + ev.level, {lo, hi});
                break;
            }
            case EventKind::right_cusp: {
                if (ev.level < 0 || ev.level + 1 >= n)
                    throw ValidationError("right cusp level out of range", ei);
                int a = strands[ev.level], b = strands[ev.level + 1];
                if (s.segments[a].edge != s.segments[b].edge)
                    throw ValidationError("right cusp joins strands of different edges", ei);
                s.segments[a].death_event = s.segments[b].death_event = ei;
                s.segments[a].death_kind = s.segments[b].death_kind = Segment::End::right_cusp;
                s.segments[a].death_partner = b;
                s.segments[b].death_partner = a;
                s.segments[b].death_upper = true;
                strands.erase(strands.begin() + ev.level, strands.begin() + ev.level + 2);
                break;
            }
            case EventKind::crossing: {
                if (ev.level < 0 || ev.level + 1 >= n)
                    throw ValidationError("crossing level out of range", ei);
                Crossing c;
                c.event = ei;
                c.level = ev.level;
                c.seg_asc = strands[ev.level];
                c.seg_desc = strands[ev.level + 1];
                s.crossings.push_back(c);
                std::swap(strands[ev.level], strands[ev.level + 1]);
                break;
            }
            case EventKind::vertex: {
                if (!vnames.count(ev.vertex))
                    throw ValidationError("unknown vertex '" + ev.vertex + "'", ei);
                if (!seen_vertices.insert(ev.vertex).second)
                    throw ValidationError("vertex '" + ev.vertex + "' appears twice", ei);
                if (ev.in_arity + ev.out_arity != vdecls[ev.vertex]->degree)
                    throw ValidationError("vertex arity does not match declared degree", ei);
                if (ev.level < 0 || ev.level + ev.in_arity > n)
                    throw ValidationError("vertex level/arity out of range", ei);
                VertexInfo vi;
                vi.name = ev.vertex;
                vi.event = ei;
                vi.level = ev.level;
                vi.in_arity = ev.in_arity;
                vi.out_arity = ev.out_arity;
                for (int k = 0; k < ev.in_arity; k++) {
                    int seg = strands[ev.level + k];
                    auto& sg = s.segments[seg];
                    if (!incident(*edges.at(sg.edge), ev.vertex))
                        throw ValidationError("edge '" + sg.edge + "' not incident to vertex '" +
                                                  ev.vertex + "'", ei);
                    sg.death_event = ei;
                    sg.death_kind = Segment::End::vertex_in;
                    sg.death_vertex = ev.vertex;
                    sg.death_slot = k;
                    vi.ends.push_back({sg.edge, false, k, seg});
                }
                strands.erase(strands.begin() + ev.level, strands.begin() + ev.level + ev.in_arity);
                std::vector<int> born;
                for (int k = 0; k < ev.out_arity; k++) {
                    const std::string& label = ev.labels[k];
                    if (!incident(check_edge(label, ei), ev.vertex))
                        throw ValidationError("edge '" + label + "' not incident to vertex '" +
                                                  ev.vertex + "'", ei);
                    int seg = static_cast<int>(s.segments.size());
                    Segment sg;
                    sg.edge = label;
                    sg.birth_event = ei;
                    sg.birth_kind = Segment::End::vertex_out;
                    sg.birth_vertex = ev.vertex;
                    sg.birth_slot = k;
                    s.segments.push_back(sg);
                    vi.ends.push_back({label, true, k, seg});
                    born.push_back(seg);
                }
                strands.insert(strands.begin() + ev.level, born.begin(), born.end());
                s.vertices.push_back(vi);
                break;
            }
        }
    }
    if (!strands.empty())
        throw ValidationError("sweep ends with " + std::to_string(strands.size()) + " open strands");
    for (auto& v : d.vertices)
        if (!seen_vertices.count(v.name))
            throw ValidationError("vertex '" + v.name + "' never appears in events");
    for (int i = 0; i < static_cast<int>(s.segments.size()); i++)
        if (s.segments[i].death_event < 0)
            throw ValidationError("segment of edge '" + s.segments[i].edge + "' never closed");

    // assemble each edge's arc by chaining segments through cusps
    for (auto& e : d.edges) {
        std::vector<int> segs;
        for (int i = 0; i < static_cast<int>(s.segments.size()); i++)
            if (s.segments[i].edge == e.name) segs.push_back(i);
        if (segs.empty()) throw ValidationError("edge '" + e.name + "' has no strands");
        EdgeArc arc;
        arc.name = e.name;
        int start = -1, start_dir = 0;
        if (d.mode == Mode::knot) {
            arc.closed = true;
            // canonical start: lower branch of the earliest left cusp, rightward
            for (int seg : segs)
                if (s.segments[seg].birth_kind == Segment::End::left_cusp &&
                    !s.segments[seg].birth_upper &&
                    (start < 0 || s.segments[seg].birth_event < s.segments[start].birth_event))
                    start = seg;
            if (start < 0) throw ValidationError("knot edge has no left cusp");
            start_dir = 1;
        } else {
            // start at the end incident to v1; prefer the earliest event there
            int best_event = -1;
            for (int seg : segs) {
                auto& sg = s.segments[seg];
                if (sg.birth_kind == Segment::End::vertex_out && sg.birth_vertex == e.v1 &&
                    (start < 0 || sg.birth_event < best_event)) {
                    start = seg; start_dir = 1; best_event = sg.birth_event;
                }
                if (sg.death_kind == Segment::End::vertex_in && sg.death_vertex == e.v1 &&
                    (start < 0 || sg.death_event < best_event)) {
                    start = seg; start_dir = -1; best_event = sg.death_event;
                }
            }
            if (start < 0)
                throw ValidationError("edge '" + e.name + "' has no end at vertex '" + e.v1 + "'");
        }
        int cur = start, dir = start_dir;
        std::set<int> used;
        while (true) {
            if (used.count(cur))
                throw ValidationError("edge '" + e.name + "' strands do not form a simple chain");
            used.insert(cur);
            arc.segments.push_back(cur);
            arc.seg_dir.push_back(dir);
            auto& sg = s.segments[cur];
            // far end in the traversal direction
            Segment::End end_kind = dir > 0 ? sg.death_kind : sg.birth_kind;
            int partner = dir > 0 ? sg.death_partner : sg.birth_partner;
            if (end_kind == Segment::End::left_cusp) {
                cur = partner; dir = 1;
            } else if (end_kind == Segment::End::right_cusp) {
                cur = partner; dir = -1;
            } else {
                // vertex end: chain terminates (open edge) or closes (never in knot mode)
                const std::string& at = dir > 0 ? sg.death_vertex : sg.birth_vertex;
                if (arc.closed)
                    throw ValidationError("knot edge touches a vertex");
                if (at != e.v2)
                    throw ValidationError("edge '" + e.name + "' terminates at wrong vertex '" + at + "'");
                break;
            }
            if (arc.closed && cur == start && dir == start_dir) break;
        }
        if (used.size() != segs.size())
            throw ValidationError("edge '" + e.name + "' splits into multiple components");
        s.arcs[e.name] = std::move(arc);
    }
    return s;
}

GraphStructure validate(const FrontDiagram& d) {
    GraphStructure g;
    g.mode = d.mode;
    for (auto& e : d.edges) g.edge_order.push_back(e.name);
    if (d.mode == Mode::knot) {
        if (!d.vertices.empty()) throw ValidationError("knot mode admits no vertices");
        if (d.edges.size() != 1) throw ValidationError("knot mode requires exactly one edge");
    } else if (d.mode == Mode::theta) {
        if (d.vertices.size() != 2) throw ValidationError("theta mode requires exactly 2 vertices");
        if (d.edges.size() != 3) throw ValidationError("theta mode requires exactly 3 edges");
        for (auto& v : d.vertices)
            if (v.degree != 3) throw ValidationError("theta vertices must have degree 3");
        g.va = d.edges[0].v1;
        g.vb = d.edges[0].v2;
        if (g.va == g.vb) throw ValidationError("theta edges must join two distinct vertices");
        for (auto& e : d.edges)
            if (e.v1 != g.va || e.v2 != g.vb)
                throw ValidationError("theta edges must all run from '" + g.va + "' to '" + g.vb + "'");
        g.cycles.push_back({g.edge_order[0], g.edge_order[1]});
        g.cycles.push_back({g.edge_order[0], g.edge_order[2]});
        g.cycles.push_back({g.edge_order[1], g.edge_order[2]});
    } else {
        for (auto& e : d.edges) {
            bool ok1 = false, ok2 = false;
            for (auto& v : d.vertices) {
                if (v.name == e.v1) ok1 = true;
                if (v.name == e.v2) ok2 = true;
            }
            if (!ok1 || !ok2)
                throw ValidationError("edge '" + e.name + "' references undeclared vertex");
        }
    }
    sweep_diagram(d);  // structural checks
    return g;
}

namespace {

// walk one oriented arc, appending cusp and crossing steps.
// dir flips the stored arc orientation when -1.
void walk_arc(const Sweep& s, const EdgeArc& arc, int orient, CycleTraversal& t,
              std::set<int>& counted, const std::map<int, int>& all_dirs,
              const std::vector<std::vector<int>>& seg_cross) {
    int n = static_cast<int>(arc.segments.size());
    for (int i = 0; i < n; i++) {
        int idx = orient > 0 ? i : n - 1 - i;
        int seg = arc.segments[idx];
        int dir = arc.seg_dir[idx] * orient;
        // crossings on this segment, in traversal order
        auto xs = seg_cross[seg];
        if (dir < 0) std::reverse(xs.begin(), xs.end());
        for (int ci : xs) {
            const Crossing& c = s.crossings[ci];
            int other = c.seg_desc == seg ? c.seg_asc : c.seg_desc;
            auto it = all_dirs.find(other);
            TraversalStep st;
            st.event = c.event;
            if (it == all_dirs.end()) {
                st.kind = TraversalStep::Kind::crossing_other;
            } else {
                st.kind = TraversalStep::Kind::crossing;
                st.sign = dir * it->second;
                if (counted.insert(ci).second) {
                    t.writhe += st.sign;
                }
            }
            t.steps.push_back(st);
        }
        // cusp at the far end, unless last segment of the arc walk
        if (i + 1 < n || arc.closed) {
            auto& sg = s.segments[seg];
            bool upper = dir > 0 ? sg.death_upper : sg.birth_upper;
            TraversalStep st;
            st.kind = TraversalStep::Kind::cusp;
            st.event = dir > 0 ? sg.death_event : sg.birth_event;
            st.down = upper;  // we leave the cusp on the other branch: upper -> lower is down
            t.steps.push_back(st);
            t.ordinary_cusps++;
            (st.down ? t.down : t.up)++;
        }
    }
}

std::vector<std::vector<int>> crossings_by_segment(const Sweep& s) {
    std::vector<std::vector<int>> out(s.segments.size());
    for (int i = 0; i < static_cast<int>(s.crossings.size()); i++) {
        out[s.crossings[i].seg_desc].push_back(i);
        out[s.crossings[i].seg_asc].push_back(i);
    }
    return out;  // event order within each segment since crossings are stored in event order
}

// corner between arriving end and departing end at a vertex; no step when
// the two ends sit on opposite sides of the vertex
void add_corner(const Sweep& s, const std::string& vertex, const VertexEnd& in_end,
                const VertexEnd& out_end, CycleTraversal& t) {
    if (in_end.out != out_end.out) return;
    TraversalStep st;
    st.kind = TraversalStep::Kind::corner;
    st.vertex = vertex;
    st.down = in_end.slot > out_end.slot;
    t.steps.push_back(st);
    (st.down ? t.down : t.up)++;
    (st.down ? t.corner_down : t.corner_up)++;
}

const VertexEnd& find_end(const Sweep& s, const std::string& vertex, int segment) {
    const VertexInfo* v = s.vertex(vertex);
    for (auto& e : v->ends)
        if (e.segment == segment) return e;
    throw ValidationError("segment end not found at vertex '" + vertex + "'");
}

}  // namespace

CycleTraversal trace_cycle(const Sweep& s, const std::string& plus, const std::string& minus) {
    const EdgeArc& ap = s.arcs.at(plus);
    const EdgeArc& am = s.arcs.at(minus);
    CycleTraversal t;
    for (size_t i = 0; i < ap.segments.size(); i++) t.seg_dir[ap.segments[i]] = ap.seg_dir[i];
    for (size_t i = 0; i < am.segments.size(); i++) t.seg_dir[am.segments[i]] = -am.seg_dir[i];
    auto seg_cross = crossings_by_segment(s);
    std::set<int> counted;

    auto arc_end = [&](const EdgeArc& a, bool last) {
        int idx = last ? static_cast<int>(a.segments.size()) - 1 : 0;
        return a.segments[idx];
    };
    walk_arc(s, ap, 1, t, counted, t.seg_dir, seg_cross);
    // corner at vb: plus arrives, minus (reversed) departs from its far end
    {
        auto& sg = s.segments[arc_end(ap, true)];
        const std::string vb = sg.death_kind == Segment::End::vertex_in ? sg.death_vertex : sg.birth_vertex;
        add_corner(s, vb, find_end(s, vb, arc_end(ap, true)), find_end(s, vb, arc_end(am, true)), t);
    }
    walk_arc(s, am, -1, t, counted, t.seg_dir, seg_cross);
    {
        auto& sg = s.segments[arc_end(am, false)];
        const std::string va = sg.birth_kind == Segment::End::vertex_out ? sg.birth_vertex : sg.death_vertex;
        add_corner(s, va, find_end(s, va, arc_end(am, false)), find_end(s, va, arc_end(ap, false)), t);
    }
    return t;
}

CycleTraversal trace_knot(const Sweep& s) {
    const EdgeArc& a = s.arcs.begin()->second;
    CycleTraversal t;
    for (size_t i = 0; i < a.segments.size(); i++) t.seg_dir[a.segments[i]] = a.seg_dir[i];
    auto seg_cross = crossings_by_segment(s);
    std::set<int> counted;
    walk_arc(s, a, 1, t, counted, t.seg_dir, seg_cross);
    return t;
}

std::vector<std::string> vertex_cyclic_order(const Sweep& s, const std::string& vertex) {
    const VertexInfo* v = s.vertex(vertex);
    if (!v) throw ValidationError("unknown vertex '" + vertex + "'");
    std::vector<const VertexEnd*> rights, lefts;
    for (auto& e : v->ends) (e.out ? rights : lefts).push_back(&e);
    auto by_slot_desc = [](const VertexEnd* a, const VertexEnd* b) { return a->slot > b->slot; };
    std::sort(rights.begin(), rights.end(), by_slot_desc);
    std::sort(lefts.begin(), lefts.end(), by_slot_desc);
    std::vector<std::string> out;
    for (auto* e : rights) out.push_back(e->edge);
    for (auto* e : lefts) out.push_back(e->edge);
    return out;
}

bool cyclic_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) return false;
    size_t n = a.size();
    for (size_t r = 0; r < n; r++) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; i++) ok = a[i] == b[(i + r) % n];
        if (ok) return true;
    }
    return false;
}

FrontDiagram relabel_edges(const FrontDiagram& d, const std::map<std::string, std::string>& m) {
    auto ren = [&](const std::string& s) {
        auto it = m.find(s);
        return it == m.end() ? s : it->second;
    };
    FrontDiagram out = d;
    for (auto& e : out.edges) e.name = ren(e.name);
    for (auto& ev : out.events) {
        if (ev.kind == EventKind::left_cusp) ev.edge = ren(ev.edge);
        for (auto& l : ev.labels) l = ren(l);
    }
    return out;
}

}  // namespace lfd
