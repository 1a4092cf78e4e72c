#include "lfd/moves.hpp"

#include <random>

namespace lfd {

std::string move_type_name(MoveType t) {
    switch (t) {
        case MoveType::m1: return "I";
        case MoveType::m2: return "II";
        case MoveType::m3: return "III";
        case MoveType::m4: return "IV";
        case MoveType::m5: return "V";
        case MoveType::m6: return "VI";
    }
    return "?";
}

Move inverse_move(const Move& m) {
    Move r = m;
    std::swap(r.before, r.after);
    r.expanding = !m.expanding;
    return r;
}

FrontDiagram apply_move(const FrontDiagram& d, const Move& m) {
    if (m.pos < 0 || m.pos + m.before.size() > d.events.size())
        throw ValidationError("stale move site: position out of range");
    for (size_t i = 0; i < m.before.size(); i++)
        if (!(d.events[m.pos + i] == m.before[i]))
            throw ValidationError("stale move site: event word changed");
    FrontDiagram out = d;
    out.events.erase(out.events.begin() + m.pos, out.events.begin() + m.pos + m.before.size());
    out.events.insert(out.events.begin() + m.pos, m.after.begin(), m.after.end());
    validate(out);
    return out;
}

namespace {

bool is_x(const Event& e, int level) { return e.kind == EventKind::crossing && e.level == level; }
bool is_l(const Event& e, int level) { return e.kind == EventKind::left_cusp && e.level == level; }
bool is_r(const Event& e, int level) { return e.kind == EventKind::right_cusp && e.level == level; }

std::vector<Event> slice(const FrontDiagram& d, int pos, int len) {
    return {d.events.begin() + pos, d.events.begin() + pos + len};
}

std::vector<std::string> drop_front(std::vector<std::string> v) { v.erase(v.begin()); return v; }
std::vector<std::string> drop_back(std::vector<std::string> v) { v.pop_back(); return v; }
std::vector<std::string> push_front(std::vector<std::string> v, const std::string& s) {
    v.insert(v.begin(), s); return v;
}
std::vector<std::string> push_back(std::vector<std::string> v, const std::string& s) {
    v.push_back(s); return v;
}

struct Enumerator {
    const FrontDiagram& d;
    const Sweep sweep;
    std::vector<Move> out;

    explicit Enumerator(const FrontDiagram& dd) : d(dd), sweep(sweep_diagram(dd)) {}

    // strand state at slice position pos (before event pos); pos == size means end
    const std::vector<int>& state(int pos) const {
        static const std::vector<int> empty;
        return pos < static_cast<int>(sweep.state_before.size()) ? sweep.state_before[pos] : empty;
    }
    int width(int pos) const { return static_cast<int>(state(pos).size()); }
    const std::string& strand_edge(int pos, int level) const {
        return sweep.segments[state(pos)[level]].edge;
    }

    void add(MoveType t, int variant, int pos, std::vector<Event> before, std::vector<Event> after) {
        Move m;
        m.type = t;
        m.variant = variant;
        m.pos = pos;
        m.before = std::move(before);
        m.after = std::move(after);
        m.expanding = m.after.size() > m.before.size();
        out.push_back(std::move(m));
    }

    void kinks() {
        int n = static_cast<int>(d.events.size());
        for (int pos = 0; pos <= n; pos++) {
            for (int l = 0; l < width(pos); l++) {
                const std::string& e = strand_edge(pos, l);
                add(MoveType::m1, 0, pos, {}, {Event::L(l, e), Event::X(l + 1), Event::R(l)});
                add(MoveType::m1, 1, pos, {}, {Event::L(l + 1, e), Event::X(l), Event::R(l + 1)});
            }
        }
        for (int pos = 0; pos + 3 <= n; pos++) {
            const Event& a = d.events[pos];
            if (a.kind != EventKind::left_cusp) continue;
            int l = a.level;
            if (is_x(d.events[pos + 1], l + 1) && is_r(d.events[pos + 2], l))
                add(MoveType::m1, 0, pos, slice(d, pos, 3), {});
            if (is_x(d.events[pos + 1], l - 1) && is_r(d.events[pos + 2], l) && l >= 1)
                add(MoveType::m1, 1, pos, slice(d, pos, 3), {});
        }
    }

    // a cusp slides across a neighboring strand; the two new crossings hit the
    // two branches, which travel in opposite directions, so every cycle's
    // signed count is unchanged
    void cusp_slides() {
        int n = static_cast<int>(d.events.size());
        for (int pos = 0; pos < n; pos++) {
            const Event& e = d.events[pos];
            if (e.kind == EventKind::left_cusp) {
                int l = e.level;
                if (l < width(pos))  // strand right above the insertion point
                    add(MoveType::m2, 0, pos, {e},
                        {Event::L(l + 1, e.edge), Event::X(l), Event::X(l + 1)});
                if (l >= 1)
                    add(MoveType::m2, 1, pos, {e},
                        {Event::L(l - 1, e.edge), Event::X(l), Event::X(l - 1)});
                if (pos + 3 <= n && is_x(d.events[pos + 1], l - 1) && is_x(d.events[pos + 2], l))
                    add(MoveType::m2, 0, pos, slice(d, pos, 3), {Event::L(l - 1, e.edge)});
                if (pos + 3 <= n && is_x(d.events[pos + 1], l + 1) && is_x(d.events[pos + 2], l))
                    add(MoveType::m2, 1, pos, slice(d, pos, 3), {Event::L(l + 1, e.edge)});
            } else if (e.kind == EventKind::right_cusp) {
                int l = e.level;
                if (l + 2 < width(pos))
                    add(MoveType::m2, 2, pos, {e},
                        {Event::X(l + 1), Event::X(l), Event::R(l + 1)});
                if (l >= 1)
                    add(MoveType::m2, 3, pos, {e},
                        {Event::X(l - 1), Event::X(l), Event::R(l - 1)});
                if (pos >= 2 && l >= 1 && is_x(d.events[pos - 2], l) && is_x(d.events[pos - 1], l - 1))
                    add(MoveType::m2, 2, pos - 2, slice(d, pos - 2, 3), {Event::R(l - 1)});
                if (pos >= 2 && is_x(d.events[pos - 2], l) && is_x(d.events[pos - 1], l + 1))
                    add(MoveType::m2, 3, pos - 2, slice(d, pos - 2, 3), {Event::R(l + 1)});
            }
        }
    }

    void braid() {
        for (int pos = 0; pos + 3 <= static_cast<int>(d.events.size()); pos++) {
            const Event& a = d.events[pos];
            const Event& b = d.events[pos + 1];
            if (a.kind != EventKind::crossing || b.kind != EventKind::crossing) continue;
            if (std::abs(a.level - b.level) != 1) continue;
            if (!is_x(d.events[pos + 2], a.level)) continue;
            add(MoveType::m3, 0, pos, slice(d, pos, 3),
                {Event::X(b.level), Event::X(a.level), Event::X(b.level)});
        }
    }

    // right-cusp rotations at a vertex; the cusped form must have arity (p,1):
    // the cycle corner that appears in the bare form then matches the cusp it
    // replaces in direction, keeping every cycle's up/down counts unchanged
    void vertex_right_cusp() {
        int n = static_cast<int>(d.events.size());
        for (int pos = 0; pos < n; pos++) {
            const Event& e = d.events[pos];
            if (e.kind != EventKind::vertex) continue;
            int l = e.level, p = e.in_arity, q = e.out_arity;
            // contract: top/bottom out strand merges into an incoming strand
            if (q == 1 && pos + 1 < n) {
                const Event& r = d.events[pos + 1];
                if (is_r(r, l + q - 1))
                    add(MoveType::m4, 0, pos, {e, r},
                        {Event::V(e.vertex, l, p + 1, q - 1, drop_back(e.labels))});
                if (l >= 1 && is_r(r, l - 1))
                    add(MoveType::m4, 1, pos, {e, r},
                        {Event::V(e.vertex, l - 1, p + 1, q - 1, drop_front(e.labels))});
            }
            // expand: an incoming strand detaches through a right cusp
            if (p >= 1 && q == 0) {
                const std::string& top = strand_edge(pos, l + p - 1);
                add(MoveType::m4, 0, pos, {e},
                    {Event::V(e.vertex, l, p - 1, q + 1, push_back(e.labels, top)),
                     Event::R(l + q)});
                const std::string& bot = strand_edge(pos, l);
                add(MoveType::m4, 1, pos, {e},
                    {Event::V(e.vertex, l + 1, p - 1, q + 1, push_front(e.labels, bot)),
                     Event::R(l)});
            }
        }
    }

    // left-cusp rotations at a vertex, cusped arity (1,q); mirror of the
    // right-cusp family
    void vertex_left_cusp() {
        int n = static_cast<int>(d.events.size());
        for (int pos = 0; pos < n; pos++) {
            const Event& e = d.events[pos];
            if (e.kind != EventKind::vertex) continue;
            int l = e.level, p = e.in_arity, q = e.out_arity;
            if (p == 1 && pos >= 1) {
                const Event& c = d.events[pos - 1];
                if (c.kind == EventKind::left_cusp) {
                    if (c.level == l + p - 1)
                        add(MoveType::m6, 0, pos - 1, {c, e},
                            {Event::V(e.vertex, l, p - 1, q + 1, push_back(e.labels, c.edge))});
                    if (c.level == l - 1 && l >= 1)
                        add(MoveType::m6, 1, pos - 1, {c, e},
                            {Event::V(e.vertex, l - 1, p - 1, q + 1, push_front(e.labels, c.edge))});
                }
            }
            if (q >= 1 && p == 0) {
                add(MoveType::m6, 0, pos, {e},
                    {Event::L(l + p, e.labels.back()),
                     Event::V(e.vertex, l, p + 1, q - 1, drop_back(e.labels))});
                add(MoveType::m6, 1, pos, {e},
                    {Event::L(l, e.labels.front()),
                     Event::V(e.vertex, l + 1, p + 1, q - 1, drop_front(e.labels))});
            }
        }
    }

    // a strand slides over (descending) or under (ascending) a vertex
    void vertex_slides() {
        int n = static_cast<int>(d.events.size());
        for (int pos = 0; pos < n; pos++) {
            const Event& e = d.events[pos];
            if (e.kind != EventKind::vertex) continue;
            int lv = e.level, p = e.in_arity, q = e.out_arity;
            auto xs_desc = [](int lo, int k) {  // levels lo+k-1 .. lo
                std::vector<Event> v;
                for (int i = k - 1; i >= 0; i--) v.push_back(Event::X(lo + i));
                return v;
            };
            auto xs_asc = [](int lo, int k) {  // levels lo .. lo+k-1
                std::vector<Event> v;
                for (int i = 0; i < k; i++) v.push_back(Event::X(lo + i));
                return v;
            };
            auto cat = [](std::vector<Event> a, std::vector<Event> b) {
                a.insert(a.end(), b.begin(), b.end());
                return a;
            };
            auto match_window = [&](int start, const std::vector<Event>& want) {
                if (start < 0 || start + want.size() > d.events.size()) return false;
                for (size_t i = 0; i < want.size(); i++)
                    if (!(d.events[start + i] == want[i])) return false;
                return true;
            };
            // descending slide, strand passes over the vertex
            if (lv >= 1) {
                int l = lv - 1;
                std::vector<Event> w1 = cat(xs_desc(l, p), {e});
                if ((p > 0 || width(pos) >= lv) && match_window(pos - p, w1))
                    add(MoveType::m5, 0, pos - p, w1,
                        cat({Event::V(e.vertex, l, p, q, e.labels)}, xs_desc(l, q)));
            }
            {
                int l = lv;
                std::vector<Event> w2 = cat({e}, xs_desc(l, q));
                if ((q > 0 || width(pos) >= l + p + 1) && match_window(pos, w2))
                    add(MoveType::m5, 1, pos, w2,
                        cat(xs_desc(l, p), {Event::V(e.vertex, l + 1, p, q, e.labels)}));
            }
            // ascending slide, strand passes under the vertex
            {
                int l = lv;
                std::vector<Event> w1 = cat(xs_asc(l, p), {e});
                if ((p > 0 || width(pos) >= l + 1) && match_window(pos - p, w1))
                    add(MoveType::m5, 2, pos - p, w1,
                        cat({Event::V(e.vertex, l + 1, p, q, e.labels)}, xs_asc(l, q)));
            }
            if (lv >= 1) {
                int l = lv - 1;
                std::vector<Event> w2 = cat({e}, xs_asc(l, q));
                if (match_window(pos, w2))
                    add(MoveType::m5, 3, pos, w2,
                        cat(xs_asc(l, p), {Event::V(e.vertex, l, p, q, e.labels)}));
            }
        }
    }
};

}  // namespace

std::vector<Move> enumerate_moves(const FrontDiagram& d) {
    Enumerator en(d);
    en.kinks();
    en.cusp_slides();
    en.braid();
    en.vertex_right_cusp();
    en.vertex_left_cusp();
    en.vertex_slides();
    return std::move(en.out);
}

FrontDiagram stabilize(const FrontDiagram& d, const std::string& edge, bool positive) {
    Sweep s = sweep_diagram(d);
    auto it = s.arcs.find(edge);
    if (it == s.arcs.end()) throw ValidationError("unknown edge '" + edge + "'");
    const EdgeArc& arc = it->second;
    int seg = arc.segments.front();
    // sign is requested in the edge's first-endpoint-to-second sense; flip the
    // zigzag when the first segment runs leftward
    bool rightward_positive = positive == (arc.seg_dir.front() > 0);
    int ev = s.segments[seg].birth_event;
    // level of the segment just after its birth
    const std::vector<int>& st =
        ev + 1 < static_cast<int>(s.state_before.size()) ? s.state_before[ev + 1] : std::vector<int>{};
    int level = -1;
    for (int i = 0; i < static_cast<int>(st.size()); i++)
        if (st[i] == seg) level = i;
    if (level < 0) throw ValidationError("edge '" + edge + "' has no interior to stabilize");
    FrontDiagram out = d;
    std::vector<Event> zig;
    if (rightward_positive) {
        zig = {Event::L(level, edge), Event::R(level + 1)};
    } else {
        zig = {Event::L(level + 1, edge), Event::R(level)};
    }
    out.events.insert(out.events.begin() + ev + 1, zig.begin(), zig.end());
    validate(out);
    return out;
}

WalkResult random_walk(const FrontDiagram& d, int steps, std::uint64_t seed,
                       const std::vector<MoveType>& allowed) {
    std::mt19937_64 rng(seed);
    WalkResult w;
    w.result = d;
    for (int i = 0; i < steps; i++) {
        std::vector<Move> sites = enumerate_moves(w.result);
        if (!allowed.empty()) {
            std::vector<Move> kept;
            for (auto& m : sites)
                for (auto t : allowed)
                    if (m.type == t) { kept.push_back(m); break; }
            sites = std::move(kept);
        }
        if (sites.empty()) {
            w.exhausted = true;
            break;
        }
        std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
        Move m = sites[pick(rng)];
        w.result = apply_move(w.result, m);
        w.trace.push_back(std::move(m));
        w.steps_done++;
    }
    return w;
}

}  // namespace lfd
