#include "lfd/realize.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>

#include "lfd/invariants.hpp"

namespace lfd {

bool acceptable(int tb, int rot) {
    int r = rot < 0 ? -rot : rot;
    return tb + r <= -1 && ((tb + rot) % 2 != 0);
}

namespace {

// zigzag on the strand currently at the given level; positive shifts the
// rotation of a rightward traversal up by one
void stabilize_at(std::vector<Event>& ev, int level, const std::string& edge, bool positive) {
    if (positive) {
        ev.push_back(Event::L(level, edge));
        ev.push_back(Event::R(level + 1));
    } else {
        ev.push_back(Event::L(level + 1, edge));
        ev.push_back(Event::R(level));
    }
}

// cycle index for an unordered edge-index pair
int cycle_of_pair(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 1 ? 0 : 1;
    return 2;
}

// assemble a theta front: vertex a emitting strands in the given bottom-to-top
// edge order, a signed stabilization block per edge, a word of plain crossings
// between adjacent strands, and vertex b
FrontDiagram build_theta(const std::array<int, 3>& ord0, const std::array<int, 3>& t,
                         const std::vector<int>& word) {
    auto name = [](int i) { return "e" + std::to_string(i + 1); };
    FrontDiagram d;
    d.mode = Mode::theta;
    d.vertices = {{"a", 3}, {"b", 3}};
    d.edges = {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}};
    auto& ev = d.events;
    ev.push_back(Event::V("a", 0, 0, 3, {name(ord0[0]), name(ord0[1]), name(ord0[2])}));
    for (int l = 0; l < 3; l++) {
        int e = ord0[l];
        for (int k = 0; k < std::abs(t[e]); k++) stabilize_at(ev, l, name(e), t[e] > 0);
    }
    for (int l : word) ev.push_back(Event::X(l));
    ev.push_back(Event::V("b", 0, 3, 0));
    return d;
}

// shortest crossing word turning ord0 into end while using exactly rem
// crossings between each pair of strands
std::optional<std::vector<int>> find_word(const std::array<int, 3>& ord0,
                                          const std::array<int, 3>& rem,
                                          const std::array<int, 3>& end) {
    using State = std::pair<std::array<int, 3>, std::array<int, 3>>;
    std::map<State, std::pair<State, int>> parent;
    State start{ord0, rem};
    parent[start] = {start, -1};
    std::queue<State> q;
    q.push(start);
    while (!q.empty()) {
        State s = q.front();
        q.pop();
        if (s.second == std::array<int, 3>{0, 0, 0}) {
            if (s.first != end) continue;
            std::vector<int> word;
            for (State c = s; parent[c].second >= 0; c = parent[c].first)
                word.push_back(parent[c].second);
            std::reverse(word.begin(), word.end());
            return word;
        }
        for (int l = 0; l <= 1; l++) {
            int k = cycle_of_pair(s.first[l], s.first[l + 1]);
            if (s.second[k] == 0) continue;
            State n = s;
            std::swap(n.first[l], n.first[l + 1]);
            n.second[k]--;
            if (parent.count(n)) continue;
            parent[n] = {s, l};
            q.push(n);
        }
    }
    return std::nullopt;
}

// per-cycle invariants of the bare front for a given start and end order,
// with the crossings needed for the permutation added back in; tb and rot of
// any decorated front then follow linearly from the stab and box counts
struct Baseline {
    std::array<int, 3> tb{}, rot{};
    bool ok = false;
};

Baseline calibrate(const std::array<int, 3>& ord0, const std::array<int, 3>& end) {
    Baseline b;
    // shortest word of adjacent swaps turning ord0 into end
    std::map<std::array<int, 3>, std::pair<std::array<int, 3>, int>> par;
    par[ord0] = {ord0, -1};
    std::queue<std::array<int, 3>> q;
    q.push(ord0);
    while (!q.empty()) {
        auto s = q.front();
        q.pop();
        if (s == end) break;
        for (int l = 0; l <= 1; l++) {
            auto n = s;
            std::swap(n[l], n[l + 1]);
            if (par.count(n)) continue;
            par[n] = {s, l};
            q.push(n);
        }
    }
    std::vector<int> w;
    for (auto c = end; par[c].second >= 0; c = par[c].first) w.push_back(par[c].second);
    std::reverse(w.begin(), w.end());
    std::array<int, 3> used{0, 0, 0}, ord = ord0;
    for (int l : w) {
        used[cycle_of_pair(ord[l], ord[l + 1])]++;
        std::swap(ord[l], ord[l + 1]);
    }
    FrontDiagram d = build_theta(ord0, {0, 0, 0}, w);
    ThetaInvariants inv = theta_invariants(d);
    for (int k = 0; k < 3; k++) {
        b.tb[k] = inv.cycle[k].tb + used[k];  // every pair crossing costs one
        b.rot[k] = inv.cycle[k].rot;
    }
    b.ok = true;
    return b;
}

}  // namespace

FrontDiagram standard_unknot(int tb, int rot) {
    if (!acceptable(tb, rot))
        throw NotRealizable("unknot pair (tb=" + std::to_string(tb) + ", rot=" + std::to_string(rot) +
                            ") requires opposite parity and tb+|rot| <= -1");
    int s = rot < 0 ? -rot : rot;
    int t = -(tb + s + 1) / 2;
    FrontDiagram d;
    d.mode = Mode::knot;
    d.edges.push_back({"k", "", ""});
    d.events.push_back(Event::L(0, "k"));
    for (int i = 0; i < 2 * t; i++) d.events.push_back(Event::X(0));
    for (int i = 0; i < s; i++) stabilize_at(d.events, 0, "k", rot > 0);
    d.events.push_back(Event::R(0));
    CycleInvariants got = knot_invariants(d);
    if (got.tb != tb || got.rot != rot)
        throw InternalError("unknot construction closed-loop mismatch");
    return d;
}

Realizability theta_realizable(const std::array<int, 3>& tb, const std::array<int, 3>& rot) {
    Realizability out;
    for (int i = 0; i < 3; i++) {
        if (!acceptable(tb[i], rot[i])) {
            out.reason = "cycle " + std::to_string(i + 1) + " pair (tb=" + std::to_string(tb[i]) +
                         ", rot=" + std::to_string(rot[i]) + ") is not acceptable";
            return out;
        }
    }
    int R = rot[0] - rot[1] + rot[2];
    if (R != 0 && R != -1) {
        out.reason = "rot_1 - rot_2 + rot_3 = " + std::to_string(R) + ", must be 0 or -1";
        return out;
    }
    int r1 = std::abs(rot[0]), r2 = std::abs(rot[1]), r3 = std::abs(rot[2]);
    int cond = 0;
    if (r1 >= r2 + r3) cond = 1;
    else if (r2 >= r1 + r3) cond = 2;
    else if (r3 >= r1 + r2) cond = 3;
    else if (r1 + 1 == r2 + r3) cond = 4;
    else if (r2 + 1 == r1 + r3) cond = 5;
    else if (r3 + 1 == r1 + r2) cond = 6;
    if (cond == 0)
        throw InternalError("admissible rotation triple satisfies none of the six conditions");
    out.ok = true;
    out.condition = cond;
    return out;
}

FrontDiagram realize_theta(const std::array<int, 3>& tb, const std::array<int, 3>& rot,
                           RealizationPlan* plan_out) {
    Realizability ra = theta_realizable(tb, rot);
    if (!ra.ok) throw NotRealizable(ra.reason);
    int R = rot[0] - rot[1] + rot[2];
    int rmax = std::max({std::abs(rot[0]), std::abs(rot[1]), std::abs(rot[2])});

    // rotations of the standard counterclockwise order at the left vertex;
    // each keeps the same cyclic order but changes which pairs are adjacent
    static const std::array<std::array<int, 3>, 3> starts = {{{2, 1, 0}, {1, 0, 2}, {0, 2, 1}}};
    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

    // the front is: stabs (t[e] signed zigzags on edge e), then a word of
    // plain crossings between adjacent strands.  relative to the bare front
    // with the same start and end orders, each crossing between the strands
    // of a cycle lowers that cycle's tb by one, each stab on one of its edges
    // lowers it by one more, and rot shifts by the signed stab counts.  solve
    // that linear system over all candidate order pairs and stab offsets.
    for (int lam_abs = 0; lam_abs <= rmax + 2; lam_abs++)
        for (int lam_sign = 0; lam_sign < (lam_abs ? 2 : 1); lam_sign++)
            for (int si = 0; si < 3; si++)
                for (const auto& end : perms) {
                    const auto& ord0 = starts[si];
                    Baseline base = calibrate(ord0, end);
                    if (!base.ok) continue;
                    if (base.rot[0] - base.rot[1] + base.rot[2] != R) continue;
                    int lam = lam_sign ? -lam_abs : lam_abs;
                    std::array<int, 3> t;
                    t[2] = lam;
                    t[0] = lam + rot[1] - base.rot[1];
                    t[1] = lam + rot[2] - base.rot[2];
                    if (rot[0] != t[0] - t[1] + base.rot[0]) continue;
                    std::array<int, 3> n;
                    n[0] = base.tb[0] - tb[0] - std::abs(t[0]) - std::abs(t[1]);
                    n[1] = base.tb[1] - tb[1] - std::abs(t[0]) - std::abs(t[2]);
                    n[2] = base.tb[2] - tb[2] - std::abs(t[1]) - std::abs(t[2]);
                    if (n[0] < 0 || n[1] < 0 || n[2] < 0) continue;
                    auto word = find_word(ord0, n, end);
                    if (!word) continue;
                    FrontDiagram d = build_theta(ord0, t, *word);
                    ThetaInvariants got = theta_invariants(d);
                    bool match = true;
                    for (int i = 0; i < 3; i++)
                        if (got.cycle[i].tb != tb[i] || got.cycle[i].rot != rot[i]) match = false;
                    if (!match)
                        throw InternalError("realization closed-loop mismatch for (tb=" +
                                            std::to_string(tb[0]) + "," + std::to_string(tb[1]) + "," +
                                            std::to_string(tb[2]) + " rot=" + std::to_string(rot[0]) +
                                            "," + std::to_string(rot[1]) + "," +
                                            std::to_string(rot[2]) + ")");
                    if (plan_out) {
                        RealizationPlan p;
                        p.condition = ra.condition;
                        p.r = {std::abs(rot[0]), std::abs(rot[1]), std::abs(rot[2])};
                        p.stabs = t;
                        p.boxes = n;
                        p.rotation = si;
                        *plan_out = p;
                    }
                    return d;
                }
    throw InternalError("no planar construction found for realizable input");
}

namespace {

struct Profile {
    std::array<int, 3> tb{}, rot{};
    std::vector<std::string> order_a, order_b;  // cyclic orders as edge indices "0","1","2"
};

Profile profile_of(const FrontDiagram& d) {
    GraphStructure g = validate(d);
    if (g.mode != Mode::theta)
        throw ValidationError("cyclic-order comparison requires theta mode");
    Sweep s = sweep_diagram(d);
    ThetaInvariants inv = theta_invariants(s, g);
    Profile p;
    for (int i = 0; i < 3; i++) {
        p.tb[i] = inv.cycle[i].tb;
        p.rot[i] = inv.cycle[i].rot;
    }
    std::map<std::string, std::string> idx;
    for (int i = 0; i < 3; i++) idx[g.edge_order[i]] = std::to_string(i);
    for (auto& e : vertex_cyclic_order(s, g.va)) p.order_a.push_back(idx[e]);
    for (auto& e : vertex_cyclic_order(s, g.vb)) p.order_b.push_back(idx[e]);
    return p;
}

}  // namespace

bool distinguish_by_cyclic_order(const FrontDiagram& g, const FrontDiagram& h) {
    Profile pg = profile_of(g), ph = profile_of(h);
    std::array<int, 3> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        for (int swap_ab = 0; swap_ab <= 1; swap_ab++) {
            // edge i of g plays the role of edge perm[i] of h
            bool inv_ok = true;
            for (int i = 0; i < 3 && inv_ok; i++)
                for (int j = i + 1; j < 3 && inv_ok; j++) {
                    int cg = cycle_of_pair(i, j);
                    int ch = cycle_of_pair(perm[i], perm[j]);
                    // cycle orientation flips when the edge order reverses or
                    // the vertices are exchanged
                    int sign = ((perm[i] < perm[j]) == (i < j)) ? 1 : -1;
                    if (swap_ab) sign = -sign;
                    if (pg.tb[cg] != ph.tb[ch] || sign * pg.rot[cg] != ph.rot[ch]) inv_ok = false;
                }
            if (!inv_ok) continue;
            auto mapped = [&](const std::vector<std::string>& o) {
                std::vector<std::string> out;
                for (auto& s : o) out.push_back(std::to_string(perm[s[0] - '0']));
                return out;
            };
            const auto& ha = swap_ab ? ph.order_b : ph.order_a;
            const auto& hb = swap_ab ? ph.order_a : ph.order_b;
            if (cyclic_equal(mapped(pg.order_a), ha) && cyclic_equal(mapped(pg.order_b), hb))
                return false;  // a symmetry matches everything
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace lfd
