#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lfd/laurent.hpp"
#include "lfd/linkdiag.hpp"

// independent skein-recursion evaluator: smooths one crossing at a time and
// counts the remaining circles by walking arc joins, no union-find state sum
namespace oracle {

struct SkeinDiagram {
    struct Quad {
        int in_lo, in_hi, out_lo, out_hi;
        bool over_desc;
    };
    int num_arcs = 0;
    std::vector<Quad> crossings;
    std::vector<std::pair<int, int>> joins;
};

inline SkeinDiagram skein_extract(const lfd::LinkDiagram& l) {
    using lfd::LinkEvent;
    SkeinDiagram d;
    std::vector<int> state;
    for (auto& e : l.events) {
        int m = e.level;
        if (e.kind == LinkEvent::Kind::create) {
            state.insert(state.begin() + m, {d.num_arcs, d.num_arcs + 1});
            d.joins.push_back({d.num_arcs, d.num_arcs + 1});
            d.num_arcs += 2;
        } else if (e.kind == LinkEvent::Kind::merge) {
            d.joins.push_back({state[m], state[m + 1]});
            state.erase(state.begin() + m, state.begin() + m + 2);
        } else {
            d.crossings.push_back({state[m], state[m + 1], d.num_arcs,
                                   d.num_arcs + 1, e.over_desc});
            state[m] = d.num_arcs;
            state[m + 1] = d.num_arcs + 1;
            d.num_arcs += 2;
        }
    }
    if (!state.empty()) throw std::logic_error("link event word leaves open strands");
    return d;
}

inline int count_circles(int num_arcs, const std::vector<std::pair<int, int>>& joins) {
    // every arc end is joined exactly twice once all crossings are smoothed;
    // walk the pairing graph and count its cycles
    std::multimap<int, int> adj;
    for (auto [a, b] : joins) {
        adj.insert({a, b});
        adj.insert({b, a});
    }
    std::set<int> seen;
    int circles = 0;
    for (int start = 0; start < num_arcs; start++) {
        if (seen.count(start)) continue;
        circles++;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            if (!seen.insert(a).second) continue;
            auto [lo, hi] = adj.equal_range(a);
            for (auto it = lo; it != hi; ++it) stack.push_back(it->second);
        }
    }
    return circles;
}

inline lfd::Laurent skein_bracket(const SkeinDiagram& d, size_t next,
                                  std::vector<std::pair<int, int>> joins) {
    using lfd::Laurent;
    if (next == d.crossings.size()) {
        int circles = count_circles(d.num_arcs, joins);
        Laurent delta;
        delta.add_term(2, -1);
        delta.add_term(-2, -1);
        Laurent out(1);
        for (int i = 1; i < circles; i++) out *= delta;
        return out;
    }
    auto& x = d.crossings[next];
    std::vector<std::pair<int, int>> a = joins, b = joins;
    if (x.over_desc) {
        a.push_back({x.in_lo, x.out_lo});
        a.push_back({x.in_hi, x.out_hi});
        b.push_back({x.in_lo, x.in_hi});
        b.push_back({x.out_lo, x.out_hi});
    } else {
        a.push_back({x.in_lo, x.in_hi});
        a.push_back({x.out_lo, x.out_hi});
        b.push_back({x.in_lo, x.out_lo});
        b.push_back({x.in_hi, x.out_hi});
    }
    return Laurent::monomial(1) * skein_bracket(d, next + 1, a) +
           Laurent::monomial(-1) * skein_bracket(d, next + 1, b);
}

inline lfd::Laurent skein_bracket(const lfd::LinkDiagram& l) {
    SkeinDiagram d = skein_extract(l);
    return skein_bracket(d, 0, d.joins);
}

}  // namespace oracle
