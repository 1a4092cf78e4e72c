#pragma once

#include <vector>

#include "lfd/diagram.hpp"

namespace lfd {

// where a push-off crossing comes from
enum class LinkOrigin { structure, inherited, band, cusp, disk, wrap };

// event word for a generic oriented link projection with explicit over/under:
// create opens a nested strand pair, merge closes one, cross swaps two
// adjacent strands with the named strand on top
struct LinkEvent {
    enum class Kind { create, merge, cross };
    Kind kind = Kind::cross;
    int level = 0;
    bool over_desc = true;  // cross: strand arriving from level+1 passes over
    LinkOrigin origin = LinkOrigin::structure;
    int tag = -1;           // source reference (front crossing/segment/event index)
};

struct LinkDiagram {
    std::vector<LinkEvent> events;
    int crossing_count() const {
        int n = 0;
        for (auto& e : events) n += e.kind == LinkEvent::Kind::cross;
        return n;
    }
};

LinkDiagram mirror(const LinkDiagram& l);

struct LinkSegmentInfo {
    int birth_event = -1, death_event = -1;
    int birth_partner = -1, death_partner = -1;
    bool birth_upper = false, death_upper = false;
};

struct LinkCrossingInfo {
    int event = -1;
    int level = -1;
    int seg_desc = -1, seg_asc = -1;
    bool over_desc = true;
    LinkOrigin origin = LinkOrigin::structure;
    int tag = -1;
};

struct TracedLink {
    std::vector<LinkSegmentInfo> segments;
    std::vector<LinkCrossingInfo> crossings;
    std::vector<int> seg_comp;
    std::vector<int> seg_dir;                    // +1 = traversed left to right
    int num_components = 0;                      // components ordered by first appearance
    std::vector<std::vector<int>> comp_segments; // traversal order per component

    void flip_component(int c) {
        for (int s : comp_segments[c]) seg_dir[s] = -seg_dir[s];
    }
    int crossing_sign(const LinkCrossingInfo& x) const {
        return (x.over_desc ? 1 : -1) * seg_dir[x.seg_desc] * seg_dir[x.seg_asc];
    }
    int component_writhe(int c) const {
        int w = 0;
        for (auto& x : crossings)
            if (seg_comp[x.seg_desc] == c && seg_comp[x.seg_asc] == c) w += crossing_sign(x);
        return w;
    }
    int pair_signed(int i, int j) const {
        int w = 0;
        for (auto& x : crossings) {
            int a = seg_comp[x.seg_desc], b = seg_comp[x.seg_asc];
            if ((a == i && b == j) || (a == j && b == i)) w += crossing_sign(x);
        }
        return w;
    }
    int total_writhe() const {
        int w = 0;
        for (auto& x : crossings) w += crossing_sign(x);
        return w;
    }
};

// sweep the event word, chain segments into closed components, and give each
// component its canonical orientation (earliest segment traversed rightward)
TracedLink trace_link(const LinkDiagram& l);

}  // namespace lfd
