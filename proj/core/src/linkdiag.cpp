#include "lfd/linkdiag.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfd {

LinkDiagram mirror(const LinkDiagram& l) {
    LinkDiagram m = l;
    for (auto& e : m.events)
        if (e.kind == LinkEvent::Kind::cross) e.over_desc = !e.over_desc;
    return m;
}

TracedLink trace_link(const LinkDiagram& l) {
    TracedLink t;
    std::vector<int> strands;  // segment id per current level
    for (size_t i = 0; i < l.events.size(); ++i) {
        const LinkEvent& e = l.events[i];
        int n = (int)strands.size();
        switch (e.kind) {
            case LinkEvent::Kind::create: {
                if (e.level < 0 || e.level > n)
                    throw ValidationError("create level out of range", (int)i);
                int lo = (int)t.segments.size(), hi = lo + 1;
                t.segments.push_back({(int)i, -1, hi, -1, false, false});
                t.segments.push_back({(int)i, -1, lo, -1, true, false});
                strands.insert(strands.begin() + e.level, {lo, hi});
                break;
            }
            case LinkEvent::Kind::merge: {
                if (e.level < 0 || e.level + 1 >= n)
                    throw ValidationError("merge level out of range", (int)i);
                int lo = strands[e.level], hi = strands[e.level + 1];
                t.segments[lo].death_event = (int)i;
                t.segments[lo].death_partner = hi;
                t.segments[lo].death_upper = false;
                t.segments[hi].death_event = (int)i;
                t.segments[hi].death_partner = lo;
                t.segments[hi].death_upper = true;
                strands.erase(strands.begin() + e.level, strands.begin() + e.level + 2);
                break;
            }
            case LinkEvent::Kind::cross: {
                if (e.level < 0 || e.level + 1 >= n)
                    throw ValidationError("cross level out of range", (int)i);
                LinkCrossingInfo x;
                x.event = (int)i;
                x.level = e.level;
                x.seg_asc = strands[e.level];
                x.seg_desc = strands[e.level + 1];
                x.over_desc = e.over_desc;
                x.origin = e.origin;
                x.tag = e.tag;
                t.crossings.push_back(x);
                std::swap(strands[e.level], strands[e.level + 1]);
                break;
            }
        }
    }
    if (!strands.empty()) throw ValidationError("link event word leaves open strands");

    // chain into components: walk through caps, flipping direction at each
    t.seg_comp.assign(t.segments.size(), -1);
    t.seg_dir.assign(t.segments.size(), 0);
    for (size_t s0 = 0; s0 < t.segments.size(); ++s0) {
        if (t.seg_comp[s0] != -1) continue;
        int c = t.num_components++;
        t.comp_segments.push_back({});
        int s = (int)s0, dir = 1;
        while (t.seg_comp[s] == -1) {
            t.seg_comp[s] = c;
            t.seg_dir[s] = dir;
            t.comp_segments[c].push_back(s);
            // rightward strands continue through their death cap, leftward
            // through their birth cap; the partner runs the other way
            int next = dir > 0 ? t.segments[s].death_partner : t.segments[s].birth_partner;
            if (next < 0) throw ValidationError("open component in link trace");
            s = next;
            dir = -dir;
        }
    }
    return t;
}

}  // namespace lfd
