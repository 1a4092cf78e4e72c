#include "lfd/render.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace lfd {

namespace {

// common drawing model: a word of strand events with a class key per strand
struct REvent {
    enum class Kind { birth, death, cross, vertex };
    Kind kind = Kind::cross;
    int level = 0;
    bool over_desc = true;
    int in = 0, out = 0;
    std::vector<int> pre;   // strand keys per level before the event
    std::vector<int> born;  // keys added (birth: 2, vertex: out)
};

struct RModel {
    std::vector<REvent> events;
    std::vector<std::string> key_names;  // key -> class suffix
    int max_strands = 0;
    int num_crossings = 0;
};

RModel model_front(const FrontDiagram& d) {
    RModel m;
    std::map<std::string, int> keys;
    auto key = [&](const std::string& e) {
        auto [it, fresh] = keys.try_emplace(e, (int)m.key_names.size());
        if (fresh) m.key_names.push_back(e);
        return it->second;
    };
    std::vector<int> state;
    for (auto& e : d.events) {
        REvent r;
        r.level = e.level;
        r.pre = state;
        switch (e.kind) {
            case EventKind::left_cusp:
                r.kind = REvent::Kind::birth;
                r.born = {key(e.edge), key(e.edge)};
                state.insert(state.begin() + e.level, r.born.begin(), r.born.end());
                break;
            case EventKind::right_cusp:
                r.kind = REvent::Kind::death;
                state.erase(state.begin() + e.level, state.begin() + e.level + 2);
                break;
            case EventKind::crossing:
                r.kind = REvent::Kind::cross;
                r.over_desc = true;  // front slopes force the descending strand over
                std::swap(state[e.level], state[e.level + 1]);
                m.num_crossings++;
                break;
            case EventKind::vertex:
                r.kind = REvent::Kind::vertex;
                r.in = e.in_arity;
                r.out = e.out_arity;
                for (auto& l : e.labels) r.born.push_back(key(l));
                state.erase(state.begin() + e.level, state.begin() + e.level + e.in_arity);
                state.insert(state.begin() + e.level, r.born.begin(), r.born.end());
                break;
        }
        m.max_strands = std::max(m.max_strands, (int)std::max(r.pre.size(), state.size()));
        m.events.push_back(std::move(r));
    }
    return m;
}

RModel model_link(const LinkDiagram& l) {
    RModel m;
    TracedLink t = trace_link(l);
    m.key_names.resize(t.num_components);
    for (int c = 0; c < t.num_components; c++) m.key_names[c] = "T" + std::to_string(c + 1);
    std::vector<int> state;  // segment ids
    int next = 0;
    auto keyed = [&](const std::vector<int>& segs) {
        std::vector<int> out;
        for (int s : segs) out.push_back(t.seg_comp[s]);
        return out;
    };
    for (auto& e : l.events) {
        REvent r;
        r.level = e.level;
        r.pre = keyed(state);
        switch (e.kind) {
            case LinkEvent::Kind::create:
                r.kind = REvent::Kind::birth;
                state.insert(state.begin() + e.level, {next, next + 1});
                r.born = {t.seg_comp[next], t.seg_comp[next + 1]};
                next += 2;
                break;
            case LinkEvent::Kind::merge:
                r.kind = REvent::Kind::death;
                state.erase(state.begin() + e.level, state.begin() + e.level + 2);
                break;
            case LinkEvent::Kind::cross:
                r.kind = REvent::Kind::cross;
                r.over_desc = e.over_desc;
                std::swap(state[e.level], state[e.level + 1]);
                m.num_crossings++;
                break;
        }
        m.max_strands = std::max(m.max_strands, (int)std::max(r.pre.size(), state.size()));
        m.events.push_back(std::move(r));
    }
    return m;
}

// ---- svg ----

std::string svg_render(const RModel& m, const char* strand_class) {
    const int dx = 40, dy = 30, half = 10, gap = 4;
    int h = 40 + dy * std::max(m.max_strands - 1, 0);
    int w = 40 + dx * std::max((int)m.events.size() - 1, 0);
    auto cx = [&](int i) { return 20 + dx * i; };
    auto y = [&](int level) { return h - 20 - dy * level; };

    // per-key subpath fragments, assembled into one path element per key
    std::vector<std::string> frag(m.key_names.size());
    auto line = [&](int k, int x0, int y0, int x1, int y1) {
        std::ostringstream os;
        os << "M" << x0 << " " << y0 << "L" << x1 << " " << y1;
        frag[k] += os.str();
    };
    std::ostringstream extra;  // crossings and vertex dots

    auto consumes = [](const REvent& e, int s) {
        switch (e.kind) {
            case REvent::Kind::birth: return false;
            case REvent::Kind::death:
            case REvent::Kind::cross: return s == e.level || s == e.level + 1;
            case REvent::Kind::vertex: return s >= e.level && s < e.level + e.in;
        }
        return false;
    };
    auto produces = [](const REvent& e, int s) {
        switch (e.kind) {
            case REvent::Kind::death: return false;
            case REvent::Kind::birth:
            case REvent::Kind::cross: return s == e.level || s == e.level + 1;
            case REvent::Kind::vertex: return s >= e.level && s < e.level + e.out;
        }
        return false;
    };

    for (size_t i = 0; i < m.events.size(); i++) {
        auto& e = m.events[i];
        int c = cx((int)i);
        // horizontal runs across the interval ending at this event
        for (int s = 0; s < (int)e.pre.size(); s++) {
            int x0 = i == 0 ? 0 : cx((int)i - 1) + (produces(m.events[i - 1], s) ? half : 0);
            int x1 = c - (consumes(e, s) ? half : 0);
            if (x0 < x1) line(e.pre[s], x0, y(s), x1, y(s));
        }
        switch (e.kind) {
            case REvent::Kind::birth: {
                std::ostringstream os;
                os << "M" << c + half << " " << y(e.level) << "Q" << c - half << " "
                   << (y(e.level) + y(e.level + 1)) / 2 << " " << c + half << " "
                   << y(e.level + 1);
                frag[e.born[0]] += os.str();
                break;
            }
            case REvent::Kind::death: {
                std::ostringstream os;
                os << "M" << c - half << " " << y(e.level) << "Q" << c + half << " "
                   << (y(e.level) + y(e.level + 1)) / 2 << " " << c - half << " "
                   << y(e.level + 1);
                frag[e.pre[e.level]] += os.str();
                break;
            }
            case REvent::Kind::cross: {
                int ylo = y(e.level), yhi = y(e.level + 1);
                int mx = c, my = (ylo + yhi) / 2;
                int gy = gap * (ylo - yhi) / (2 * half);  // keeps the break collinear
                extra << "<g class=\"crossing\">";
                auto seg = [&](int x0, int y0, int x1, int y1) {
                    extra << "<path d=\"M" << x0 << " " << y0 << "L" << x1 << " " << y1
                          << "\"/>";
                };
                if (e.over_desc) {
                    // strand falling left-to-right drawn through, the other broken
                    seg(c - half, yhi, c + half, ylo);
                    seg(c - half, ylo, mx - gap, my + gy);
                    seg(mx + gap, my - gy, c + half, yhi);
                } else {
                    seg(c - half, ylo, c + half, yhi);
                    seg(c - half, yhi, mx - gap, my - gy);
                    seg(mx + gap, my + gy, c + half, ylo);
                }
                extra << "</g>";
                break;
            }
            case REvent::Kind::vertex: {
                int span = std::max(std::max(e.in, e.out), 1);
                int yv = (y(e.level) + y(e.level + span - 1)) / 2;
                for (int s = 0; s < e.in; s++)
                    line(e.pre[e.level + s], c - half, y(e.level + s), c, yv);
                for (int s = 0; s < e.out; s++)
                    line(e.born[s], c, yv, c + half, y(e.level + s));
                extra << "<circle class=\"vertex\" cx=\"" << c << "\" cy=\"" << yv
                      << "\" r=\"4\"/>";
                break;
            }
        }
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    for (size_t k = 0; k < m.key_names.size(); k++)
        os << "<path class=\"" << strand_class << "\" id=\"" << strand_class << "-"
           << m.key_names[k] << "\" d=\"" << frag[k] << "\"/>\n";
    os << extra.str() << "\n</g>\n</svg>\n";
    return os.str();
}

// ---- ascii ----

std::string ascii_render(const RModel& m) {
    const int pitch = 6;  // glyphs occupy c-1..c+1, leaving a 3-column gap between
    int rows = std::max(2 * m.max_strands - 1, 1);
    int cols = pitch * (int)m.events.size() + 1;
    std::vector<std::string> grid(rows, std::string(cols, ' '));
    auto row = [&](int level) { return rows - 1 - 2 * level; };
    auto put = [&](int r, int c, char ch) {
        if (r >= 0 && r < rows && c >= 0 && c < cols) grid[r][c] = ch;
    };

    for (size_t i = 0; i < m.events.size(); i++) {
        auto& e = m.events[i];
        int c = pitch * (int)i + 3;  // event glyph center column
        // interval run up to this event's glyph
        int x0 = i == 0 ? 1 : c - pitch + 2;
        for (int s = 0; s < (int)e.pre.size(); s++) {
            bool touched = e.kind != REvent::Kind::birth &&
                           s >= e.level &&
                           s < e.level + (e.kind == REvent::Kind::vertex ? e.in : 2);
            for (int x = x0; x <= (touched ? c - 2 : c + 1); x++) put(row(s), x, '-');
        }
        switch (e.kind) {
            case REvent::Kind::birth:
                put(row(e.level) - 1, c - 1, '<');
                put(row(e.level + 1), c, '/');
                put(row(e.level), c, '\\');
                put(row(e.level + 1), c + 1, '-');
                put(row(e.level), c + 1, '-');
                break;
            case REvent::Kind::death:
                put(row(e.level) - 1, c + 1, '>');
                put(row(e.level + 1), c, '\\');
                put(row(e.level), c, '/');
                put(row(e.level + 1), c - 1, '-');
                put(row(e.level), c - 1, '-');
                break;
            case REvent::Kind::cross: {
                int rB = row(e.level), rT = row(e.level + 1), rC = rB - 1;
                put(rT, c - 1, '\\');
                put(rB, c + 1, '\\');
                put(rB, c - 1, '/');
                put(rT, c + 1, '/');
                put(rC, c, e.over_desc ? '\\' : '/');
                break;
            }
            case REvent::Kind::vertex: {
                int span = std::max(std::max(e.in, e.out), 1);
                int rv = (row(e.level) + row(e.level + span - 1)) / 2;
                put(rv, c, '*');
                for (int s = 0; s < e.in; s++) {
                    int r = row(e.level + s);
                    put(r == rv ? rv : (r + rv) / 2, c - 1,
                        r == rv ? '-' : (r > rv ? '/' : '\\'));
                }
                for (int s = 0; s < e.out; s++) {
                    int r = row(e.level + s);
                    put(r == rv ? rv : (r + rv) / 2, c + 1,
                        r == rv ? '-' : (r > rv ? '\\' : '/'));
                }
                break;
            }
        }
    }

    std::ostringstream os;
    for (auto& line : grid) {
        size_t end = line.find_last_not_of(' ');
        os << (end == std::string::npos ? "" : line.substr(0, end + 1)) << "\n";
    }
    return os.str();
}

}  // namespace

std::string render(const FrontDiagram& d, RenderFormat f) {
    RModel m = model_front(d);
    return f == RenderFormat::svg ? svg_render(m, "edge") : ascii_render(m);
}

std::string render(const LinkDiagram& l, RenderFormat f) {
    RModel m = model_link(l);
    return f == RenderFormat::svg ? svg_render(m, "component") : ascii_render(m);
}

}  // namespace lfd
