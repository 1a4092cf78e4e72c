#include "lfd/bracket.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lfd {

int default_crossing_cap() {
    const char* s = std::getenv("LFD_CROSSING_CAP");
    if (!s || !*s) return 24;
    int v = std::atoi(s);
    return v > 0 ? v : 24;
}

namespace {

// planar data of the closed diagram: arcs between events, crossing end
// quadruples, and the fixed joins made by creates and merges
struct PlanarData {
    int num_arcs = 0;
    struct Quad {
        int a, b, c, d;  // in_lo, in_hi, out_lo, out_hi
        bool over_desc;
    };
    std::vector<Quad> crossings;
    std::vector<std::pair<int, int>> joins;
};

PlanarData extract(const LinkDiagram& l) {
    PlanarData p;
    std::vector<int> state;
    for (auto& e : l.events) {
        int m = e.level;
        switch (e.kind) {
            case LinkEvent::Kind::create:
                if (m < 0 || m > (int)state.size())
                    throw std::invalid_argument("create level out of range");
                state.insert(state.begin() + m, {p.num_arcs, p.num_arcs + 1});
                p.joins.push_back({p.num_arcs, p.num_arcs + 1});
                p.num_arcs += 2;
                break;
            case LinkEvent::Kind::merge:
                if (m < 0 || m + 1 >= (int)state.size())
                    throw std::invalid_argument("merge level out of range");
                p.joins.push_back({state[m], state[m + 1]});
                state.erase(state.begin() + m, state.begin() + m + 2);
                break;
            case LinkEvent::Kind::cross:
                if (m < 0 || m + 1 >= (int)state.size())
                    throw std::invalid_argument("cross level out of range");
                p.crossings.push_back({state[m], state[m + 1], p.num_arcs,
                                       p.num_arcs + 1, e.over_desc});
                state[m] = p.num_arcs;
                state[m + 1] = p.num_arcs + 1;
                p.num_arcs += 2;
                break;
        }
    }
    if (!state.empty()) throw std::invalid_argument("link diagram does not close");
    return p;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; i++) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Laurent kauffman_bracket(const LinkDiagram& l, int cap) {
    if (cap < 0) cap = default_crossing_cap();
    int n = l.crossing_count();
    if (n > cap) throw CrossingCapExceeded(n, cap);

    PlanarData p = extract(l);

    // contract the fixed joins; states only need to merge crossing ends
    Dsu base(p.num_arcs);
    for (auto [a, b] : p.joins) base.join(a, b);
    std::vector<int> node(p.num_arcs, -1);
    int num_nodes = 0;
    auto touch = [&](int arc) {
        int r = base.find(arc);
        if (node[r] < 0) node[r] = num_nodes++;
        return node[r];
    };
    // each crossing smooths to two end pairings: A keeps the strands parallel
    // when the descending strand is over, and turns them back otherwise
    struct Pairs {
        int a0, a1, a2, a3;  // A smoothing joins (a0,a1),(a2,a3)
        int b0, b1, b2, b3;  // B smoothing
    };
    std::vector<Pairs> pairs;
    for (auto& x : p.crossings) {
        int a = touch(x.a), b = touch(x.b), c = touch(x.c), d = touch(x.d);
        if (x.over_desc) pairs.push_back({a, c, b, d, a, b, c, d});
        else pairs.push_back({a, b, c, d, a, c, b, d});
    }
    int isolated = 0;
    for (int i = 0; i < p.num_arcs; i++)
        if (base.find(i) == i && node[i] < 0) isolated++;
    if (num_nodes == 0 && isolated == 0) return Laurent(1);

    // counts[b][loops]: states with b B-smoothings closing `loops` circles
    int max_loops = num_nodes + isolated + 1;
    auto run = [&](std::uint64_t lo, std::uint64_t hi,
                   std::vector<std::uint64_t>& counts) {
        std::vector<int> parent(num_nodes);
        for (std::uint64_t s = lo; s < hi; s++) {
            for (int i = 0; i < num_nodes; i++) parent[i] = i;
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (int i = 0; i < n; i++) {
                auto& q = pairs[i];
                if (s >> i & 1) {
                    parent[find(q.b0)] = find(q.b1);
                    parent[find(q.b2)] = find(q.b3);
                } else {
                    parent[find(q.a0)] = find(q.a1);
                    parent[find(q.a2)] = find(q.a3);
                }
            }
            int loops = isolated;
            for (int i = 0; i < num_nodes; i++) loops += parent[i] == i;
            counts[std::popcount(s) * max_loops + loops]++;
        }
    };

    std::uint64_t total = std::uint64_t(1) << n;
    std::vector<std::uint64_t> counts((n + 1) * max_loops, 0);
    unsigned workers = n >= 16 ? std::thread::hardware_concurrency() : 1;
    if (workers <= 1) {
        run(0, total, counts);
    } else {
        std::vector<std::vector<std::uint64_t>> local(
            workers, std::vector<std::uint64_t>((n + 1) * max_loops, 0));
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; t++)
            pool.emplace_back([&, t] {
                run(total * t / workers, total * (t + 1) / workers, local[t]);
            });
        for (auto& th : pool) th.join();
        for (auto& c : local)
            for (size_t i = 0; i < counts.size(); i++) counts[i] += c[i];
    }

    // sum A^(n-2b) * delta^(loops-1), delta = -A^2 - A^-2
    Laurent delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    std::vector<Laurent> dpow(max_loops);
    dpow[0] = Laurent(1);
    for (int k = 1; k < max_loops; k++) dpow[k] = dpow[k - 1] * delta;
    Laurent out;
    for (int b = 0; b <= n; b++)
        for (int loops = 1; loops < max_loops; loops++) {
            std::uint64_t c = counts[b * max_loops + loops];
            if (!c) continue;
            Laurent term = dpow[loops - 1] * Laurent((long long)c);
            for (auto& [e, co] : term.terms()) out.add_term(e + n - 2 * b, co);
        }
    return out;
}

Laurent normalized_bracket(const LinkDiagram& l, int writhe, int cap) {
    Laurent br = kauffman_bracket(l, cap);
    Laurent out;
    long long sign = (writhe % 2 == 0) ? 1 : -1;  // (-1)^(3w)
    for (auto& [e, c] : br.terms()) out.add_term(e - 3 * writhe, sign * c);
    return out;
}

Laurent normalized_bracket(const LinkDiagram& l, int cap) {
    return normalized_bracket(l, trace_link(l).total_writhe(), cap);
}

Laurent jones(const LinkDiagram& l, int writhe, int cap) {
    Laurent f = normalized_bracket(l, writhe, cap);
    if (!f.exponents_divisible(2))
        throw std::logic_error("normalized bracket has odd exponent");
    Laurent out;
    for (auto& [e, c] : f.terms()) out.add_term(-e / 2, c);
    return out;
}

Laurent jones(const LinkDiagram& l, int cap) {
    return jones(l, trace_link(l).total_writhe(), cap);
}

}  // namespace lfd
