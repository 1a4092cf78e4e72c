#pragma once

#include <string>
#include <vector>

#include "lfd/diagram.hpp"
#include "lfd/realize.hpp"

namespace corpus {

inline lfd::FrontDiagram theta(const std::string& events) {
    return lfd::parse_lfd(
        "mode theta\n"
        "vertex a degree 3\nvertex b degree 3\n"
        "edge e1 a b\nedge e2 a b\nedge e3 a b\n"
        "events:\n" +
        events);
}

inline lfd::FrontDiagram minimal_theta() {
    return theta("V a 0 in=0 out=3 labels=e3,e2,e1\nV b 0 in=3 out=0\n");
}

inline lfd::FrontDiagram twisted_theta() {
    return theta("V a 0 in=0 out=3 labels=e3,e2,e1\nX 0\nV b 0 in=3 out=0\n");
}

// e1 leaves the a-side cusp and passes over the other edges into a raised b
inline lfd::FrontDiagram overpass_theta() {
    return theta(
        "V a 0 in=0 out=3 labels=e3,e2,e1\n"
        "L 0 e1\nX 1\nX 2\n"
        "V b 1 in=3 out=0\nR 0\n");
}

// vertex a with one edge entering from the left
inline lfd::FrontDiagram mixed_a_theta() {
    return theta(
        "L 0 e1\n"
        "V a 0 in=1 out=2 labels=e3,e2\n"
        "X 1\nX 0\nX 1\n"
        "V b 0 in=3 out=0\n");
}

// vertex b with one edge exiting to the right
inline lfd::FrontDiagram mixed_b_theta() {
    return theta(
        "V a 0 in=0 out=3 labels=e3,e2,e1\n"
        "V b 0 in=2 out=1 labels=e1\n"
        "R 0\n");
}

inline std::vector<lfd::FrontDiagram> theta_seeds() {
    std::vector<lfd::FrontDiagram> out = {
        minimal_theta(), twisted_theta(), overpass_theta(), mixed_a_theta(), mixed_b_theta(),
    };
    out.push_back(lfd::realize_theta({-1, -5, -3}, {0, 0, 0}));
    out.push_back(lfd::realize_theta({-1, -3, -5}, {0, 0, 0}));
    out.push_back(lfd::realize_theta({-2, -2, -2}, {1, 1, -1}));
    out.push_back(lfd::realize_theta({-3, -2, -4}, {0, 1, 1}));
    out.push_back(lfd::realize_theta({-2, -3, -3}, {-1, 0, 0}));
    out.push_back(lfd::realize_theta({-4, -3, -2}, {-3, -2, 1}));
    out.push_back(lfd::realize_theta({-1, -1, -2}, {0, 0, -1}));
    return out;
}

}  // namespace corpus
