#pragma once

#include <stdexcept>
#include <string>

#include "lfd/laurent.hpp"
#include "lfd/linkdiag.hpp"

namespace lfd {

// the state sum is exponential; diagrams above the cap are refused
struct CrossingCapExceeded : std::runtime_error {
    int count, cap;
    CrossingCapExceeded(int count, int cap)
        : std::runtime_error("crossing count " + std::to_string(count) +
                             " exceeds state-sum cap " + std::to_string(cap)),
          count(count), cap(cap) {}
};

// 24 unless overridden by the LFD_CROSSING_CAP environment variable
int default_crossing_cap();

// kauffman bracket in the variable A, by full state sum over 2^n smoothings;
// 0-crossing unknot gives 1. states are partitioned across threads for n >= 16.
Laurent kauffman_bracket(const LinkDiagram& l, int cap = -1);

// (-A)^(-3w) * bracket; invariant of the oriented link, still in A. the
// one-argument form takes w from the canonical trace orientations; pass w
// explicitly when the components carry other orientations (writhe is the
// only orientation-dependent part)
Laurent normalized_bracket(const LinkDiagram& l, int cap = -1);
Laurent normalized_bracket(const LinkDiagram& l, int writhe, int cap);

// jones polynomial in q = t^(1/2) (A = t^(-1/4), so every A-exponent of the
// normalized bracket is even and maps to q^(-exp/2))
Laurent jones(const LinkDiagram& l, int cap = -1);
Laurent jones(const LinkDiagram& l, int writhe, int cap);

}  // namespace lfd
