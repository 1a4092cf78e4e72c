#pragma once

#include <array>
#include <string>
#include <vector>

#include "lfd/diagram.hpp"
#include "lfd/linkdiag.hpp"

namespace lfd {

struct PretzelCoefficients {
    std::array<int, 3> a{};
    bool all_even() const { return a[0] % 2 == 0 && a[1] % 2 == 0 && a[2] % 2 == 0; }
    bool all_odd() const { return a[0] % 2 != 0 && a[1] % 2 != 0 && a[2] % 2 != 0; }
};

// a1 = tb1+tb2-tb3 and cyclic analogues; the three always share one parity
PretzelCoefficients pretzel_coefficients(const std::array<int, 3>& tb);

// three two-strand bands with signed half-twist counts, closed into the
// standard pretzel; positive entries are right-handed twists (crossing sign
// +1 under the traced orientations). components: 1 if all odd, 3 if all even.
LinkDiagram pretzel_diagram(const PretzelCoefficients& a);

// 2cr[e_i] + cr[e_i,e_j] + cr[e_i,e_k] - cr[e_j,e_k] where cr are signed
// crossing counts, each pair signed within the cycle it determines; i in 0..2
int b1_quantity(const FrontDiagram& d, int i);

// band-twist ledger per edge: band[i] = -cusps[i] - 1 + b[i]; the tb
// arithmetic makes band[i] equal pretzel_coefficients(tb).a[i]
struct BandLedger {
    std::array<int, 3> b{}, cusps{}, band{};
};
BandLedger band_ledger(const FrontDiagram& d);

struct PretzelCheck {
    std::string name;    // components | linking | sl | jones
    std::string status;  // pass | fail | skip
    std::string detail;
};

struct PretzelReport {
    std::array<int, 3> tb{};
    PretzelCoefficients coeffs;
    int push_components = 0, pretzel_components = 0;
    int push_crossings = 0, pretzel_crossings = 0;
    bool mirror_match = false;  // jones agreed with the mirrored pretzel
    std::vector<PretzelCheck> checks;
    bool passed() const {
        for (auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

// certify that the push-off is the predicted pretzel: compares component
// counts against the parity rule, linking matrices in the 3-component case,
// per-component self-linking, and jones polynomials when both diagrams fit
// under the crossing cap (that check is skipped otherwise)
PretzelReport verify_pretzel(const FrontDiagram& d, int cap = -1);

}  // namespace lfd
