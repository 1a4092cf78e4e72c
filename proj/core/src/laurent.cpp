#include "lfd/laurent.hpp"

#include <sstream>

namespace lfd {

std::string Laurent::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent first, conventional reading order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace lfd
