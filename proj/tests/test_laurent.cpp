#include "doctest.h"
#include "lfd/laurent.hpp"

using lfd::Laurent;

TEST_CASE("laurent arithmetic") {
    Laurent a = Laurent::monomial(2) + Laurent::monomial(-2);  // A^2 + A^-2
    Laurent b = Laurent::monomial(0, -1);
    CHECK((a * a).coeff(4) == 1);
    CHECK((a * a).coeff(0) == 2);
    CHECK((a * a).coeff(-4) == 1);
    CHECK((a + b).coeff(0) == -1);
    CHECK((a - a).is_zero());
    CHECK((-a).coeff(2) == -1);
    Laurent d = Laurent::monomial(3, 2) - Laurent::monomial(3, 2);
    CHECK(d.is_zero());
}

TEST_CASE("laurent substitution and parity") {
    Laurent a = Laurent::monomial(4) - Laurent::monomial(-6, 3);
    Laurent m = a.substitute_power(-1);
    CHECK(m.coeff(-4) == 1);
    CHECK(m.coeff(6) == -3);
    CHECK(a.exponents_divisible(2));
    CHECK_FALSE(a.exponents_divisible(4));
    CHECK(a.min_exp() == -6);
    CHECK(a.max_exp() == 4);
}

TEST_CASE("laurent printing") {
    CHECK(Laurent().str("A") == "0");
    CHECK(Laurent(5).str("A") == "5");
    Laurent a = Laurent::monomial(2) - Laurent::monomial(0, 3) + Laurent::monomial(-1, 1);
    CHECK(a.str("A") == "A^2 - 3 + A^-1");
    CHECK(Laurent::monomial(1, -2).str("t") == "-2*t");
}
