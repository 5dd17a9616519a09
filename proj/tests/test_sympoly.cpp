#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallp1/sympoly.hpp"

using namespace hallp1;

TEST_CASE("basic symmetric polynomials") {
    int m = 3;
    SymPoly e1 = SymPoly::elementary(1, m);
    SymPoly e2 = SymPoly::elementary(2, m);
    SymPoly h2 = SymPoly::complete(2, m);
    // e1^2 = m_2 + 2 m_11 and h2 = m_2 + m_11.
    CHECK((e1 * e1).coeff(Partition{2}) == 1);
    CHECK((e1 * e1).coeff(Partition{1, 1}) == 2);
    CHECK(h2.coeff(Partition{2}) == 1);
    CHECK(h2.coeff(Partition{1, 1}) == 1);
    CHECK(e2.coeff(Partition{1, 1}) == 1);
    CHECK(e2.coeff(Partition{2}) == 0);
}

TEST_CASE("deformed basis polynomials") {
    Rat t = make_rat(1, 2);
    // P_(1) = m_1; P_(1^k) = e_k; P_(2) = m_2 + (1-t) m_11.
    CHECK(hl_poly(Partition{1}, 2, t) == SymPoly::monomial(Partition{1}, 2));
    CHECK(hl_poly(Partition{1, 1}, 3, t) == SymPoly::elementary(2, 3));
    SymPoly p2 = hl_poly(Partition{2}, 2, t);
    CHECK(p2.coeff(Partition{2}) == 1);
    CHECK(p2.coeff(Partition{1, 1}) == make_rat(1, 2));
    // At t = 1 every P_lambda degenerates to the monomial function.
    SymPoly p21 = hl_poly(Partition{2, 1}, 3, Rat(1));
    CHECK(p21 == SymPoly::monomial(Partition{2, 1}, 3));
}

TEST_CASE("elementary expansion") {
    Rat t = make_rat(1, 2);
    // P_(1,1) = e_2 exactly.
    auto e_11 = expand_in_e(hl_poly(Partition{1, 1}, 2, t));
    REQUIRE(e_11.size() == 1);
    CHECK(e_11.at(Partition{2}) == 1);
    // P_(2) = e_1^2 - (1+t) e_2.
    auto e_2 = expand_in_e(hl_poly(Partition{2}, 2, t));
    CHECK(e_2.at(Partition{1, 1}) == 1);
    CHECK(e_2.at(Partition{2}) == -make_rat(3, 2));
    // Round trip: rebuild from the expansion and compare.
    for (const Partition& lam : {Partition{2, 1}, Partition{3}, Partition{2, 2}}) {
        int m = static_cast<int>(weight(lam));
        SymPoly f = hl_poly(lam, m, t);
        SymPoly back = SymPoly::zero(m);
        for (const auto& [mu, a] : expand_in_e(f)) {
            SymPoly prod = SymPoly::one(m);
            for (int part : mu) prod = prod * SymPoly::elementary(part, m);
            back = back + prod.scaled(a);
        }
        CHECK(back == f);
    }
}

TEST_CASE("basis expansion") {
    Rat t = make_rat(1, 3);
    // e_1^2 = P_(2) + (1+t) P_(1,1).
    SymPoly f = SymPoly::elementary(1, 3) * SymPoly::elementary(1, 3);
    auto in_p = expand_in_P(f, t);
    CHECK(in_p.at(Partition{2}) == 1);
    CHECK(in_p.at(Partition{1, 1}) == 1 + t);
}

TEST_CASE("local structure constants, frozen") {
    // Inside the cyclic-plus-line module and small relatives.
    CHECK(hall_number(Partition{1, 1}, Partition{1}, Partition{1}, 2) == 3);
    CHECK(hall_number(Partition{1, 1}, Partition{1}, Partition{1}, 3) == 4);
    CHECK(hall_number(Partition{2}, Partition{1}, Partition{1}, 2) == 1);
    CHECK(hall_number(Partition{2}, Partition{1}, Partition{1}, 5) == 1);
    for (long qx : {2L, 3L, 4L}) {
        CHECK(hall_number(Partition{2, 1}, Partition{1}, Partition{2}, qx) == qx);
        CHECK(hall_number(Partition{2, 1}, Partition{2}, Partition{1}, qx) == qx);
        CHECK(hall_number(Partition{2, 1}, Partition{1, 1}, Partition{1}, qx) == 1);
        CHECK(hall_number(Partition{2, 1}, Partition{1}, Partition{1, 1}, qx) == 1);
        // Containment chain multiplicities at the trivial ends.
        CHECK(hall_number(Partition{2, 1}, Partition{2, 1}, Partition{}, qx) == 1);
        CHECK(hall_number(Partition{2, 1}, Partition{}, Partition{2, 1}, qx) == 1);
        // Weight mismatch vanishes.
        CHECK(hall_number(Partition{2, 1}, Partition{1}, Partition{1}, qx) == 0);
    }
}

TEST_CASE("local structure constants are nonnegative integers") {
    for (const auto& mu : partitions_of(2))
        for (const auto& nu : partitions_of(3))
            for (const auto& [lam, g] : hall_local_product(mu, nu, 3)) {
                CHECK(weight(lam) == 5);
                CHECK(g >= 0);
            }
}

TEST_CASE("local product is commutative") {
    for (long qx : {2L, 3L}) {
        const auto& ab = hall_local_product(Partition{2}, Partition{1, 1}, qx);
        const auto& ba = hall_local_product(Partition{1, 1}, Partition{2}, qx);
        CHECK(ab == ba);
    }
}
