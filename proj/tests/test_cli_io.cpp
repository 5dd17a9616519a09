#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallp1/expr.hpp"
#include "hallp1/json_io.hpp"

using namespace hallp1;
using nlohmann::json;

namespace {
const long Q = 2;
ClosedPoint inf_pt() { return ClosedPoint::infinity(Q); }
ClosedPoint quad_pt() { return ClosedPoint::finite(FqPoly{Q, {1, 1, 1}}); }
}  // namespace

TEST_CASE("integer serialization, small and huge") {
    CHECK(int_to_json(Int(-42)).is_number_integer());
    CHECK(int_from_json(int_to_json(Int(-42))) == -42);
    Int huge = int_pow(Int(2), 80);
    json j = int_to_json(huge);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == huge);
    CHECK(int_from_json(json("123456789012345678901234567890")) ==
          Int("123456789012345678901234567890"));
}

TEST_CASE("rational and coefficient round trip") {
    Rat r = make_rat(-22, 8);
    CHECK(rat_from_json(rat_to_json(r)) == r);
    for (Coeff c : {Coeff::zero(Q), Coeff::one(Q), Coeff::v_pow(-3, Q),
                    Coeff::from_rat(make_rat(7, 4), Q) + Coeff::v_pow(1, Q)}) {
        json j = coeff_to_json(c);
        CHECK(j.contains("a"));
        CHECK(j.contains("b"));
        CHECK(coeff_from_json(j, Q) == c);
    }
    CHECK_THROWS_AS(rat_from_json(json::array({1})), std::invalid_argument);
}

TEST_CASE("partition and point round trip") {
    for (Partition p : {Partition{}, Partition{3, 1, 1}}) {
        CHECK(partition_from_json(partition_to_json(p)) == p);
    }
    CHECK_THROWS_AS(partition_from_json(json::array({1, 2})), std::invalid_argument);
    for (const ClosedPoint& x : {inf_pt(), quad_pt()}) {
        CHECK(point_from_json(point_to_json(x), Q) == x);
    }
    CHECK(point_from_json(json("inf"), Q) == inf_pt());
    CHECK_THROWS_AS(point_from_json(json("nowhere"), Q), std::invalid_argument);
}

TEST_CASE("torsion class and element round trip") {
    TorsionClass t = TorsionClass::at(inf_pt(), {2, 1}).with(quad_pt(), {1});
    json j = torsion_class_to_json(t);
    CHECK(j.is_array());
    CHECK(torsion_class_from_json(j, Q) == t);

    TorsionElement e = TorsionElement::single(Q, t, Coeff::v_pow(-1, Q));
    e.add_term(TorsionClass::trivial(), Coeff::from_int(5, Q));
    CHECK(torsion_element_from_json(torsion_element_to_json(e), Q) == e);
}

TEST_CASE("sheaf class and element round trip") {
    SheafClass c = SheafClass::zero_sheaf();
    c.bundle[-1] = 2;
    c.bundle[3] = 1;
    c.torsion = TorsionClass::at(inf_pt(), {1});
    CHECK(sheaf_class_from_json(sheaf_class_to_json(c), Q) == c);

    HallElement e = HallElement::single(Q, c, Coeff::v_pow(3, Q));
    e.add_term(SheafClass::line(0), -Coeff::one(Q));
    json j = hall_element_to_json(e);
    CHECK(j.contains("terms"));
    CHECK(hall_element_from_json(j, Q) == e);
}

TEST_CASE("basis monomial and element round trip") {
    PBWMonomial m;
    m.c[-2] = 1;
    m.c[0] = 3;
    m.d[1] = 2;
    m.d[3] = 1;
    CHECK(pbw_monomial_from_json(pbw_monomial_to_json(m)) == m);

    BElement f;
    b_add_term(f, m, Coeff::v_pow(-2, Q));
    b_add_term(f, PBWMonomial::unit(), Coeff::from_int(3, Q));
    CHECK(b_element_from_json(b_element_to_json(f, Q), Q) == f);
}

TEST_CASE("iso report shape") {
    IsoReport r;
    r.q = 2;
    r.max_total_degree = 4;
    r.checked = 10;
    r.mismatches.push_back({"g1 g0", "details"});
    json j = iso_report_to_json(r);
    CHECK(j.at("checked") == 10);
    CHECK(j.at("mismatches").size() == 1);
    CHECK(j.at("mismatches")[0].at("item") == "g1 g0");
}

TEST_CASE("expression evaluation") {
    HallElement p = parse_element_expr("O(2) . O(0)", Q);
    CHECK(p == hall_product(Q, SheafClass::line(2), SheafClass::line(0)));

    HallElement tw = parse_element_expr("O(0) * O(0)", Q);
    CHECK(tw == ringel_product(Q, SheafClass::line(0), SheafClass::line(0)));

    HallElement scaled = parse_element_expr("3/2 * O(1)^2", Q);
    CHECK(scaled ==
          HallElement::single(Q, SheafClass::line_power(1, 2), Coeff::from_rat(make_rat(3, 2), Q)));

    HallElement vpow = parse_element_expr("v^-2 * T(inf,[1])", Q);
    CHECK(vpow == HallElement::single(Q, SheafClass::of_torsion(TorsionClass::at(inf_pt(), {1})),
                                      Coeff::v_pow(-2, Q)));

    HallElement sum = parse_element_expr("(O(1) + O(0)) . O(0)", Q);
    CHECK(sum == hall_product(Q, SheafClass::line(1), SheafClass::line(0)) +
                     hall_product(Q, SheafClass::line(0), SheafClass::line(0)));

    HallElement diff = parse_element_expr("O(3) - O(3)", Q);
    CHECK(diff.is_zero());

    HallElement neg = parse_element_expr("- 2 * O(0)", Q);
    CHECK(neg == HallElement::single(Q, SheafClass::line(0), Coeff::from_int(-2, Q)));

    HallElement tq = parse_element_expr("T([0,1],[2,1]) . T([0,1],[1])", Q);
    CHECK(tq.terms.size() == 3);  // local product at the finite point z
}

TEST_CASE("expression errors carry positions") {
    CHECK_THROWS_AS(parse_element_expr("O(", Q), ParseError);
    CHECK_THROWS_AS(parse_element_expr("w", Q), ParseError);
    CHECK_THROWS_AS(parse_element_expr("O(1) +", Q), ParseError);
    CHECK_THROWS_AS(parse_element_expr("O(1) O(0)", Q), ParseError);
    CHECK_THROWS_AS(parse_element_expr("T(inf,[1,2])", Q), ParseError);
    CHECK_THROWS_AS(parse_element_expr("T([1,0,1],[1])", Q), ParseError);  // reducible poly
    CHECK_THROWS_AS(parse_element_expr("", Q), ParseError);
    try {
        parse_element_expr("O(1) + #", Q);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 7);
    }
}

TEST_CASE("generator words") {
    GenWord w = parse_gen_word("h1 g0 g-2");
    REQUIRE(w.size() == 3);
    CHECK(w[0] == h_letter(1));
    CHECK(w[1] == g_letter(0));
    CHECK(w[2] == g_letter(-2));
    CHECK(parse_gen_word("").empty());
    CHECK_THROWS_AS(parse_gen_word("g"), ParseError);
    CHECK_THROWS_AS(parse_gen_word("h0"), ParseError);
    CHECK_THROWS_AS(parse_gen_word("k3"), ParseError);
    CHECK_THROWS_AS(parse_gen_word("g1x"), ParseError);
}

TEST_CASE("partition and point parsers") {
    CHECK(parse_partition("[3,1,1]") == Partition{3, 1, 1});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_partition(" [ 2 , 1 ] ") == Partition{2, 1});
    CHECK_THROWS_AS(parse_partition("[1,3]"), ParseError);
    CHECK(parse_point("inf", Q) == inf_pt());
    CHECK(parse_point("[1,1,1]", Q) == quad_pt());
    CHECK_THROWS_AS(parse_point("[2]", Q), ParseError);  // constant, not monic irreducible
}
