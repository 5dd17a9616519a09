#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallp1/torsion.hpp"

using namespace hallp1;

namespace {
const long Q = 2;
ClosedPoint inf_pt() { return ClosedPoint::infinity(Q); }
ClosedPoint z_pt() { return ClosedPoint::finite(FqPoly{Q, {0, 1}}); }
ClosedPoint quad_pt() { return ClosedPoint::finite(FqPoly{Q, {1, 1, 1}}); }
Coeff one() { return Coeff::one(Q); }
}  // namespace

TEST_CASE("torsion classes") {
    TorsionClass t = TorsionClass::at(inf_pt(), {2, 1});
    CHECK(t.degree() == 3);
    CHECK(t.single_point());
    CHECK(t.to_string() == "T(inf,[2,1])");
    TorsionClass both = TorsionClass::at(inf_pt(), {1}).with(z_pt(), {1});
    CHECK(both.degree() == 2);
    CHECK_FALSE(both.single_point());
    TorsionClass quad = TorsionClass::at(quad_pt(), {1});
    CHECK(quad.degree() == 2);  // partition weight times point degree
    CHECK(TorsionClass::at(inf_pt(), {}).is_trivial());
    CHECK(TorsionClass::trivial().to_string() == "0-sheaf");
}

TEST_CASE("automorphism orders of classes") {
    CHECK(aut_order_torsion_class(TorsionClass::at(inf_pt(), {1})) == 1);
    CHECK(aut_order_torsion_class(TorsionClass::at(inf_pt(), {1}).with(z_pt(), {1})) == 1);
    CHECK(aut_order_torsion_class(TorsionClass::at(quad_pt(), {1})) == 3);  // GL_1(F_4)
    CHECK(aut_order_torsion_class(TorsionClass::at(inf_pt(), {1, 1})) == 6);
}

TEST_CASE("single-point product, frozen") {
    TorsionClass a = TorsionClass::at(inf_pt(), {1});
    TorsionElement prod = mult_torsion(Q, a, a);
    CHECK(prod.coeff(TorsionClass::at(inf_pt(), {2})) == one());
    CHECK(prod.coeff(TorsionClass::at(inf_pt(), {1, 1})) == Coeff::from_int(Q + 1, Q));
    CHECK(prod.terms.size() == 2);
    // At a degree-2 point the local size is q^2.
    TorsionClass b = TorsionClass::at(quad_pt(), {1});
    TorsionElement prod2 = mult_torsion(Q, b, b);
    CHECK(prod2.coeff(TorsionClass::at(quad_pt(), {1, 1})) == Coeff::from_int(5, Q));
}

TEST_CASE("cross-point product is free") {
    TorsionClass a = TorsionClass::at(inf_pt(), {2});
    TorsionClass b = TorsionClass::at(z_pt(), {1, 1});
    TorsionElement prod = mult_torsion(Q, a, b);
    REQUIRE(prod.terms.size() == 1);
    CHECK(prod.coeff(TorsionClass::at(inf_pt(), {2}).with(z_pt(), {1, 1})) == one());
}

TEST_CASE("mixed product distributes over shared and fresh points") {
    TorsionClass a = TorsionClass::at(inf_pt(), {1}).with(z_pt(), {1});
    TorsionClass b = TorsionClass::at(inf_pt(), {1});
    TorsionElement prod = mult_torsion(Q, a, b);
    CHECK(prod.coeff(TorsionClass::at(inf_pt(), {2}).with(z_pt(), {1})) == one());
    CHECK(prod.coeff(TorsionClass::at(inf_pt(), {1, 1}).with(z_pt(), {1})) ==
          Coeff::from_int(3, Q));
}

TEST_CASE("class census by degree") {
    CHECK(torsion_classes_of_degree(2, 1).size() == 3);
    CHECK(torsion_classes_of_degree(2, 2).size() == 10);
    CHECK(torsion_classes_of_degree(3, 1).size() == 4);
    CHECK(torsion_classes_of_degree(3, 2).size() == 17);
    for (const auto& t : torsion_classes_of_degree(2, 3)) CHECK(t.degree() == 3);
}

TEST_CASE("local series coefficients") {
    TorsionSeries h = hhat_series_local(inf_pt(), 3);
    CHECK(h.at(0) == TorsionElement::unit(Q));
    CHECK(h.at(2).terms.size() == 2);
    for (const auto& [cls, k] : h.at(3).terms) CHECK(k == one());

    TorsionSeries e = ehat_series_local(inf_pt(), 3);
    CHECK(e.at(1).coeff(TorsionClass::at(inf_pt(), {1})) == -one());
    CHECK(e.at(2).coeff(TorsionClass::at(inf_pt(), {1, 1})) == Coeff::from_int(Q, Q));
    CHECK(e.at(2).terms.size() == 1);

    TorsionSeries qs = qhat_series_local(inf_pt(), 3);
    Coeff expected = (one() - Coeff::from_rat(make_rat(1, Q), Q)) * Coeff::v_pow(2, Q);
    CHECK(qs.at(2).coeff(TorsionClass::at(inf_pt(), {2})) == expected);
    CHECK(qs.at(2).terms.size() == 1);

    // A degree-2 point only contributes in even orders.
    TorsionSeries h4 = hhat_series_local(quad_pt(), 4);
    CHECK(h4.at(1).is_zero());
    CHECK(h4.at(3).is_zero());
    CHECK_FALSE(h4.at(2).is_zero());
}

TEST_CASE("series algebra") {
    TorsionSeries h = hhat_series_local(inf_pt(), 4);
    CHECK(series_mul(h, series_inverse(h)) == TorsionSeries::one(Q, 4));
    TorsionSeries shifted = series_shift_v(h, 2);
    CHECK(shifted.at(3) == h.at(3).scaled(Coeff::v_pow(6, Q)));
    CHECK(shifted.at(0) == h.at(0));
}

TEST_CASE("global census element") {
    TorsionElement h2 = hhat_global(2, 2);
    CHECK(h2.terms.size() == 10);
    for (const auto& [cls, k] : h2.terms) CHECK(k == one());
    TorsionSeries hg = hhat_series_global(2, 3);
    CHECK(hg.at(2) == h2);
}

TEST_CASE("coproduct of a cyclic class, frozen") {
    TorsionElement c2 = TorsionElement::single(Q, TorsionClass::at(inf_pt(), {2}), one());
    TorsionTensor d = coproduct_local(c2);
    CHECK(d.terms.at({TorsionClass::at(inf_pt(), {2}), TorsionClass::trivial()}) == one());
    CHECK(d.terms.at({TorsionClass::trivial(), TorsionClass::at(inf_pt(), {2})}) == one());
    CHECK(d.terms.at({TorsionClass::at(inf_pt(), {1}), TorsionClass::at(inf_pt(), {1})}) ==
          Coeff::from_rat(make_rat(Q - 1, Q), Q));
    CHECK(d.terms.size() == 3);
}

TEST_CASE("coproduct rejects multi-point input") {
    TorsionClass both = TorsionClass::at(inf_pt(), {1}).with(z_pt(), {1});
    TorsionElement e = TorsionElement::single(Q, both, one());
    CHECK_THROWS_AS(coproduct_local(e), std::invalid_argument);
}
