#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallp1/drinfeld.hpp"
#include "hallp1/hall_global.hpp"

using namespace hallp1;

namespace {
const long Q = 2;
Coeff one() { return Coeff::one(Q); }
Coeff ci(long n) { return Coeff::from_int(n, Q); }

BElement letter(const GenLetter& l) {
    BElement e;
    b_add_term(e, l.is_h ? PBWMonomial::single_h(l.index) : PBWMonomial::single_g(l.index),
               Coeff::one(Q));
    return e;
}
}  // namespace

TEST_CASE("loop straightening, frozen") {
    BElement nf = v_normal_form(GenWord{g_letter(1), g_letter(0)}, Q);
    PBWMonomial g01;
    g01.c[0] = 1;
    g01.c[1] = 1;
    CHECK(nf.at(g01) == ci(Q));
    CHECK(nf.size() == 1);

    BElement nf2 = v_normal_form(GenWord{g_letter(2), g_letter(0)}, Q);
    PBWMonomial g02;
    g02.c[0] = 1;
    g02.c[2] = 1;
    CHECK(nf2.at(g02) == ci(Q));
    CHECK(nf2.at(PBWMonomial{{{1, 2}}, {}}) == ci(Q - 1));

    BElement nf3 = v_normal_form(GenWord{h_letter(2), g_letter(0)}, Q);
    PBWMonomial gh;
    gh.c[0] = 1;
    gh.d[2] = 1;
    CHECK(nf3.at(gh) == one());
    PBWMonomial gh1;
    gh1.c[1] = 1;
    gh1.d[1] = 1;
    CHECK(nf3.at(gh1) == qnum(2, Q));
    CHECK(nf3.at(PBWMonomial::single_g(2)) == qnum(3, Q));
}

TEST_CASE("engines agree on two-letter words") {
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
            GenWord w{g_letter(a), g_letter(b)};
            CHECK(normal_form(w, Q) == v_normal_form(w, Q));
        }
        for (int r = 1; r <= 3; ++r) {
            GenWord w{h_letter(r), g_letter(a)};
            CHECK(normal_form(w, Q) == v_normal_form(w, Q));
        }
    }
}

TEST_CASE("engines agree on a longer scramble") {
    GenWord w{g_letter(2), h_letter(1), g_letter(-1), g_letter(0)};
    CHECK(normal_form(w, 3) == v_normal_form(w, 3));
}

TEST_CASE("loop product matches straightening") {
    BElement lhs = v_product(letter(g_letter(1)), letter(g_letter(0)), Q);
    CHECK(lhs == v_normal_form(GenWord{g_letter(1), g_letter(0)}, Q));
}

TEST_CASE("primitive-to-census dictionary, low orders") {
    // p_1 = -pt_1
    BElement p1 = p_from_ptilde(1, Q);
    CHECK(p1.at(PBWMonomial::single_h(1)) == -one());
    CHECK(p1.size() == 1);

    // p_2 = -pt_2 + pt_1^2
    BElement p2 = p_from_ptilde(2, Q);
    CHECK(p2.at(PBWMonomial::single_h(2)) == -one());
    CHECK(p2.at(PBWMonomial{{}, {{1, 2}}}) == one());
    CHECK(p2.size() == 2);

    // psi_1 = pt_1; psi_2 = [2] pt_2 - v^-1 pt_1^2
    BElement s1 = psitilde_from_ptilde(1, Q);
    CHECK(s1.at(PBWMonomial::single_h(1)) == one());
    BElement s2 = psitilde_from_ptilde(2, Q);
    CHECK(s2.at(PBWMonomial::single_h(2)) == qnum(2, Q));
    CHECK(s2.at(PBWMonomial{{}, {{1, 2}}}) == -Coeff::v_pow(-1, Q));
}

TEST_CASE("small isomorphism smoke check") {
    IsoReport r = iso_check(2, 3);
    CHECK(r.q == 2);
    CHECK(r.max_total_degree == 3);
    CHECK(r.checked > 0);
    CHECK(r.pass());
}
