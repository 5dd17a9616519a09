#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallp1/coeff.hpp"

using namespace hallp1;

TEST_CASE("v squares to q") {
    for (long q : {2L, 3L, 5L}) {
        Coeff v = Coeff::v_pow(1, q);
        CHECK(v * v == Coeff::from_int(q, q));
        CHECK(Coeff::v_pow(2, q) == Coeff::from_int(q, q));
        CHECK(Coeff::v_pow(3, q) == Coeff::from_int(q, q) * v);
    }
}

TEST_CASE("negative powers of v") {
    for (long q : {2L, 3L}) {
        CHECK(Coeff::v_pow(1, q) * Coeff::v_pow(-1, q) == Coeff::one(q));
        CHECK(Coeff::v_pow(-2, q) == Coeff::from_rat(make_rat(1, q), q));
        CHECK(Coeff::v_pow(5, q) * Coeff::v_pow(-5, q) == Coeff::one(q));
    }
}

TEST_CASE("ring arithmetic") {
    long q = 3;
    Coeff v = Coeff::v_pow(1, q);
    Coeff one = Coeff::one(q);
    CHECK((one + v) * (one - v) == one - Coeff::from_int(q, q));
    CHECK((one + v) - v == one);
    CHECK(-(one + v) + (one + v) == Coeff::zero(q));
    CHECK((v + one).pow(2) == v * v + v + v + one);
}

TEST_CASE("inverses") {
    long q = 2;
    Coeff v = Coeff::v_pow(1, q);
    for (Coeff x : {v, Coeff::one(q) + v, Coeff::from_int(5, q) - v, Coeff::from_rat(make_rat(3, 7), q)}) {
        CHECK(x * x.inv() == Coeff::one(q));
        CHECK(x / x == Coeff::one(q));
    }
}

TEST_CASE("quantum integers, symmetric convention") {
    for (long q : {2L, 3L}) {
        Coeff v = Coeff::v_pow(1, q);
        CHECK(qnum(1, q) == Coeff::one(q));
        CHECK(qnum(2, q) == v + Coeff::v_pow(-1, q));
        // (v - v^-1) [r] = v^-r (q^r - 1)
        for (long r = 1; r <= 5; ++r) {
            Coeff lhs = (v - Coeff::v_pow(-1, q)) * qnum(r, q);
            Coeff rhs = Coeff::from_rat(Rat(int_pow(Int(q), r) - 1), q) * Coeff::v_pow(-r, q);
            CHECK(lhs == rhs);
        }
        CHECK(qfact(3, q) == qnum(1, q) * qnum(2, q) * qnum(3, q));
        for (long n = 0; n <= 5; ++n)
            for (long k = 0; k <= n; ++k)
                CHECK(qbinom(n, k, q) * qfact(k, q) * qfact(n - k, q) == qfact(n, q));
    }
}

TEST_CASE("localized-ring membership") {
    long q = 3;
    CHECK(Coeff::from_rat(make_rat(1, 9), q).is_ztilde());
    CHECK(Coeff::v_pow(-3, q).is_ztilde());
    CHECK_FALSE(Coeff::from_rat(make_rat(1, 2), q).is_ztilde());
    CHECK(denominator_is_q_power(make_rat(5, 27), 3));
    CHECK_FALSE(denominator_is_q_power(make_rat(1, 6), 3));
}

TEST_CASE("integrality") {
    long q = 2;
    CHECK(Coeff::from_int(7, q).is_integer());
    CHECK(Coeff::from_int(7, q).as_integer() == 7);
    CHECK_FALSE(Coeff::v_pow(1, q).is_integer());
    CHECK_FALSE(Coeff::from_rat(make_rat(1, 2), q).is_integer());
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("rendering") {
    long q = 2;
    CHECK(Coeff::zero(q).to_string() == "0");
    CHECK(Coeff::from_int(5, q).to_string() == "5");
    Coeff x = Coeff::one(q) + Coeff::v_pow(1, q);
    CHECK(x.to_string().find('v') != std::string::npos);
}

TEST_CASE("total order is consistent") {
    long q = 2;
    Coeff a = Coeff::one(q), b = Coeff::v_pow(1, q), c = Coeff::from_int(2, q);
    CHECK(((a < b) || (b < a) || (a == b)));
    if (a < b && b < c) CHECK(a < c);
    CHECK_FALSE(a < a);
}
