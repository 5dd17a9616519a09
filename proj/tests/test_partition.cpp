#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hallp1/partition.hpp"

using namespace hallp1;

TEST_CASE("validity") {
    CHECK(is_valid_partition({}));
    CHECK(is_valid_partition({3, 1, 1}));
    CHECK_FALSE(is_valid_partition({1, 3}));
    CHECK_FALSE(is_valid_partition({2, 0}));
    CHECK_FALSE(is_valid_partition({-1}));
    CHECK_THROWS_AS(check_partition({1, 2}), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(10).size() == 42);
    for (const auto& p : partitions_of(6)) {
        CHECK(is_valid_partition(p));
        CHECK(weight(p) == 6);
    }
    std::vector<Partition> p6 = partitions_of(6);
    std::set<Partition> uniq(p6.begin(), p6.end());
    CHECK(uniq.size() == 11);
    CHECK(partitions_of_bounded(4, 2).size() == 3);  // 22, 211, 1111
}

TEST_CASE("statistics") {
    CHECK(weight(Partition{3, 1, 1}) == 5);
    CHECK(length(Partition{3, 1, 1}) == 3);
    CHECK(n_stat(Partition{}) == 0);
    CHECK(n_stat(Partition{4}) == 0);
    CHECK(n_stat(Partition{1, 1}) == 1);
    CHECK(n_stat(Partition{2, 1}) == 1);
    CHECK(n_stat(Partition{1, 1, 1}) == 3);
    CHECK(multiplicity(Partition{3, 1, 1}, 1) == 2);
    CHECK(multiplicity(Partition{3, 1, 1}, 2) == 0);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(weight(conjugate(p)) == n);
        }
    // n(lambda) = sum over the conjugate of binomial(part, 2)
    for (const auto& p : partitions_of(5)) {
        long s = 0;
        for (int part : conjugate(p)) s += static_cast<long>(part) * (part - 1) / 2;
        CHECK(n_stat(p) == s);
    }
}

TEST_CASE("automorphism orders of torsion modules") {
    CHECK(aut_order_torsion(Partition{1}, 2) == 1);
    CHECK(aut_order_torsion(Partition{2}, 2) == 2);
    CHECK(aut_order_torsion(Partition{1, 1}, 2) == 6);       // |GL_2(F_2)|
    CHECK(aut_order_torsion(Partition{1, 1, 1}, 2) == 168);  // |GL_3(F_2)|
    CHECK(aut_order_torsion(Partition{1}, 3) == 2);
    CHECK(aut_order_torsion(Partition{1, 1}, 3) == 48);  // |GL_2(F_3)|
    CHECK(aut_order_torsion(Partition{1}, 4) == 3);      // prime power residue field
}

TEST_CASE("b polynomial") {
    // b_lambda(t) = prod_i prod_{j<=m_i} (1 - t^j)
    Rat half = make_rat(1, 2);
    CHECK(b_poly_at(Partition{1}, half) == make_rat(1, 2));
    CHECK(b_poly_at(Partition{1, 1}, half) == make_rat(3, 8));
    CHECK(b_poly_at(Partition{2, 1}, half) == make_rat(1, 4));
    CHECK(b_poly_at(Partition{}, half) == Rat(1));
}
