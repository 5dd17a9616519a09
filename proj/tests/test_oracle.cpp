#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallp1/oracle.hpp"
#include "hallp1/partition.hpp"
#include "hallp1/sympoly.hpp"

using namespace hallp1;

TEST_CASE("coprime form pairs, frozen") {
    CHECK(oracle::phi_bruteforce(2, 0, 0) == 1);
    CHECK(oracle::phi_bruteforce(2, 1, 1) == 6);
    CHECK(oracle::phi_bruteforce(2, 2, 0) == 7);
    CHECK(oracle::phi_bruteforce(2, 2, 1) == 12);   // (q-1)(q^2-1) q^(a+b-1)
    CHECK(oracle::phi_bruteforce(3, 1, 0) == 16);   // (q-1)(q^2-1)
    CHECK(oracle::phi_bruteforce(3, 1, 1) == 48);   // (q-1)(q^2-1) q
}

TEST_CASE("quadruple counts, frozen") {
    FqPoly p22{2, {1, 1, 1}};  // z^2+z+1
    CHECK(oracle::quadruple_count(p22, 1) == 2);
    FqPoly p23{2, {1, 1, 0, 1}};  // z^3+z+1
    CHECK(oracle::quadruple_count(p23, 1) == 4);
    CHECK(oracle::quadruple_count(p23, 2) == 4);
    FqPoly p32 = irreducible_polys(3, 2).front();
    CHECK(oracle::quadruple_count(p32, 1) == 12);
}

TEST_CASE("line extension counts, frozen") {
    CHECK(oracle::ext_count_bundles(2, 0, 2, 1, 1) == 6);
    CHECK(oracle::ext_count_bundles(2, 0, 2, 0, 2) == 8);
    CHECK(oracle::ext_count_bundles(2, 0, 2, 0, 1) == 0);  // degree mismatch
    CHECK(oracle::ext_count_bundles(2, 0, 1, 0, 1) == 4);  // q^(n-m+1)
    CHECK(oracle::ext_count_bundles(3, 0, 1, 0, 1) == 9);
    CHECK(oracle::ext_count_bundles(2, 0, 3, 1, 2) == 12);  // (q^2-1) q^(n-m-1)
}

TEST_CASE("submodule census, frozen") {
    auto census = oracle::submodule_type_census(Partition{1, 1}, 2);
    CHECK(census.at({Partition{1}, Partition{1}}) == 3);
    CHECK(census.at({Partition{}, Partition{1, 1}}) == 1);
    CHECK(census.at({Partition{1, 1}, Partition{}}) == 1);
    CHECK(census.size() == 3);

    auto cyc = oracle::submodule_type_census(Partition{2}, 2);
    CHECK(cyc.at({Partition{1}, Partition{1}}) == 1);
    CHECK(cyc.size() == 3);

    CHECK(oracle::submodule_hall_count(Partition{2, 1}, Partition{1}, Partition{2}, 2) == 2);
    CHECK(oracle::submodule_hall_count(Partition{2, 1}, Partition{2}, Partition{1}, 3) == 3);
}

TEST_CASE("census totals count all submodules") {
    // Sum over the census = number of t-invariant subspaces; for (1,1) over
    // F_2 that is 5 (trivial, three lines, everything).
    auto census = oracle::submodule_type_census(Partition{1, 1}, 2);
    Int total = 0;
    for (const auto& [key, n] : census) total += n;
    CHECK(total == 5);
}

TEST_CASE("census agrees with the closed route on mixed types") {
    for (long q : {2L, 3L}) {
        auto census = oracle::submodule_type_census(Partition{2, 1}, q);
        for (const auto& [key, n] : census)
            CHECK(hall_number(Partition{2, 1}, key.first, key.second, q) == n);
    }
}

TEST_CASE("automorphism counts, frozen") {
    CHECK(oracle::aut_count_module(Partition{1}, 2) == 1);
    CHECK(oracle::aut_count_module(Partition{2}, 2) == 2);
    CHECK(oracle::aut_count_module(Partition{1, 1}, 2) == 6);
    CHECK(oracle::aut_count_module(Partition{1, 1}, 3) == 48);
    CHECK(oracle::aut_count_module(Partition{2, 1}, 2) ==
          aut_order_torsion(Partition{2, 1}, 2));
    CHECK(oracle::aut_count_module(Partition{3}, 3) == aut_order_torsion(Partition{3}, 3));
}

TEST_CASE("budgets are enforced") {
    CHECK_THROWS_AS(oracle::phi_bruteforce(3, 3, 3, 10), oracle::BudgetExceeded);
    CHECK_THROWS_AS(oracle::aut_count_module(Partition{2, 2}, 3, 10), oracle::BudgetExceeded);
}

TEST_CASE("jordan type recovers the module type") {
    for (const auto& lam : partitions_of(4)) {
        auto mod = oracle::NilModule::of_type(lam, 2);
        CHECK(oracle::jordan_type(mod.t, 2) == lam);
    }
}
