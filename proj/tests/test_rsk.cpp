#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rsk.hpp"

using namespace lisq;

TEST_CASE("row insertion on a known word") {
    const Permutation pi({4, 1, 7, 2, 5, 3, 6});
    const auto [P, Q] = rsk(pi);
    CHECK(P.shape().first_part() == 4);
    CHECK(lis_length(pi) == 4);
    CHECK(rsk_inverse(P, Q) == pi);
}

TEST_CASE("LIS equals the first row of the insertion shape") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& pi : all_permutations(n)) {
            const auto [P, Q] = rsk(pi);
            CHECK(P.shape().first_part() == lis_length(pi));
            CHECK(lis_length(pi) == oracle::lis_dp(pi.word));
        }
    }
}

TEST_CASE("LDS equals the first column of the insertion shape") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& pi : all_permutations(n)) {
            const auto [P, Q] = rsk(pi);
            CHECK(conjugate(P.shape()).first_part() == lds_length(pi));
        }
}

TEST_CASE("rsk round trips") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& pi : all_permutations(n)) {
            const auto [P, Q] = rsk(pi);
            CHECK(P.shape() == Q.shape());
            CHECK(rsk_inverse(P, Q) == pi);
        }
}

TEST_CASE("rsk_inverse then rsk is the identity on tableau pairs") {
    // Same-shape pairs arise from permutations, so enumerate via involution
    // tableaux of a common shape.
    for (int n = 1; n <= 6; ++n) {
        std::vector<StandardTableau> tabs;
        for (const auto& iota : all_involutions(n)) tabs.push_back(involution_to_tableau(iota));
        for (const auto& P : tabs)
            for (const auto& Q : tabs) {
                if (P.shape() != Q.shape()) continue;
                const auto [P2, Q2] = rsk(rsk_inverse(P, Q));
                CHECK(P2 == P);
                CHECK(Q2 == Q);
            }
    }
}

TEST_CASE("involutions are exactly the P = Q permutations") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& pi : all_permutations(n)) {
            const auto [P, Q] = rsk(pi);
            CHECK(pi.is_involution() == (P == Q));
        }
}

TEST_CASE("involution/tableau correspondence round trips") {
    const auto t = oracle::telephone(8);
    for (int n = 1; n <= 8; ++n) {
        const auto invs = all_involutions(n);
        CHECK(mpz_class(static_cast<unsigned long>(invs.size())) == t[n]);
        for (const auto& iota : invs)
            CHECK(tableau_to_involution(involution_to_tableau(iota)) == iota);
    }
}

TEST_CASE("fixed points count the odd columns of the shape") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& iota : all_involutions(n)) {
            const Partition lam = involution_to_tableau(iota).shape();
            const Partition conj = conjugate(lam);
            int odd_cols = 0;
            for (int c : conj.parts) odd_cols += c % 2;
            CHECK(count_fixed_points(iota) == odd_cols);
        }
}

TEST_CASE("fixed point examples") {
    CHECK(count_fixed_points(Permutation::identity(5)) == 5);
    CHECK(count_fixed_points(Permutation({2, 1, 4, 3})) == 0);
    CHECK(count_fixed_points(Permutation({1, 3, 2})) == 1);
    CHECK_THROWS_AS(count_fixed_points(Permutation({2, 3, 1})), std::invalid_argument);
}

TEST_CASE("ulam distance from the identity") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : all_permutations(n))
            CHECK(ulam_distance_from_identity(pi) == n - lis_length(pi));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(involution_to_tableau(Permutation({2, 3, 1})), std::invalid_argument);
    CHECK(rsk(Permutation()).first.size() == 0);
    CHECK(lis_length(Permutation()) == 0);
}
