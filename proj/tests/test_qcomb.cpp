#include <doctest.h>

#include "oracles.hpp"
#include "qgraph/qcomb.hpp"

using namespace qgraph;

TEST_CASE("q-factorial") {
    CHECK(q_factorial(0, 2) == 1);
    CHECK(q_factorial(2, 2) == 3);   // (2-1)(4-1)
    CHECK(q_factorial(3, 3) == 416); // 2*8*26
    CHECK_THROWS_AS(q_factorial(-1, 2), InvalidParams);
}

TEST_CASE("Gaussian binomial values and conventions") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(0, 0, 2) == 1);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(2, 3, 7) == 0); // k > n
    CHECK(gaussian_binomial(2, 1, 3) == 4);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(5, 2, 2) == 155);
}

TEST_CASE("Gaussian binomial equals the brute-force subspace count") {
    Field f2 = make_field(2);
    Field f3 = make_field(3);
    CHECK(oracles::count_subspaces_bruteforce(4, 2, f2) == 35);
    CHECK(oracles::count_subspaces_bruteforce(3, 1, f2) == 7);
    CHECK(oracles::count_subspaces_bruteforce(2, 1, f3) == 4);
    CHECK(oracles::count_subspaces_bruteforce(4, 2, f3) ==
          gaussian_binomial(4, 2, 3).get_ui());
}

TEST_CASE("Gaussian binomial symmetry") {
    for (unsigned q : {2u, 3u, 5u})
        for (int n = 0; n <= 9; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
}

TEST_CASE("class counts: examples and partition identity") {
    CHECK(count_a(4, 2, 2, 2, 2) == 1);
    CHECK(count_a(4, 2, 2, 0, 2) == 16);
    CHECK(count_a(4, 2, 2, 1, 2) == 18);
    for (unsigned q : {2u, 3u, 4u})
        for (int n = 0; n <= 7; ++n)
            for (int k = 0; k <= n && k <= 4; ++k)
                for (int m = 0; m <= n; ++m) {
                    QInt sum = 0;
                    for (int i = 0; i <= k; ++i)
                        sum += count_a(n, m, k, i, q);
                    CHECK(sum == gaussian_binomial(n, k, q));
                }
}

TEST_CASE("d_ij frozen values and validation") {
    CHECK(count_dij({4, 2, 2, 1, 2, 2}) == 0);  // empty range
    CHECK(count_dij({4, 2, 2, 2, 0, 2}) == 16); // equals count_a(4,2,2,0)
    CHECK(count_dij({5, 3, 2, 1, 0, 2}) == 48);
    CHECK_THROWS_AS(count_dij({4, 2, 2, 1, 1, 2}), InvalidParams); // i == j
    CHECK_THROWS_AS(count_dij({4, 3, 2, 1, 0, 2}), InvalidParams); // m > n - k
}

TEST_CASE("d_ij is not symmetric in i and j") {
    CHECK(count_dij({5, 3, 2, 1, 0, 2}) != count_dij({5, 3, 2, 0, 1, 2}));
    CHECK(count_dij({6, 2, 2, 1, 0, 3}) != count_dij({6, 2, 2, 0, 1, 3}));
}

TEST_CASE("d_ij breakdown") {
    SUBCASE("single-term instance") {
        DijBreakdown b = dij_breakdown({5, 3, 2, 1, 0, 2});
        CHECK(b.y1 == 1);
        REQUIRE(b.terms.size() == 1);
        CHECK(b.terms[0].r == 1);
        CHECK(b.terms[0].y2 == 6);
        CHECK(b.terms[0].y3 == 8);
        CHECK(b.terms[0].term == 48);
        CHECK(b.total() == 48);
    }
    SUBCASE("empty sum") {
        DijBreakdown b = dij_breakdown({4, 2, 2, 1, 2, 2});
        CHECK(b.terms.empty());
        CHECK(b.total() == 0);
    }
    SUBCASE("r = 0 instance") {
        DijBreakdown b = dij_breakdown({4, 2, 2, 2, 0, 2});
        REQUIRE(b.terms.size() == 1);
        CHECK(b.terms[0].r == 0);
        CHECK(b.terms[0].term == 16);
    }
    SUBCASE("totals agree with count_dij across a grid") {
        for (unsigned q : {2u, 3u})
            for (int n = 2; n <= 8; ++n)
                for (int k = 1; k <= 3 && k <= n; ++k)
                    for (int m = 0; m <= n - k; ++m)
                        for (int i = 0; i <= k; ++i)
                            for (int j = 0; j <= k; ++j) {
                                if (i == j)
                                    continue;
                                CountParams p{n, m, k, i, j, q};
                                CHECK(dij_breakdown(p).total() == count_dij(p));
                            }
    }
}

TEST_CASE("case-2 common-neighbor formula") {
    CHECK(count_case2_common(2, 1, 2) == 8);
    CHECK(count_case2_common(2, 1, 3) == 54);
    CHECK(count_case2_common(3, 2, 2) == 192);
    CHECK_THROWS_AS(count_case2_common(2, 0, 2), InvalidParams);
    CHECK_THROWS_AS(count_case2_common(2, 2, 2), InvalidParams);
}

TEST_CASE("d_i0 lower bound") {
    Di0Check c = check_d_i0_bound(5, 2, 2);
    CHECK(c.all_at_least_two);
    REQUIRE(c.values.size() == 2);
    CHECK(c.values[0].i == 1);
    CHECK(c.values[0].value == 48);
    CHECK(c.values[1].value == 64);

    CHECK(check_d_i0_bound(7, 3, 2).all_at_least_two);
    CHECK_THROWS_AS(check_d_i0_bound(4, 2, 2), InvalidParams); // n = 2k

    // a slice of the symbolic sweep; the acceptance suite runs the full grid
    for (unsigned q : {2u, 3u, 4u})
        for (int k = 2; k <= 4; ++k)
            for (int n = 2 * k + 1; n <= 11; ++n)
                CHECK(check_d_i0_bound(n, k, q).all_at_least_two);
}
