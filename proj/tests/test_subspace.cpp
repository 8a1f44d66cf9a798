#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qgraph/subspace.hpp"

using namespace qgraph;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, FieldElement{std::uint16_t(rng() % f->q())});
    return m;
}

Matrix random_invertible(const Field& f, int d, std::mt19937_64& rng) {
    while (true) {
        Matrix m = random_matrix(f, d, d, rng);
        if (rank_of(m) == d)
            return m;
    }
}

} // namespace

TEST_CASE("rref canonicalization") {
    Field f2 = make_field(2);
    Subspace a = rref(Matrix::from_rows(f2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(a.dim() == 2);
    CHECK(a.pivot_cols() == std::vector<int>{0, 1});
    CHECK(a.serialize() == "1 0 0 0;0 1 0 0");

    // span equality: {e1+e2, e2} is the same subspace
    Subspace b = rref(Matrix::from_rows(f2, 4, {{1, 1, 0, 0}, {0, 1, 0, 0}}));
    CHECK(a == b);

    // duplicate rows collapse
    Subspace c = rref(Matrix::from_rows(f2, 4, {{1, 0, 0, 0}, {1, 0, 0, 0}}));
    CHECK(c.dim() == 1);
    CHECK(c.serialize() == "1 0 0 0");

    // zero input is the zero space, a valid value
    Subspace z = rref(Matrix(f2, 2, 4));
    CHECK(z.dim() == 0);
    CHECK(z.serialize().empty());
}

TEST_CASE("rref is invariant under row operations") {
    std::mt19937_64 rng(12345);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Field f = make_field(q);
        for (int trial = 0; trial < 40; ++trial) {
            Subspace s = rref(random_matrix(f, 3, 6, rng));
            if (s.dim() == 0)
                continue;
            Matrix t = random_invertible(f, s.dim(), rng);
            Subspace again = rref(mat_mul(t, s.basis()));
            CHECK(s == again);
            CHECK(s.serialize() == again.serialize());
        }
    }
}

TEST_CASE("enumeration counts, order, and canonical forms") {
    Field f2 = make_field(2);
    auto all = enumerate_subspaces(4, 2, f2);
    REQUIRE(all.size() == 35);
    CHECK(all[0].serialize() == "1 0 0 0;0 1 0 0");
    CHECK(all[1].serialize() == "1 0 0 0;0 1 0 1");
    CHECK(all[2].serialize() == "1 0 0 0;0 1 1 0");
    CHECK(all.back().serialize() == "0 0 1 0;0 0 0 1");

    // exact agreement with the brute-force canonical set
    std::set<std::string> got;
    for (const Subspace& s : all)
        got.insert(s.serialize());
    CHECK(got == oracles::subspace_forms_bruteforce(4, 2, f2));

    // whole space and lines
    CHECK(enumerate_subspaces(3, 3, f2).size() == 1);
    Field f3 = make_field(3);
    auto lines = enumerate_subspaces(2, 1, f3);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0].serialize() == "1 0");
    CHECK(lines[1].serialize() == "1 1");
    CHECK(lines[2].serialize() == "1 2");
    CHECK(lines[3].serialize() == "0 1");

    // stability across runs
    auto again = enumerate_subspaces(4, 2, f2);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i] == again[i]);

    CHECK_THROWS_AS(enumerate_subspaces(4, 2, f2, 10), LimitExceeded);
}

TEST_CASE("enumeration count matches the Gaussian binomial across a grid") {
    for (unsigned q : {2u, 3u}) {
        Field f = make_field(q);
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                std::size_t seen = 0;
                for_each_subspace(n, k, f, [&](const Subspace&) { ++seen; });
                CHECK(QInt(static_cast<unsigned long>(seen)) == gaussian_binomial(n, k, q));
            }
    }
}

TEST_CASE("lattice operations") {
    Field f2 = make_field(2);
    Subspace e12 = coordinate_subspace(4, {0, 1}, f2);
    Subspace e34 = coordinate_subspace(4, {2, 3}, f2);
    Subspace e23 = coordinate_subspace(4, {1, 2}, f2);
    Subspace zero = coordinate_subspace(4, {}, f2);

    CHECK(intersection_dim(e12, e12) == 2);
    CHECK(intersection_dim(e12, e34) == 0);
    CHECK(intersection_dim(e12, e23) == 1);

    CHECK(sum_span(e12, e12) == e12);
    CHECK(sum_span(coordinate_subspace(4, {0}, f2), coordinate_subspace(4, {1}, f2)) == e12);
    CHECK(sum_span(e12, e23).dim() == 3);

    CHECK(contains(e12, zero));
    CHECK(contains(e12, coordinate_subspace(4, {0}, f2)));
    CHECK_FALSE(contains(e12, coordinate_subspace(4, {2}, f2)));

    CHECK(zero.dim() == 0);
    CHECK_THROWS_AS(coordinate_subspace(4, {5}, f2), IndexOutOfRange);

    Field f3 = make_field(3);
    CHECK_THROWS_AS(intersection_dim(e12, coordinate_subspace(5, {0, 1}, f2)),
                    AmbientMismatch);
    CHECK_THROWS_AS(intersection_dim(e12, coordinate_subspace(4, {0, 1}, f3)),
                    AmbientMismatch);
}

TEST_CASE("modular law and intersection basis on random pairs") {
    std::mt19937_64 rng(777);
    for (unsigned q : {2u, 3u, 5u}) {
        Field f = make_field(q);
        for (int trial = 0; trial < 60; ++trial) {
            Subspace u = rref(random_matrix(f, 2 + int(rng() % 3), 5, rng));
            Subspace w = rref(random_matrix(f, 2 + int(rng() % 3), 5, rng));
            int di = intersection_dim(u, w);
            CHECK(sum_span(u, w).dim() + di == u.dim() + w.dim());
            Subspace meet = intersection(u, w);
            CHECK(meet.dim() == di);
            CHECK(contains(u, meet));
            CHECK(contains(w, meet));
        }
    }
}
