#include <doctest.h>

#include <random>

#include "tricat/matrix.hpp"

using namespace tricat;

namespace {
const Field Q = Field::Q();
}

TEST_CASE("rref of an invertible diagonal is the identity") {
    auto m = ExactMatrix::from_ints(Q, 2, 2, {2, 0, 0, 3});
    auto r = rref(m);
    CHECK(r.reduced == ExactMatrix::identity(Q, 2));
    CHECK(r.pivot_cols == std::vector<int>{0, 1});
    CHECK(r.rank == 2);
}

TEST_CASE("rref of a rank-one matrix") {
    auto m = ExactMatrix::from_ints(Q, 2, 2, {1, 2, 2, 4});
    auto r = rref(m);
    CHECK(r.reduced == ExactMatrix::from_ints(Q, 2, 2, {1, 2, 0, 0}));
    CHECK(r.rank == 1);
}

TEST_CASE("rref of zero matrix") {
    auto m = ExactMatrix::zero(Q, 2, 2);
    auto r = rref(m);
    CHECK(r.reduced == m);
    CHECK(r.pivot_cols.empty());
    CHECK(r.rank == 0);
}

TEST_CASE("kernel basis examples") {
    // [1 0] : K^2 -> K has kernel spanned by (0,1)^T
    auto m = ExactMatrix::from_ints(Q, 1, 2, {1, 0});
    auto k = kernel_basis(m);
    CHECK(k == ExactMatrix::from_ints(Q, 2, 1, {0, 1}));

    CHECK(kernel_basis(ExactMatrix::identity(Q, 3)).cols() == 0);
    CHECK(kernel_basis(ExactMatrix::zero(Q, 2, 2)) == ExactMatrix::identity(Q, 2));
}

TEST_CASE("cokernel projection examples") {
    CHECK(cokernel_projection(ExactMatrix::identity(Q, 3)).rows() == 0);

    // [1;0] : K -> K^2, quotient spanned by the second coordinate
    auto m = ExactMatrix::from_ints(Q, 2, 1, {1, 0});
    auto p = cokernel_projection(m);
    CHECK(p == ExactMatrix::from_ints(Q, 1, 2, {0, 1}));

    CHECK(cokernel_projection(ExactMatrix::zero(Q, 2, 1)) == ExactMatrix::identity(Q, 2));
}

TEST_CASE("solve examples") {
    auto b = ExactMatrix::from_ints(Q, 3, 1, {5, -1, 2});
    auto x = solve(ExactMatrix::identity(Q, 3), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto a = ExactMatrix::from_ints(Q, 1, 2, {1, 2});
    auto rhs = ExactMatrix::from_ints(Q, 1, 1, {3});
    auto y = solve(a, rhs);
    REQUIRE(y.has_value());
    CHECK(a * *y == rhs);

    auto a2 = ExactMatrix::from_ints(Q, 2, 1, {1, 0});
    auto b2 = ExactMatrix::from_ints(Q, 2, 1, {0, 1});
    CHECK(!solve(a2, b2).has_value());

    CHECK_THROWS_AS(solve(a2, rhs), ShapeMismatch);
}

TEST_CASE("inverse") {
    auto m = ExactMatrix::from_ints(Q, 2, 2, {1, 2, 3, 4});
    auto mi = inverse(m);
    REQUIRE(mi.has_value());
    CHECK(*mi * m == ExactMatrix::identity(Q, 2));
    CHECK(m * *mi == ExactMatrix::identity(Q, 2));
    CHECK(!inverse(ExactMatrix::from_ints(Q, 2, 2, {1, 2, 2, 4})).has_value());
    CHECK(!inverse(ExactMatrix::zero(Q, 2, 3)).has_value());
}

TEST_CASE("kernel/cokernel/solve properties on random matrices") {
    std::mt19937_64 rng(7);
    for (const Field& f : {Field::Q(), Field::Fp(5)}) {
        for (int it = 0; it < 60; ++it) {
            int r = static_cast<int>(rng() % 5), c = static_cast<int>(rng() % 5);
            auto m = random_matrix(rng, f, r, c);
            auto k = kernel_basis(m);
            CHECK((m * k).is_zero());
            CHECK(rank(m) + k.cols() == c);  // rank-nullity
            CHECK(rank(k) == k.cols());      // columns independent
            auto p = cokernel_projection(m);
            CHECK((p * m).is_zero());
            CHECK(rank(p) == p.rows());
            CHECK(p.rows() == r - rank(m));

            // solve-then-substitute, when a solution exists
            auto x = random_matrix(rng, f, c, 2);
            auto b = m * x;
            auto s = solve(m, b);
            REQUIRE(s.has_value());
            CHECK(m * *s == b);
        }
    }
}

TEST_CASE("row space is preserved by rref") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        auto m = random_matrix(rng, Field::Fp(7), 3, 4);
        auto r = rref(m);
        // each row of m is a combination of rref rows and vice versa
        CHECK(rank(m.vstack(r.reduced)) == rank(m));
        CHECK(rank(m) == r.rank);
    }
}

TEST_CASE("block helpers") {
    auto a = ExactMatrix::from_ints(Q, 1, 1, {1});
    auto b = ExactMatrix::from_ints(Q, 2, 2, {2, 0, 0, 3});
    auto d = block_diag(a, b);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 3);
    CHECK(d.at(0, 0).rat() == 1);
    CHECK(d.at(1, 1).rat() == 2);
    CHECK(d.at(2, 2).rat() == 3);
    CHECK(d.at(0, 1).is_zero());

    auto z_row = ExactMatrix::zero(Q, 0, 2);  // legal empty shapes
    CHECK(z_row.vstack(b) == b);
}

TEST_CASE("LinearSolver agrees with solve across many right-hand sides") {
    std::mt19937_64 rng(13);
    for (const Field& f : {Field::Q(), Field::Fp(5)}) {
        for (int it = 0; it < 25; ++it) {
            int r = static_cast<int>(rng() % 5), c = static_cast<int>(rng() % 5);
            auto a = random_matrix(rng, f, r, c);
            LinearSolver ls(a);
            for (int k = 0; k < 4; ++k) {
                auto b = random_matrix(rng, f, r, 1);
                auto s1 = solve(a, b);
                auto s2 = ls(b);
                CHECK(s1.has_value() == s2.has_value());
                if (s1) CHECK(*s1 == *s2);
            }
        }
    }
    // inconsistent system
    auto a = ExactMatrix::from_ints(Field::Q(), 2, 1, {1, 0});
    LinearSolver ls(a);
    CHECK(!ls(ExactMatrix::from_ints(Field::Q(), 2, 1, {0, 1})).has_value());
    CHECK_THROWS_AS(ls(ExactMatrix::zero(Field::Q(), 3, 1)), ShapeMismatch);
}

TEST_CASE("kron_operator matches direct evaluation") {
    std::mt19937_64 rng(15);
    const Field f = Field::Fp(7);
    for (int it = 0; it < 20; ++it) {
        int ur = 1 + static_cast<int>(rng() % 3), uc = 1 + static_cast<int>(rng() % 3);
        int orows = 1 + static_cast<int>(rng() % 3), ocols = 1 + static_cast<int>(rng() % 3);
        auto l1 = random_matrix(rng, f, orows, ur), r1 = random_matrix(rng, f, uc, ocols);
        auto l2 = random_matrix(rng, f, orows, ur), r2 = random_matrix(rng, f, uc, ocols);
        auto op = kron_operator(f, ur, uc, {{l1, r1}, {l2, r2}});
        auto u = random_matrix(rng, f, ur, uc);
        // flatten u row-major and compare op * vec(u) against the sum
        ExactMatrix vu(f, ur * uc, 1);
        for (int i = 0; i < ur; ++i)
            for (int j = 0; j < uc; ++j) vu.set(i * uc + j, 0, u.at(i, j));
        auto direct = l1 * u * r1 + l2 * u * r2;
        auto got = op * vu;
        for (int i = 0; i < orows; ++i)
            for (int j = 0; j < ocols; ++j) CHECK(got.at(i * ocols + j, 0) == direct.at(i, j));
    }
}

TEST_CASE("mixed-field matrix operations throw") {
    auto a = ExactMatrix::identity(Q, 2);
    auto b = ExactMatrix::identity(Field::Fp(5), 2);
    CHECK_THROWS_AS(a * b, FieldMismatch);
    CHECK_THROWS_AS(a + b, FieldMismatch);
}
