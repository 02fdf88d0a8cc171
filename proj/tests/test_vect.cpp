#include <doctest.h>

#include <random>

#include "tricat/vect.hpp"

using namespace tricat;

namespace {
const VectInstance V(Field::Q());
Mor M(std::initializer_list<long> v, int rows, int cols) {
    return V.mor(ExactMatrix::from_ints(Field::Q(), rows, cols, std::vector<long>(v)));
}
}  // namespace

TEST_CASE("additive structure") {
    auto f = M({1, 0, 1, 1}, 2, 2);
    CHECK(V.mor_equal(V.compose(V.identity(f.target), f), f));
    CHECK(V.is_zero_mor(V.add(f, V.negate(f))));
    // compose([1 0], [[1],[1]]) = [1]
    auto a = M({1, 0}, 1, 2);
    auto b = M({1, 1}, 2, 1);
    CHECK(V.mor_equal(V.compose(a, b), M({1}, 1, 1)));
    CHECK_THROWS_AS(V.compose(b, b), ShapeMismatch);
    CHECK_THROWS_AS(V.add(a, b), ShapeMismatch);
}

TEST_CASE("cone of identity is zero-dimensional") {
    auto t = V.cone(V.identity(V.object(3)));
    CHECK(VectInstance::dim(t.z) == 0);
    CHECK(*V.is_triangle(t));
}

TEST_CASE("cone of the zero map is X (+) Y with inclusion and projection") {
    auto f = V.zero_mor(V.object(2), V.object(3));
    auto t = V.cone(f);
    CHECK(VectInstance::dim(t.z) == 5);
    // g embeds Y as the second summand, h projects the first
    CHECK(VectInstance::matrix(t.g) ==
          ExactMatrix::zero(Field::Q(), 2, 3).vstack(ExactMatrix::identity(Field::Q(), 3)));
    CHECK(VectInstance::matrix(t.h) ==
          ExactMatrix::identity(Field::Q(), 2).hstack(ExactMatrix::zero(Field::Q(), 2, 3)));
    CHECK(*V.is_triangle(t));
}

TEST_CASE("cone of [1 0] : K^2 -> K") {
    auto f = M({1, 0}, 1, 2);
    auto t = V.cone(f);
    CHECK(VectInstance::dim(t.z) == 1);
    // h includes the kernel span{(0,1)}
    CHECK(VectInstance::matrix(t.h) == ExactMatrix::from_ints(Field::Q(), 2, 1, {0, 1}));
    CHECK(*V.is_triangle(t));
}

TEST_CASE("dim(cone) = dim X - 2 rank(f) + dim Y on random maps") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
        auto f = V.mor(random_matrix(rng, Field::Q(), b, a));
        auto t = V.cone(f);
        CHECK(VectInstance::dim(t.z) == a - 2 * rank(VectInstance::matrix(f)) + b);
        CHECK(*V.is_triangle(t));
    }
}

TEST_CASE("is_triangle rejects the identity triple") {
    auto k = V.object(1);
    CandidateTriangle t{k, k, k, V.identity(k), V.identity(k), V.identity(k)};
    CHECK(!*V.is_triangle(t));
}

TEST_CASE("the trivial-localization triangle on (K, K, K^2) is exact") {
    CandidateTriangle t{V.object(1), V.object(1), V.object(2),
                        M({0}, 1, 1), M({1, 0}, 2, 1), M({0, 1}, 1, 2)};
    CHECK(*V.is_triangle(t));
}

TEST_CASE("octahedron witness validates, g = id degenerate case included") {
    std::mt19937_64 rng(5);
    auto f = V.mor(random_matrix(rng, Field::Q(), 3, 2));
    auto w = V.octahedron(f, V.identity(f.target));
    CHECK(validate_octahedron(V, w));

    // f = [1 0]: K^2 -> K, g = 0: K -> K; cone(gf) has dim 3 (ker 2, coker 1)
    auto f2 = M({1, 0}, 1, 2);
    auto g2 = V.zero_mor(V.object(1), V.object(1));
    auto w2 = V.octahedron(f2, g2);
    CHECK(VectInstance::dim(w2.t_gf.z) == 3);
    CHECK(validate_octahedron(V, w2));

    CHECK_THROWS_AS(V.octahedron(g2, V.identity(V.object(2))), ShapeMismatch);
}

TEST_CASE("octahedron on random composable pairs is exact") {
    std::mt19937_64 rng(17);
    std::string why;
    for (int it = 0; it < 40; ++it) {
        int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5),
            c = static_cast<int>(rng() % 5);
        auto f = V.mor(random_matrix(rng, Field::Q(), b, a));
        auto g = V.mor(random_matrix(rng, Field::Q(), c, b));
        auto w = V.octahedron(f, g);
        CHECK_MESSAGE(validate_octahedron(V, w, &why), why);
        CandidateTriangle kt{w.t_f.z, w.t_gf.z, w.t_g.z, w.k, w.k_prime, w.k_second};
        CHECK(*V.is_triangle(kt));
    }
}

TEST_CASE("hom_group of K^2, K^3 is six-dimensional with faithful coords") {
    auto hs = V.hom_group(V.object(2), V.object(3));
    CHECK(hs.dim() == 6);
    std::mt19937_64 rng(23);
    auto f = V.random_mor(rng, V.object(2), V.object(3));
    auto c = hs.coords(f);
    Mor rebuilt = V.zero_mor(f.source, f.target);
    for (size_t i = 0; i < c.size(); ++i) rebuilt = V.add(rebuilt, V.scale(c[i], hs.basis[i]));
    CHECK(V.mor_equal(rebuilt, f));
}

TEST_CASE("obj_iso") {
    CHECK(V.obj_iso(V.object(2), V.object(2)).has_value());
    CHECK(!V.obj_iso(V.object(2), V.object(3)).has_value());
}

TEST_CASE("biproduct witness validates") {
    auto w = V.biproduct(V.object(2), V.object(3));
    std::string why;
    CHECK_MESSAGE(validate_biproduct(V, w, &why), why);
}

TEST_CASE("decompose_triangle counts and explicit isomorphism") {
    // (id_K, 0, 0) -> (1, 0, 0)
    auto t1 = V.cone(V.identity(V.object(1)));
    auto d1 = decompose_triangle(V, t1);
    CHECK(d1.n1 == 1);
    CHECK(d1.n2 == 0);
    CHECK(d1.n3 == 0);

    // biproduct triangle (0, i_Y, p_X) with dims (1,1,2) -> (0, 1, 1)
    CandidateTriangle t2{V.object(1), V.object(1), V.object(2),
                         M({0}, 1, 1), M({0, 1}, 2, 1), M({1, 0}, 1, 2)};
    REQUIRE(*V.is_triangle(t2));
    auto d2 = decompose_triangle(V, t2);
    CHECK(d2.n1 == 0);
    CHECK(d2.n2 == 1);
    CHECK(d2.n3 == 1);

    // cone of [1 0]: K^2 -> K -> (1, 0, 1)
    auto d3 = decompose_triangle(V, V.cone(M({1, 0}, 1, 2)));
    CHECK(d3.n1 == 1);
    CHECK(d3.n2 == 0);
    CHECK(d3.n3 == 1);

    CHECK_THROWS_AS(
        decompose_triangle(
            V, CandidateTriangle{V.object(1), V.object(1), V.object(1), V.identity(V.object(1)),
                                 V.identity(V.object(1)), V.identity(V.object(1))}),
        NotATriangle);
}

TEST_CASE("decomposition invariants on random cones") {
    std::mt19937_64 rng(29);
    std::string why;
    for (int it = 0; it < 40; ++it) {
        int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
        auto t = V.cone(V.mor(random_matrix(rng, Field::Q(), b, a)));
        auto d = decompose_triangle(V, t);
        CHECK(d.n1 + d.n3 == VectInstance::dim(t.x));
        CHECK(d.n1 + d.n2 == VectInstance::dim(t.y));
        CHECK(d.n2 + d.n3 == VectInstance::dim(t.z));
        CHECK(*V.is_triangle(d.model));
        CHECK_MESSAGE(validate_triangle_morphism(V, d.iso, &why), why);
        for (const Mor* m : {&d.iso.a, &d.iso.b, &d.iso.c})
            CHECK(inverse(VectInstance::matrix(*m)).has_value());
    }
}

TEST_CASE("exactness is sign-invariant in vect (single flips stay triangles)") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        auto t = V.cone(V.mor(random_matrix(rng, Field::Q(), 3, 2)));
        CandidateTriangle s{t.x, t.y, t.z, t.f, t.g, V.negate(t.h)};
        CHECK(*V.is_triangle(s));  // this instance cannot separate a triangulation
    }                              // from its negative
}
