#include <doctest.h>

#include <random>

#include "tricat/json_io.hpp"

using namespace tricat;

TEST_CASE("matrix round trip over Q and prime fields") {
    std::mt19937_64 rng(93);
    for (const Field& f : {Field::Q(), Field::Fp(7)}) {
        for (int it = 0; it < 30; ++it) {
            auto m = random_matrix(rng, f, static_cast<int>(rng() % 4),
                                   static_cast<int>(rng() % 4));
            CHECK(matrix_from_json(matrix_to_json(m)) == m);
        }
    }
    // fractions survive
    ExactMatrix q(Field::Q(), 1, 1);
    q.set(0, 0, FieldElement::rational(-7, 3));
    CHECK(matrix_from_json(matrix_to_json(q)) == q);
}

TEST_CASE("matrix parsing accepts integers and [num, den] pairs") {
    json j{{"field", "Q"},
           {"rows", 1},
           {"cols", 2},
           {"entries", json::array({3, json::array({"1", "2"})})}};
    auto m = matrix_from_json(j);
    CHECK(m.at(0, 0).rat() == 3);
    CHECK(m.at(0, 1).rat() == mpq_class(1, 2));
}

TEST_CASE("matrix parse errors") {
    CHECK_THROWS_AS(matrix_from_json(json{{"field", "Q"}, {"rows", 1}, {"cols", 2},
                                          {"entries", json::array({1})}}),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(json{{"field", "Fp:5"}, {"rows", 1}, {"cols", 1},
                                          {"entries", json::array({json::array({"1", "2"})})}}),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::object()), ParseError);
}

TEST_CASE("complex and chain map round trip") {
    const Field F5 = Field::Fp(5);
    ChainInstance CH(F5);
    Complex c = make_complex(F5, -1, {2, 1},
                             {ExactMatrix::from_ints(F5, 2, 1, {1, 0})});
    CHECK(complex_from_json(complex_to_json(c)) == c);

    auto x = CH.object(c);
    auto y = CH.object(concentrated(F5, -1, 1));
    std::map<int, ExactMatrix> comps{{-1, ExactMatrix::from_ints(F5, 1, 2, {0, 1})}};
    // chain condition: d of x lands in kernel of the component at -1
    Mor f = CH.chain_mor(x, y, {{-1, ExactMatrix::from_ints(F5, 1, 2, {0, 1})}});
    Mor back = chain_map_from_json(CH, chain_map_to_json(CH, f));
    CHECK(back.source == f.source);
    CHECK(back.target == f.target);
    CHECK(CH.mor_equal(back, f));
}

TEST_CASE("module and triangle round trips") {
    SqZeroModule m = SqZeroModule::make(
        ExactMatrix::from_ints(Field::Q(), 2, 2, {0, 0, 1, 0}));
    SqZeroModule back = module_from_json(module_to_json(m));
    CHECK(back.dim == m.dim);
    CHECK(back.x == m.x);

    VectInstance V(Field::Q());
    auto t = V.cone(V.mor(ExactMatrix::from_ints(Field::Q(), 1, 2, {1, 0})));
    auto t2 = vect_triangle_from_json(V, vect_triangle_to_json(t));
    CHECK(V.mor_equal(t2.f, t.f));
    CHECK(V.mor_equal(t2.g, t.g));
    CHECK(V.mor_equal(t2.h, t.h));

    CHECK_THROWS_AS(vect_triangle_from_json(
                        V, json{{"f", matrix_to_json(ExactMatrix::identity(Field::Q(), 1))},
                                {"g", matrix_to_json(ExactMatrix::identity(Field::Q(), 2))},
                                {"h", matrix_to_json(ExactMatrix::identity(Field::Q(), 1))}}),
                    ParseError);
}
