#include <doctest.h>

#include <random>

#include "tricat/field.hpp"
#include "tricat/matrix.hpp"

using namespace tricat;

TEST_CASE("field descriptors parse and print") {
    CHECK(Field::parse("Q") == Field::Q());
    CHECK(Field::parse("Fp:7") == Field::Fp(7));
    CHECK(Field::Fp(7).to_string() == "Fp:7");
    CHECK_THROWS_AS(Field::Fp(6), Error);
    CHECK_NOTHROW(Field::Fp(2147483647u));           // largest single-word prime
    CHECK_THROWS_AS(Field::Fp(2147483659u), Error);  // prime, but above 2^31
    CHECK_THROWS_AS(Field::parse("Fp:abc"), ParseError);
    CHECK_THROWS_AS(Field::parse("R"), ParseError);
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    auto x = FieldElement::rational(2, -4);
    CHECK(x.rat().get_num() == -1);
    CHECK(x.rat().get_den() == 2);
    auto y = FieldElement::rational(6, 3);
    CHECK(y.rat() == 2);
    CHECK_THROWS_AS(FieldElement::rational(1, 0), Error);
}

TEST_CASE("prime field residues are reduced") {
    Field f7 = Field::Fp(7);
    CHECK(FieldElement::residue(f7, -1).res() == 6);
    CHECK(FieldElement::residue(f7, 7).res() == 0);
    CHECK((FieldElement::residue(f7, 3) * FieldElement::residue(f7, 5)).res() == 1);
    CHECK(FieldElement::residue(f7, 3).inverse().res() == 5);
}

TEST_CASE("mixing fields throws FieldMismatch") {
    auto a = FieldElement::one(Field::Q());
    auto b = FieldElement::one(Field::Fp(5));
    CHECK_THROWS_AS(a + b, FieldMismatch);
}

TEST_CASE("field axioms hold on sampled triples") {
    std::mt19937_64 rng(41);
    for (const Field& f : {Field::Q(), Field::Fp(7), Field::Fp(2), Field::Fp(2147483647)}) {
        for (int it = 0; it < 200; ++it) {
            auto a = random_element(rng, f);
            auto b = random_element(rng, f);
            auto c = random_element(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + FieldElement::zero(f) == a);
            CHECK(a * FieldElement::one(f) == a);
            CHECK(a + (-a) == FieldElement::zero(f));
            if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::one(f));
        }
    }
}

TEST_CASE("inverse of zero throws") {
    CHECK_THROWS_AS(FieldElement::zero(Field::Q()).inverse(), Error);
}
