#include <doctest.h>

#include "tricat/dot.hpp"
#include "tricat/vect.hpp"

using namespace tricat;

TEST_CASE("braid DOT output names objects and strands") {
    VectInstance V(Field::Q());
    auto f = V.mor(ExactMatrix::from_ints(Field::Q(), 1, 2, {1, 0}));
    auto g = V.mor(ExactMatrix::from_ints(Field::Q(), 2, 1, {1, 1}));
    std::string dot = dot_braid(V, braid(V, f, g));
    CHECK(dot.find("digraph braid") != std::string::npos);
    CHECK(dot.find("\"K^2\"") != std::string::npos);
    CHECK(dot.find("label=\"k''\"") != std::string::npos);
    CHECK(dot.find("i_gf") != std::string::npos);
}

TEST_CASE("grid DOT output marks the anticommuting corner") {
    VectInstance V(Field::Q());
    auto a = V.mor(ExactMatrix::from_ints(Field::Q(), 2, 1, {1, 0}));
    auto gc = three_by_three(V, a, a, V.identity(a.target), V.identity(a.target));
    std::string dot = dot_grid(V, gc);
    CHECK(dot.find("digraph grid") != std::string::npos);
    CHECK(dot.find("⊖") != std::string::npos);
    CHECK(dot.find("label=\"m''\"") != std::string::npos);
    CHECK(dot.find("label=\"j''\"") != std::string::npos);
}
