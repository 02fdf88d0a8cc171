#include <doctest.h>

#include <random>

#include "tricat/toolkit.hpp"
#include "tricat/vect.hpp"
#include "tricat/verify.hpp"

using namespace tricat;

namespace {
const VectInstance V(Field::Q());
}

TEST_CASE("3x3 on identity inputs: all cones vanish and the grid commutes") {
    auto x = V.object(2);
    auto id = V.identity(x);
    auto gc = three_by_three(V, id, id, id, id);
    auto rep = validate_grid(V, gc);
    std::string msg = rep.failed.empty() ? "anticommute" : rep.failed.front();
    CHECK_MESSAGE(rep.pass(), msg);
    CHECK(VectInstance::dim(gc.row1.z) == 0);
    CHECK(VectInstance::dim(gc.col3.z) == 0);
}

TEST_CASE("3x3 rejects non-commuting input squares") {
    auto a = V.mor(ExactMatrix::from_ints(Field::Q(), 1, 1, {1}));
    auto b = V.mor(ExactMatrix::from_ints(Field::Q(), 1, 1, {2}));
    CHECK_THROWS_AS(three_by_three(V, a, a, a, b), PreconditionViolated);
}

TEST_CASE("3x3 on random commuting squares") {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 25; ++it) {
        int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3),
            c = 1 + static_cast<int>(rng() % 3);
        auto top = V.mor(random_matrix(rng, Field::Q(), b, a));
        auto left = V.mor(random_matrix(rng, Field::Q(), c, a));
        auto right = V.mor(random_matrix(rng, Field::Q(), c + 1, b));
        // choose bottom solving bottom*left = right*top when possible
        auto rt = VectInstance::matrix(right) * VectInstance::matrix(top);
        auto bt = solve(VectInstance::matrix(left).transposed(), rt.transposed());
        if (!bt) continue;
        auto bottom = V.mor(bt->transposed());
        REQUIRE(V.mor_equal(V.compose(bottom, left), V.compose(right, top)));

        auto gc = three_by_three(V, top, left, right, bottom);
        auto rep = validate_grid(V, gc);
        std::string msg = rep.failed.empty() ? "anticorner" : rep.failed.front();
        CHECK_MESSAGE(rep.pass(), msg);
        CHECK(rep.squares_checked >= 14);
    }
}

TEST_CASE("3x3 degenerate input recovers the biproduct triangle as the third column") {
    // rows (0 -> X = X) and (Y -> 0 -> Y): inputs are the zero square on
    // (0, X; Y, 0); the third column comes out as  X -0-> Y -i-> X(+)Y -p-> X.
    auto X = V.object(1), Y = V.object(1), Z0 = V.object(0);
    auto top = V.zero_mor(Z0, X);
    auto left = V.zero_mor(Z0, Y);
    auto right = V.zero_mor(X, Z0);
    auto bottom = V.zero_mor(Y, Z0);
    auto gc = three_by_three(V, top, left, right, bottom);
    auto rep = validate_grid(V, gc);
    CHECK(rep.pass());

    // third column: m : cone(top) -> cone(bottom), forced zero
    CHECK(V.is_zero_mor(gc.col3.f));
    CHECK(VectInstance::dim(gc.col3.x) == 1);  // cone(0 -> X) = X
    CHECK(VectInstance::dim(gc.col3.y) == 1);  // cone(Y -> 0) = Y
    CHECK(VectInstance::dim(gc.col3.z) == 2);  // X (+) Y
    CHECK(*V.is_triangle(gc.col3));

    // biproduct equations out of the grid: (3,2)-square gives p∘i = id-type
    // relations; verify via the decomposition counts (0, 1, 1)
    auto d = decompose_triangle(V, gc.col3);
    CHECK(d.n1 == 0);
    CHECK(d.n2 == 1);
    CHECK(d.n3 == 1);

    // explicit recovery: m'' ∘ j' = id on X and j'' ∘ m' = id on Y
    CHECK(V.mor_equal(V.compose(gc.col3.h, gc.row3.g), V.identity(gc.col3.x)));
    CHECK(V.mor_equal(V.compose(gc.row3.h, gc.col3.g), V.identity(gc.col1.z)));
}

TEST_CASE("triple composition: identities give zero cones") {
    auto x = V.object(2);
    auto id = V.identity(x);
    auto td = triple_composition(V, id, id, id);
    CHECK(VectInstance::dim(td.triangle.x) == 0);
    CHECK(VectInstance::dim(td.triangle.y) == 0);
    CHECK(VectInstance::dim(td.triangle.z) == 0);
    CHECK(*V.is_triangle(td.triangle));
}

TEST_CASE("triple composition on random triples") {
    std::mt19937_64 rng(35);
    for (int it = 0; it < 25; ++it) {
        int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3),
            c = 1 + static_cast<int>(rng() % 3), d = 1 + static_cast<int>(rng() % 3);
        auto f = V.mor(random_matrix(rng, Field::Q(), b, a));
        auto g = V.mor(random_matrix(rng, Field::Q(), c, b));
        auto h = V.mor(random_matrix(rng, Field::Q(), d, c));
        auto td = triple_composition(V, f, g, h);
        CHECK(*V.is_triangle(td.triangle));
        // the middle-row map factors exactly as beta ∘ alpha
        CHECK(V.mor_equal(td.triangle.f, V.compose(td.beta, td.alpha)));
        CHECK(check_vanishing(V, td.triangle).pass());
        // endpoints: cone(f) -> cone(hgf) -> cone(hg) -> Σ cone(f)
        CHECK(td.triangle.x == V.cone(f).z);
        CHECK(td.triangle.y == V.cone(V.compose(h, V.compose(g, f))).z);
        CHECK(td.triangle.z == V.cone(V.compose(h, g)).z);
    }
}

TEST_CASE("triple composition with g = id degenerates to the octahedron of (f, h)") {
    std::mt19937_64 rng(37);
    auto f = V.mor(random_matrix(rng, Field::Q(), 3, 2));
    auto h = V.mor(random_matrix(rng, Field::Q(), 2, 3));
    auto td = triple_composition(V, f, V.identity(f.target), h);
    auto w = V.octahedron(f, h);
    // same objects up to iso, and the first maps agree up to conjugation
    CHECK(V.obj_iso(td.triangle.x, w.t_f.z).has_value());
    CHECK(V.obj_iso(td.triangle.y, w.t_gf.z).has_value());
    CHECK(V.obj_iso(td.triangle.z, w.t_g.z).has_value());
}

TEST_CASE("axiom suite passes on vect over F7 and over Q") {
    VerifyOptions opts;
    opts.seed = 1;
    opts.samples = 25;
    opts.budget.max_dim = 5;
    for (const Field& F : {Field::Fp(7), Field::Q()}) {
        VectInstance inst(F);
        auto rep = verify_axioms(inst, opts);
        for (const auto& c : rep.checks) {
            std::string msg = c.id + (c.messages.empty() ? "" : ": " + c.messages.front());
            CHECK_MESSAGE(c.pass(), msg);
        }
    }
}

TEST_CASE("axiom suite passes vacuously on the zero category") {
    VerifyOptions opts;
    opts.seed = 11;
    opts.samples = 5;
    opts.budget.max_dim = 0;  // only zero objects get sampled
    VectInstance inst(Field::Fp(7));
    CHECK(verify_axioms(inst, opts).pass());
}

TEST_CASE("axiom suite detects a corrupted cone oracle") {
    // Mutation: a wrapper instance that flips the sign of h in every cone.
    class Corrupted : public VectInstance {
    public:
        using VectInstance::VectInstance;
        CandidateTriangle cone(const Mor& f) const override {
            auto t = VectInstance::cone(f);
            t.h = negate(t.h);
            return t;
        }
        // keep is_triangle honest: it still tests exactness, which is
        // sign-invariant here, so the corruption must be caught elsewhere
    };
    Corrupted bad(Field::Fp(7));
    VerifyOptions opts;
    opts.seed = 3;
    opts.samples = 10;
    opts.budget.max_dim = 4;
    auto rep = verify_axioms(bad, opts);
    // Consistently flipping h in *every* cone just produces the negative
    // triangulation, which is again valid and which vect cannot tell apart:
    // the whole suite still passes. The detectable mutation lives at the
    // witness level, below.
    CHECK(rep.pass());
}

TEST_CASE("mutation sensitivity: a sign flip in one cone triangle is caught") {
    std::mt19937_64 rng(39);
    int caught = 0, tried = 0;
    for (int it = 0; it < 10; ++it) {
        auto f = V.mor(random_matrix(rng, Field::Q(), 2, 3));
        auto g = V.mor(random_matrix(rng, Field::Q(), 3, 2));
        if (V.is_zero_mor(V.cone(f).h)) continue;  // need a nonzero p_f to see the sign
        ++tried;
        auto w = V.octahedron(f, g);
        w.t_f.h = V.negate(w.t_f.h);
        std::string why;
        if (!validate_octahedron(V, w, &why)) ++caught;
    }
    CHECK(tried > 0);
    CHECK(caught == tried);
}
