#include "tricat/category.hpp"

namespace tricat {

Mor Instance::random_mor(std::mt19937_64& rng, const ObjectRef& x, const ObjectRef& y) const {
    HomSpace hs = hom_group(x, y);
    Mor m = zero_mor(x, y);
    for (const Mor& b : hs.basis)
        m = add(m, scale(random_element(rng, field()), b));
    return m;
}

namespace {
bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}
}  // namespace

bool candidate_well_formed(const Instance& inst, const CandidateTriangle& t, std::string* why) {
    if (t.f.source != t.x || t.f.target != t.y) return fail(why, "f endpoints");
    if (t.g.source != t.y || t.g.target != t.z) return fail(why, "g endpoints");
    if (t.h.source != t.z) return fail(why, "h source");
    if (t.h.target != inst.suspend_obj(t.x))
        return fail(why, "target of h is not the suspension of the first object");
    return true;
}

bool validate_triangle_morphism(const Instance& inst, const TriangleMorphism& tm,
                                std::string* why) {
    const auto& s = tm.source;
    const auto& t = tm.target;
    if (tm.a.source != s.x || tm.a.target != t.x) return fail(why, "a endpoints");
    if (tm.b.source != s.y || tm.b.target != t.y) return fail(why, "b endpoints");
    if (tm.c.source != s.z || tm.c.target != t.z) return fail(why, "c endpoints");
    if (!inst.mor_equal(inst.compose(tm.b, s.f), inst.compose(t.f, tm.a)))
        return fail(why, "left square does not commute");
    if (!inst.mor_equal(inst.compose(tm.c, s.g), inst.compose(t.g, tm.b)))
        return fail(why, "middle square does not commute");
    if (!inst.mor_equal(inst.compose(inst.suspend_mor(tm.a), s.h), inst.compose(t.h, tm.c)))
        return fail(why, "right square does not commute");
    return true;
}

bool validate_biproduct(const Instance& inst, const BiproductWitness& w, std::string* why) {
    const ObjectRef x = w.i1.source, y = w.i2.source;
    if (w.i1.target != w.object || w.i2.target != w.object) return fail(why, "injection targets");
    if (w.p1.source != w.object || w.p2.source != w.object) return fail(why, "projection sources");
    if (!inst.mor_equal(inst.compose(w.p1, w.i1), inst.identity(x)))
        return fail(why, "p1 i1 != id");
    if (!inst.mor_equal(inst.compose(w.p2, w.i2), inst.identity(y)))
        return fail(why, "p2 i2 != id");
    if (!inst.is_zero_mor(inst.compose(w.p1, w.i2))) return fail(why, "p1 i2 != 0");
    if (!inst.is_zero_mor(inst.compose(w.p2, w.i1))) return fail(why, "p2 i1 != 0");
    Mor e = inst.add(inst.compose(w.i1, w.p1), inst.compose(w.i2, w.p2));
    if (!inst.mor_equal(e, inst.identity(w.object)))
        return fail(why, "i1 p1 + i2 p2 != id");
    return true;
}

bool validate_octahedron(const Instance& inst, const OctahedronWitness& w, std::string* why) {
    if (!inst.mor_equal(w.gf, inst.compose(w.g, w.f))) return fail(why, "gf is not g∘f");
    for (const auto* t : {&w.t_f, &w.t_g, &w.t_gf})
        if (!candidate_well_formed(inst, *t, why)) return false;

    // (k, f', gf', g') relations of the composition axiom:
    //   k ∘ i_f = i_gf ∘ g        p_gf ∘ k = p_f
    //   k' ∘ i_gf = i_g           p_g ∘ k' = (Σf) ∘ p_gf
    //   k'' = (Σ i_f) ∘ p_g
    if (!inst.mor_equal(inst.compose(w.k, w.t_f.g), inst.compose(w.t_gf.g, w.g)))
        return fail(why, "k ∘ i_f != i_gf ∘ g");
    if (!inst.mor_equal(inst.compose(w.t_gf.h, w.k), w.t_f.h))
        return fail(why, "p_gf ∘ k != p_f");
    if (!inst.mor_equal(inst.compose(w.k_prime, w.t_gf.g), w.t_g.g))
        return fail(why, "k' ∘ i_gf != i_g");
    if (!inst.mor_equal(inst.compose(w.t_g.h, w.k_prime),
                        inst.compose(inst.suspend_mor(w.f), w.t_gf.h)))
        return fail(why, "p_g ∘ k' != (Σf) ∘ p_gf");
    if (!inst.mor_equal(w.k_second, inst.compose(inst.suspend_mor(w.t_f.g), w.t_g.h)))
        return fail(why, "k'' != (Σ i_f) ∘ p_g");

    CandidateTriangle kt{w.t_f.z, w.t_gf.z, w.t_g.z, w.k, w.k_prime, w.k_second};
    if (!candidate_well_formed(inst, kt, why)) return false;
    if (auto ok = inst.is_triangle(kt); ok.has_value() && !*ok)
        return fail(why, "(k, k', k'') is not a triangle");
    return true;
}

}  // namespace tricat
