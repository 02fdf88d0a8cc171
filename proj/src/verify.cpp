#include "tricat/verify.hpp"

namespace tricat {

CheckResult& VerifyReport::check(const std::string& id) {
    for (auto& c : checks)
        if (c.id == id) return c;
    checks.push_back(CheckResult{id, 0, 0, {}});
    return checks.back();
}

Mor random_automorphism(const Instance& inst, std::mt19937_64& rng, const ObjectRef& x) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        Mor cand = inst.add(inst.identity(x), inst.random_mor(rng, x, x));
        if (invert_mor(inst, cand)) return cand;
    }
    return inst.identity(x);
}

namespace {

CandidateTriangle conjugate(const Instance& inst, const CandidateTriangle& t, const Mor& a,
                            const Mor& b, const Mor& c, const Mor& a_inv, const Mor& b_inv,
                            const Mor& c_inv) {
    // (f, g, h) -> (b f a⁻¹, c g b⁻¹, (Σa) h c⁻¹), an isomorphic candidate
    return CandidateTriangle{
        a.target, b.target, c.target,
        inst.compose(b, inst.compose(t.f, a_inv)),
        inst.compose(c, inst.compose(t.g, b_inv)),
        inst.compose(inst.suspend_mor(a), inst.compose(t.h, c_inv))};
}

}  // namespace

VerifyReport verify_axioms(const Instance& inst, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.instance = inst.name();
    rep.seed = opts.seed;
    rep.samples = opts.samples;
    std::mt19937_64 rng(opts.seed);

    auto is_tri = [&](const CandidateTriangle& t) {
        auto r = inst.is_triangle(t);
        return !r.has_value() || *r;  // instances without a test cannot veto
    };

    for (int it = 0; it < opts.samples; ++it) {
        ObjectRef x = inst.random_object(rng, opts.budget);
        ObjectRef y = inst.random_object(rng, opts.budget);
        ObjectRef z = inst.random_object(rng, opts.budget);
        Mor f = inst.random_mor(rng, x, y);
        Mor g = inst.random_mor(rng, y, z);

        // T1: (id, 0, 0) over a zero third object is a triangle.
        {
            ObjectRef zero = inst.zero_object();
            CandidateTriangle t1{x, x, zero, inst.identity(x), inst.zero_mor(x, zero),
                                 inst.zero_mor(zero, inst.suspend_obj(x))};
            rep.check("T1:identity-triangle").expect(is_tri(t1), "T1 fails on " + x.name());
            rep.check("T1:identity-cone-vanishes")
                .expect(iso_via_cone(inst, inst.identity(x)),
                        "cone of id not isomorphic to 0 on " + x.name());
        }

        // T2: the cone oracle completes f, deterministically.
        CandidateTriangle tf = inst.cone(f);
        {
            auto& c = rep.check("T2:cone-completes");
            std::string why;
            if (!candidate_well_formed(inst, tf, &why))
                c.fail("cone of f is ill-formed: " + why);
            else if (!inst.mor_equal(tf.f, f))
                c.fail("cone triangle does not start with f");
            else if (!is_tri(tf))
                c.fail("cone triangle fails the instance triangle test");
            else
                c.ok();
            CandidateTriangle tf2 = inst.cone(f);
            rep.check("T2:cone-deterministic")
                .expect(tf2.z == tf.z && inst.mor_equal(tf2.g, tf.g) && inst.mor_equal(tf2.h, tf.h),
                        "cone oracle is not a function of its input");
        }

        // T3: conjugating by isomorphisms preserves triangles.
        {
            Mor a = random_automorphism(inst, rng, tf.x);
            Mor b = random_automorphism(inst, rng, tf.y);
            Mor c = random_automorphism(inst, rng, tf.z);
            auto ai = invert_mor(inst, a), bi = invert_mor(inst, b), ci = invert_mor(inst, c);
            auto& chk = rep.check("T3:iso-invariance");
            if (!ai || !bi || !ci)
                chk.fail("automorphism not invertible (sampler bug)");
            else
                chk.expect(is_tri(conjugate(inst, tf, a, b, c, *ai, *bi, *ci)),
                           "conjugated triangle rejected");
        }

        // T4 and its converse: rotation in both directions.
        {
            rep.check("T4:rotation").expect(is_tri(rotate(inst, tf)), "rotated cone rejected");
            rep.check("T4:unrotation").expect(is_tri(unrotate(inst, tf)), "unrotated cone rejected");
            CandidateTriangle back = unrotate(inst, rotate(inst, tf));
            rep.check("T4:rotation-coherence")
                .expect(back.x == tf.x && inst.mor_equal(back.f, tf.f) &&
                            inst.mor_equal(back.g, tf.g) && inst.mor_equal(back.h, tf.h),
                        "unrotate(rotate(t)) != t");
        }

        // T5: the octahedron witness validates in full.
        {
            std::string why;
            OctahedronWitness w = inst.octahedron(f, g);
            rep.check("T5:octahedron").expect(validate_octahedron(inst, w, &why), why);
        }

        // Two signs can be inserted anywhere.
        for (auto [pa, pb] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            CandidateTriangle s = insert_two_signs(inst, tf, pa, pb);
            rep.check("signs:insert-two")
                .expect(is_tri(s), "two signs at (" + std::to_string(pa) + "," +
                                       std::to_string(pb) + ") rejected");
            CandidateTriangle ss = insert_two_signs(inst, s, pa, pb);
            rep.check("signs:involution")
                .expect(inst.mor_equal(ss.f, tf.f) && inst.mor_equal(ss.g, tf.g) &&
                            inst.mor_equal(ss.h, tf.h),
                        "double sign insertion is not the identity");
        }

        // Composites vanish around any triangle.
        {
            VanishingReport v = check_vanishing(inst, tf);
            rep.check("vanishing:composites").expect(v.pass(), v.describe());
        }

        // Cone of a suspension is the suspension of the cone, up to iso.
        {
            CandidateTriangle ts = inst.cone(inst.suspend_mor(f));
            rep.check("cone-of-suspension")
                .expect(inst.obj_iso(ts.z, inst.suspend_obj(tf.z)).has_value(),
                        "cone(Σf) and Σcone(f) are not isomorphic");
        }

        // Direct sums of triangles are triangles.
        {
            CandidateTriangle tg2 = inst.cone(g);
            CandidateTriangle s = sum_triangles(inst, tf, tg2);
            rep.check("sum:direct-sum-triangle").expect(is_tri(s), "sum of cones rejected");
            VanishingReport v = check_vanishing(inst, s);
            rep.check("sum:vanishing").expect(v.pass(), v.describe());
        }

        // Filling morphisms: existence & validity for a commuting square,
        // invertibility when the legs are isomorphisms.
        {
            Mor j = random_automorphism(inst, rng, tf.x);
            Mor k = random_automorphism(inst, rng, tf.y);
            Mor f2 = inst.compose(k, inst.compose(f, *invert_mor(inst, j)));
            CandidateTriangle t2 = inst.cone(f2);
            Mor m = filling_morphism(inst, tf, t2, j, k);
            TriangleMorphism tm{tf, t2, j, k, m};
            std::string why;
            rep.check("filling:valid").expect(validate_triangle_morphism(inst, tm, &why), why);
            rep.check("filling:iso-for-iso-legs")
                .expect(invert_mor(inst, m).has_value(), "filling for iso legs not invertible");
        }

        // Additive laws.
        {
            Mor g1 = inst.random_mor(rng, x, y);
            Mor h1 = inst.random_mor(rng, y, z);
            rep.check("additive:bilinear")
                .expect(inst.mor_equal(inst.compose(h1, inst.add(f, g1)),
                                       inst.add(inst.compose(h1, f), inst.compose(h1, g1))),
                        "composition is not bilinear");
            rep.check("suspension:additive")
                .expect(inst.mor_equal(inst.suspend_mor(inst.add(f, g1)),
                                       inst.add(inst.suspend_mor(f), inst.suspend_mor(g1))),
                        "suspension is not additive");
            rep.check("suspension:strict-inverse")
                .expect(inst.desuspend_obj(inst.suspend_obj(x)) == x &&
                            inst.mor_equal(inst.desuspend_mor(inst.suspend_mor(f)), f),
                        "desuspension is not a strict inverse");
            rep.check("suspension:functorial")
                .expect(inst.mor_equal(inst.suspend_mor(inst.compose(h1, f)),
                                       inst.compose(inst.suspend_mor(h1), inst.suspend_mor(f))),
                        "suspension does not preserve composition");
        }

        // Hom-functor half-exactness at the middle of the cone triangle.
        if (opts.with_hom_exactness) {
            ObjectRef w = inst.random_object(rng, opts.budget);
            HomExactnessReport hr = hom_exactness(inst, w, tf);
            rep.check("hom:half-exact")
                .expect(hr.pass(), "hom(" + w.name() + ", -) not exact at " + tf.y.name());
        }
    }
    return rep;
}

}  // namespace tricat
