#include "tricat/localization.hpp"

#include "tricat/chain.hpp"
#include "tricat/vect.hpp"

namespace tricat {

SubcategoryPredicate zero_only(const Instance& inst) {
    const Instance* p = &inst;
    return SubcategoryPredicate{SubcategoryPredicate::Kind::zero_only, "zero_only",
                                [p](const ObjectRef& x) { return p->is_zero_object(x); }};
}

SubcategoryPredicate all_objects() {
    return SubcategoryPredicate{SubcategoryPredicate::Kind::all, "all",
                                [](const ObjectRef&) { return true; }};
}

SubcategoryPredicate even_dim() {
    return SubcategoryPredicate{SubcategoryPredicate::Kind::even_dim, "even_dim",
                                [](const ObjectRef& x) { return VectInstance::dim(x) % 2 == 0; }};
}

SubcategoryPredicate acyclic_complexes() {
    return SubcategoryPredicate{
        SubcategoryPredicate::Kind::acyclic, "acyclic", [](const ObjectRef& x) {
            const Complex& c = ChainInstance::complex_of(x);
            for (int n = c.lo; n <= c.hi(); ++n) {
                int cycles = c.dim_at(n) - rank(c.diff_at(n));
                if (cycles - rank(c.diff_at(n + 1)) != 0) return false;
            }
            return true;
        }};
}

bool in_iso_D(const Instance& inst, const Mor& f, const SubcategoryPredicate& d) {
    return d.contains(inst.cone(f).z);
}

bool thick_closure_member(const Instance& inst, const ObjectRef& x,
                          const SubcategoryPredicate& d, const std::vector<ObjectRef>& pool) {
    ObjectRef s = inst.biproduct(x, inst.suspend_obj(x)).object;
    if (d.contains(s)) return true;
    for (const ObjectRef& m : pool)
        if (d.contains(m) && inst.obj_iso(s, m).has_value()) return true;
    return false;
}

ThickReport is_thick(const Instance& inst, const SubcategoryPredicate& d, std::mt19937_64& rng,
                     int samples, const SampleBudget& budget) {
    ThickReport rep;
    std::vector<ObjectRef> members;
    for (int it = 0; it < samples; ++it) {
        ObjectRef x = inst.random_object(rng, budget);
        if (d.contains(x)) {
            members.push_back(x);
            if (!d.contains(inst.suspend_obj(x)) || !d.contains(inst.desuspend_obj(x))) {
                rep.suspension_closed = false;
                rep.witness = "suspension of member " + x.name();
            }
        }
        // closure under cones of member-to-member morphisms
        if (members.size() >= 2) {
            const ObjectRef &a = members[rng() % members.size()],
                            &b = members[rng() % members.size()];
            Mor f = inst.random_mor(rng, a, b);
            if (!d.contains(inst.cone(f).z)) {
                rep.cone_closed = false;
                rep.witness = "cone of a morphism " + a.name() + " -> " + b.name();
            }
        }
        // thickness: a split monomorphism into a member forces membership
        ObjectRef z = inst.random_object(rng, budget);
        ObjectRef s = inst.biproduct(x, z).object;
        if (d.contains(s) && !d.contains(x)) {
            rep.thick = false;
            rep.witness = x.name() + " splits into the member " + s.name();
        }
    }
    return rep;
}

TwoOfThreeReport two_of_three(const Instance& inst, const Mor& v, const Mor& w,
                              const SubcategoryPredicate& d) {
    if (w.source != v.target) throw ShapeMismatch("two_of_three: pair not composable");
    Mor wv = inst.compose(w, v);
    bool iv = in_iso_D(inst, v, d), iw = in_iso_D(inst, w, d), iwv = in_iso_D(inst, wv, d);
    TwoOfThreeReport rep;
    if (iv && iw) rep.compose_closed = iwv;
    if (iw && iwv) rep.left_cancel = iv;
    if (iv && iwv) rep.right_cancel = iw;
    return rep;
}

PushoutSquare homotopy_pushout(const Instance& inst, const Mor& w, const Mor& f) {
    if (w.source != f.source) throw ShapeMismatch("homotopy_pushout: legs need a common source");
    BiproductWitness b = inst.biproduct(w.target, f.target);
    Mor j = inst.add(inst.compose(b.i1, w), inst.compose(b.i2, f));
    CandidateTriangle t = inst.cone(j);
    return PushoutSquare{inst.negate(inst.compose(t.g, b.i1)), inst.compose(t.g, b.i2), t.z};
}

PullbackSquare homotopy_pullback(const Instance& inst, const Mor& f, const Mor& w) {
    if (f.target != w.target) throw ShapeMismatch("homotopy_pullback: legs need a common target");
    BiproductWitness b = inst.biproduct(f.source, w.source);
    Mor u = inst.sub(inst.compose(f, b.p1), inst.compose(w, b.p2));
    CandidateTriangle t = inst.cone(u);
    Mor kappa = inst.desuspend_mor(t.h);
    return PullbackSquare{inst.compose(b.p1, kappa), inst.compose(b.p2, kappa),
                          inst.desuspend_obj(t.z)};
}

Fraction make_fraction(const Instance& inst, const SubcategoryPredicate& d,
                       Fraction::Orientation o, const Mor& w, const Mor& f) {
    if (o == Fraction::Orientation::right) {
        if (w.source != f.source) throw ShapeMismatch("right fraction: legs share the apex");
    } else {
        if (w.target != f.target) throw ShapeMismatch("left fraction: legs share the apex");
    }
    if (!in_iso_D(inst, w, d))
        throw PreconditionViolated("fraction: denominator is not in Iso(D)");
    ObjectRef apex = o == Fraction::Orientation::right ? w.source : w.target;
    return Fraction{o, apex, w, f};
}

Fraction loc_of(const Instance& inst, const Mor& f, Fraction::Orientation o) {
    if (o == Fraction::Orientation::right)
        return Fraction{o, f.source, inst.identity(f.source), f};
    return Fraction{o, f.target, inst.identity(f.target), f};
}

Fraction identity_fraction(const Instance& inst, const ObjectRef& x, Fraction::Orientation o) {
    return loc_of(inst, inst.identity(x), o);
}

Fraction compose_fractions(const Instance& inst, const SubcategoryPredicate& d,
                           const Fraction& b, const Fraction& a) {
    if (a.orientation != b.orientation)
        throw ShapeMismatch("compose_fractions: mixed orientations");
    if (!(a.target() == b.source()))
        throw ShapeMismatch("compose_fractions: endpoints do not match");
    if (a.orientation == Fraction::Orientation::right) {
        PullbackSquare pb = homotopy_pullback(inst, a.leg_f, b.leg_w);
        Mor w = inst.compose(a.leg_w, pb.a);
        Mor f = inst.compose(b.leg_f, pb.b);
        if (!in_iso_D(inst, w, d))
            throw Error("compose_fractions: composite denominator left the class");
        return Fraction{a.orientation, pb.corner, w, f};
    }
    PushoutSquare po = homotopy_pushout(inst, a.leg_w, b.leg_f);
    Mor f = inst.compose(po.f_prime, a.leg_f);
    Mor w = inst.compose(po.w_prime, b.leg_w);
    if (!in_iso_D(inst, w, d))
        throw Error("compose_fractions: composite denominator left the class");
    return Fraction{a.orientation, po.f_prime.target, w, f};
}

Tri loc_zero(const Instance& inst, const SubcategoryPredicate& d, const Mor& f) {
    if (inst.is_zero_mor(f)) return Tri::yes;
    // the zero endomorphism of the target kills f whenever it lies in the
    // localizing class, i.e. when cone(0) = Y (+) ΣY is a member
    if (in_iso_D(inst, inst.zero_mor(f.target, f.target), d)) return Tri::yes;
    switch (d.kind) {
        case SubcategoryPredicate::Kind::zero_only:
        case SubcategoryPredicate::Kind::even_dim:
        case SubcategoryPredicate::Kind::acyclic:
        case SubcategoryPredicate::Kind::all:
            // for these classes the two tests above are complete: members of
            // Iso(d) are invertible up to the collapse detected above
            return Tri::no;
        default:
            break;
    }
    // bounded search for a postcomposition witness
    for (const ObjectRef& target : {f.target, inst.suspend_obj(f.target)}) {
        HomSpace hs = inst.hom_group(f.target, target);
        for (const Mor& u : hs.basis)
            if (in_iso_D(inst, u, d) && inst.is_zero_mor(inst.compose(u, f))) return Tri::yes;
    }
    return Tri::undecided;
}

Tri fractions_equal(const Instance& inst, const SubcategoryPredicate& d, const Fraction& a,
                    const Fraction& b) {
    if (a.orientation != b.orientation)
        throw ShapeMismatch("fractions_equal: mixed orientations");
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        throw ShapeMismatch("fractions_equal: endpoints differ");
    if (a.orientation == Fraction::Orientation::right) {
        PullbackSquare pb = homotopy_pullback(inst, a.leg_w, b.leg_w);
        Mor delta = inst.sub(inst.compose(a.leg_f, pb.a), inst.compose(b.leg_f, pb.b));
        return loc_zero(inst, d, delta);
    }
    PushoutSquare po = homotopy_pushout(inst, a.leg_w, b.leg_w);
    Mor delta = inst.sub(inst.compose(po.f_prime, a.leg_f), inst.compose(po.w_prime, b.leg_f));
    return loc_zero(inst, d, delta);
}

bool loc_is_iso(const Instance& inst, const Mor& f, const SubcategoryPredicate& d) {
    return thick_closure_member(inst, inst.cone(f).z, d);
}

bool kernel_of_loc(const Instance& inst, const ObjectRef& x, const SubcategoryPredicate& d) {
    return loc_is_iso(inst, inst.zero_mor(x, x), d);
}

SubcategoryPredicate d_from_morphism_class(const Instance& inst, const std::vector<Mor>& ws,
                                           int budget) {
    std::vector<ObjectRef> cones;
    for (const Mor& w : ws) cones.push_back(inst.cone(w).z);
    if (dynamic_cast<const VectInstance*>(&inst)) {
        // in vect only the zero objects and everything are thick: any
        // nonzero cone already generates the whole category
        bool all_zero = true;
        for (const ObjectRef& c : cones) all_zero = all_zero && inst.is_zero_object(c);
        if (all_zero) {
            auto p = zero_only(inst);
            p.name = "generated_by_cones(=zero_only)";
            return p;
        }
        auto p = all_objects();
        p.name = "generated_by_cones(=all)";
        return p;
    }
    // budgeted saturation: close the cone objects under (de)suspension and
    // pairwise biproducts; membership is tested against the pool up to
    // isomorphism through the thick-closure criterion
    std::vector<ObjectRef> pool = cones;
    auto push_unique = [&](const ObjectRef& x) {
        for (const ObjectRef& p : pool)
            if (p == x) return;
        pool.push_back(x);
        if (static_cast<int>(pool.size()) > budget)
            throw SaturationBudgetExceeded("closure pool exceeded budget " +
                                           std::to_string(budget));
    };
    size_t before = 0;
    for (int round = 0; round < 2; ++round) {
        size_t upto = pool.size();
        for (size_t i = before; i < upto; ++i) {
            push_unique(inst.suspend_obj(pool[i]));
            push_unique(inst.desuspend_obj(pool[i]));
        }
        for (size_t i = 0; i < upto; ++i)
            for (size_t j = i; j < upto; ++j)
                push_unique(inst.biproduct(pool[i], pool[j]).object);
        before = upto;
    }
    const Instance* ip = &inst;
    return SubcategoryPredicate{
        SubcategoryPredicate::Kind::generated, "generated_by_cones",
        [ip, pool](const ObjectRef& x) {
            if (ip->is_zero_object(x)) return true;
            ObjectRef s = ip->biproduct(x, ip->suspend_obj(x)).object;
            for (const ObjectRef& p : pool)
                if (ip->obj_iso(x, p).has_value() || ip->obj_iso(s, p).has_value()) return true;
            return false;
        }};
}

CheckResult& LocReport::check(const std::string& id) {
    for (auto& c : checks)
        if (c.id == id) return c;
    checks.push_back(CheckResult{id, 0, 0, {}});
    return checks.back();
}

LocReport verify_localized_triangulation(const Instance& inst, const SubcategoryPredicate& d,
                                         const LocOptions& opts) {
    LocReport rep;
    std::mt19937_64 rng(opts.seed);
    auto frac_eq = [&](const Fraction& x, const Fraction& y) {
        return fractions_equal(inst, d, x, y) == Tri::yes;
    };

    for (int it = 0; it < opts.samples; ++it) {
        ObjectRef x = inst.random_object(rng, opts.budget);
        ObjectRef y = inst.random_object(rng, opts.budget);
        ObjectRef z = inst.random_object(rng, opts.budget);
        Mor f = inst.random_mor(rng, x, y);
        Mor g = inst.random_mor(rng, y, z);

        // L0
        rep.check("loc:L0-identities")
            .expect(in_iso_D(inst, inst.identity(x), d), "identity not in Iso(d) at " + x.name());
        {
            Mor a1 = random_automorphism(inst, rng, x);
            Mor a2 = random_automorphism(inst, rng, x);
            rep.check("loc:L0-composition")
                .expect(in_iso_D(inst, inst.compose(a2, a1), d),
                        "composite of isomorphisms left Iso(d)");
        }

        // L1 squares and membership transfer, both directions
        {
            Mor w = random_automorphism(inst, rng, x);  // certainly in Iso(d)
            PushoutSquare po = homotopy_pushout(inst, w, f);
            rep.check("loc:L1-square")
                .expect(inst.mor_equal(inst.compose(po.f_prime, w), inst.compose(po.w_prime, f)),
                        "pushout square does not commute");
            rep.check("loc:L1-transfer")
                .expect(in_iso_D(inst, po.w_prime, d), "pushout did not preserve Iso(d)");
            Mor wy = random_automorphism(inst, rng, y);
            PullbackSquare pb = homotopy_pullback(inst, f, wy);
            rep.check("loc:pullback-square")
                .expect(inst.mor_equal(inst.compose(f, pb.a), inst.compose(wy, pb.b)),
                        "pullback square does not commute");
            rep.check("loc:pullback-transfer")
                .expect(in_iso_D(inst, pb.a, d), "pullback did not preserve Iso(d)");
        }

        // fraction arithmetic
        {
            Fraction lf = loc_of(inst, f);
            Fraction lg = loc_of(inst, g);
            rep.check("loc:fraction-reflexive").expect(frac_eq(lf, lf), "a != a");
            Fraction comp = compose_fractions(inst, d, lg, lf);
            Fraction direct = loc_of(inst, inst.compose(g, f));
            rep.check("loc:functorial-composition")
                .expect(frac_eq(comp, direct), "Loc(g)Loc(f) != Loc(gf)");
            Fraction idc = compose_fractions(inst, d, lf, identity_fraction(inst, x));
            rep.check("loc:identity-compose").expect(frac_eq(idc, lf), "f∘id != f");
            // symmetry and a transitivity instance through the composite
            rep.check("loc:fraction-symmetric").expect(frac_eq(direct, comp), "eq not symmetric");

            // congruence: refine lf by an automorphism, compose with lg
            Mor u = random_automorphism(inst, rng, x);
            Fraction lf2{Fraction::Orientation::right, x, u, inst.compose(f, u)};
            bool refined_equal = frac_eq(lf, lf2);
            Fraction c1 = compose_fractions(inst, d, lg, lf);
            Fraction c2 = compose_fractions(inst, d, lg, lf2);
            rep.check("loc:fraction-refinement").expect(refined_equal, "refined roof differs");
            rep.check("loc:fraction-congruence")
                .expect(frac_eq(c1, c2), "composition does not respect fraction equality");
        }

        // images of triangles: vanishing composites survive localization
        {
            CandidateTriangle t = inst.cone(f);
            Fraction gf = compose_fractions(inst, d, loc_of(inst, t.g), loc_of(inst, t.f));
            rep.check("loc:T2-vanishing")
                .expect(frac_eq(gf, loc_of(inst, inst.zero_mor(t.x, t.z))),
                        "Loc(g)Loc(f) != 0 on a cone triangle");
            CandidateTriangle r = rotate(inst, t);
            Fraction hg = compose_fractions(inst, d, loc_of(inst, r.g), loc_of(inst, r.f));
            rep.check("loc:T4-vanishing")
                .expect(frac_eq(hg, loc_of(inst, inst.zero_mor(r.x, r.z))),
                        "rotation broke vanishing in the quotient");
        }

        // the composition axiom, lifted from the base category
        {
            OctahedronWitness w = inst.octahedron(f, g);
            auto okl = [&](const Mor& lhs, const Mor& rhs) {
                return frac_eq(loc_of(inst, lhs), loc_of(inst, rhs));
            };
            bool five = okl(inst.compose(w.k, w.t_f.g), inst.compose(w.t_gf.g, w.g)) &&
                        okl(inst.compose(w.t_gf.h, w.k), w.t_f.h) &&
                        okl(inst.compose(w.k_prime, w.t_gf.g), w.t_g.g) &&
                        okl(inst.compose(w.t_g.h, w.k_prime),
                            inst.compose(inst.suspend_mor(w.f), w.t_gf.h)) &&
                        okl(w.k_second, inst.compose(inst.suspend_mor(w.t_f.g), w.t_g.h));
            rep.check("loc:T5-lifted").expect(five, "lifted octahedron relations fail");
        }

        // homological probes vanishing on d factor through the quotient
        for (const auto& probe : opts.probes) {
            Mor w = random_automorphism(inst, rng, y);
            if (!in_iso_D(inst, w, d)) continue;
            ExactMatrix m = probe.action(w);
            rep.check("loc:probe-" + probe.name)
                .expect(m.rows() == m.cols() && inverse(m).has_value(),
                        probe.name + " does not invert Iso(d)");
        }
    }
    return rep;
}

}  // namespace tricat
