#include "tricat/op.hpp"

#include "tricat/toolkit.hpp"

namespace tricat {

namespace {

struct OpMor : MorData {
    Mor base;  // runs target -> source of the op morphism
    explicit OpMor(Mor b) : base(std::move(b)) {}
};

}  // namespace

Mor OpInstance::lift(const Mor& base_mor) const {
    return Mor{base_mor.target, base_mor.source, std::make_shared<OpMor>(base_mor)};
}

const Mor& OpInstance::lower(const Mor& op_mor) {
    auto* d = dynamic_cast<const OpMor*>(op_mor.payload.get());
    if (!d) throw Error("not an op morphism");
    return d->base;
}

Mor OpInstance::compose(const Mor& g, const Mor& f) const {
    if (g.source != f.target) throw ShapeMismatch("op compose: inner objects differ");
    return lift(base_->compose(lower(f), lower(g)));
}

Mor OpInstance::add(const Mor& f, const Mor& g) const {
    return lift(base_->add(lower(f), lower(g)));
}

Mor OpInstance::negate(const Mor& f) const { return lift(base_->negate(lower(f))); }

Mor OpInstance::zero_mor(const ObjectRef& x, const ObjectRef& y) const {
    return lift(base_->zero_mor(y, x));
}

Mor OpInstance::identity(const ObjectRef& x) const { return lift(base_->identity(x)); }

Mor OpInstance::scale(const FieldElement& c, const Mor& f) const {
    return lift(base_->scale(c, lower(f)));
}

Mor OpInstance::suspend_mor(const Mor& f) const { return lift(base_->desuspend_mor(lower(f))); }

Mor OpInstance::desuspend_mor(const Mor& f) const { return lift(base_->suspend_mor(lower(f))); }

bool OpInstance::mor_equal(const Mor& f, const Mor& g) const {
    if (f.source != g.source || f.target != g.target)
        throw ShapeMismatch("op mor_equal: endpoints differ");
    return base_->mor_equal(lower(f), lower(g));
}

CandidateTriangle OpInstance::cone(const Mor& f) const {
    // Complete the desuspended base morphism downstairs, rotate the result
    // back up through the duality.
    const Mor& fb = lower(f);                       // target(f) -> source(f)
    Mor a = base_->desuspend_mor(fb);               // Σ⁻¹target -> Σ⁻¹source
    CandidateTriangle t0 = base_->cone(a);          // (a, i_a, p_a)
    return CandidateTriangle{f.source, f.target, t0.z, f, lift(t0.h),
                             lift(base_->negate(t0.g))};
}

std::optional<bool> OpInstance::is_triangle(const CandidateTriangle& t) const {
    std::string why;
    if (!candidate_well_formed(*this, t, &why)) return false;
    const Mor& hb = lower(t.h);
    CandidateTriangle down{hb.source, t.z, t.y, hb, lower(t.g), lower(t.f)};
    if (!candidate_well_formed(*base_, down, &why)) return false;
    return base_->is_triangle(down);
}

OctahedronWitness OpInstance::octahedron(const Mor& f, const Mor& g) const {
    if (g.source != f.target) throw ShapeMismatch("op octahedron: pair not composable");
    Mor gf = compose(g, f);
    CandidateTriangle tf = cone(f), tg = cone(g), tgf = cone(gf);

    Mor a = base_->desuspend_mor(lower(f));
    Mor b = base_->desuspend_mor(lower(g));
    Mor c = base_->desuspend_mor(lower(gf));  // mor_equal to a∘b downstairs
    OctahedronWitness w = base_->octahedron(b, a);

    Mor tau = cone_transport(*base_, base_->cone(c), w.t_gf);
    auto tau_inv = invert_mor(*base_, tau);
    if (!tau_inv) throw Error("op octahedron: transport not invertible");

    Mor k = lift(base_->compose(w.k_prime, tau));        // base: C_c -> C_a
    Mor kp = lift(base_->compose(*tau_inv, w.k));        // base: C_b -> C_c
    Mor ks = compose(suspend_mor(tf.g), tg.h);           // (Σ_op i_f) ∘ p_g
    return OctahedronWitness{f, g, gf, tf, tg, tgf, k, kp, ks};
}

HomSpace OpInstance::hom_group(const ObjectRef& x, const ObjectRef& y) const {
    HomSpace base_hs = base_->hom_group(y, x);
    HomSpace hs;
    hs.basis.reserve(base_hs.basis.size());
    for (const Mor& m : base_hs.basis) hs.basis.push_back(lift(m));
    hs.coords = [base_hs](const Mor& m) { return base_hs.coords(lower(m)); };
    return hs;
}

std::optional<Mor> OpInstance::obj_iso(const ObjectRef& x, const ObjectRef& y) const {
    auto w = base_->obj_iso(y, x);
    if (!w) return std::nullopt;
    return lift(*w);
}

BiproductWitness OpInstance::biproduct(const ObjectRef& x, const ObjectRef& y) const {
    BiproductWitness b = base_->biproduct(x, y);
    return BiproductWitness{b.object, lift(b.p1), lift(b.p2), lift(b.i1), lift(b.i2)};
}

ObjectRef OpInstance::random_object(std::mt19937_64& rng, const SampleBudget& b) const {
    return base_->random_object(rng, b);
}

std::shared_ptr<Instance> op_instance(std::shared_ptr<const Instance> base) {
    return std::make_shared<OpInstance>(std::move(base));
}

}  // namespace tricat
