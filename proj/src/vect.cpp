#include "tricat/vect.hpp"

namespace tricat {

namespace {

struct VectObject : ObjectData {
    Field field;
    int dim;

    VectObject(const Field& f, int d) : field(f), dim(d) {}
    bool equals(const ObjectData& o) const override {
        auto* v = dynamic_cast<const VectObject*>(&o);
        return v && v->field == field && v->dim == dim;
    }
    std::string name() const override { return "K^" + std::to_string(dim); }
};

struct VectMor : MorData {
    ExactMatrix m;
    explicit VectMor(ExactMatrix mm) : m(std::move(mm)) {}
};

int obj_dim(const ObjectRef& x) {
    auto* v = dynamic_cast<const VectObject*>(x.data.get());
    if (!v) throw Error("not a vect object: " + x.name());
    return v->dim;
}

}  // namespace

ObjectRef VectInstance::object(int dim) const {
    if (dim < 0) throw Error("negative dimension");
    return ObjectRef{std::make_shared<VectObject>(field_, dim)};
}

Mor VectInstance::mor(const ExactMatrix& m) const {
    if (m.field() != field_) throw FieldMismatch("vect morphism over wrong field");
    return Mor{object(m.cols()), object(m.rows()), std::make_shared<VectMor>(m)};
}

const ExactMatrix& VectInstance::matrix(const Mor& f) {
    auto* v = dynamic_cast<const VectMor*>(f.payload.get());
    if (!v) throw Error("not a vect morphism");
    return v->m;
}

int VectInstance::dim(const ObjectRef& x) { return obj_dim(x); }

Mor VectInstance::compose(const Mor& g, const Mor& f) const {
    if (g.source != f.target) throw ShapeMismatch("compose: inner objects differ");
    return mor(matrix(g) * matrix(f));
}

Mor VectInstance::add(const Mor& f, const Mor& g) const {
    if (f.source != g.source || f.target != g.target)
        throw ShapeMismatch("add: endpoints differ");
    return mor(matrix(f) + matrix(g));
}

Mor VectInstance::negate(const Mor& f) const { return mor(-matrix(f)); }

Mor VectInstance::zero_mor(const ObjectRef& x, const ObjectRef& y) const {
    return mor(ExactMatrix::zero(field_, obj_dim(y), obj_dim(x)));
}

Mor VectInstance::identity(const ObjectRef& x) const {
    return mor(ExactMatrix::identity(field_, obj_dim(x)));
}

Mor VectInstance::scale(const FieldElement& c, const Mor& f) const {
    return mor(matrix(f).scaled(c));
}

bool VectInstance::mor_equal(const Mor& f, const Mor& g) const {
    if (f.source != g.source || f.target != g.target)
        throw ShapeMismatch("mor_equal: endpoints differ");
    return matrix(f) == matrix(g);
}

CandidateTriangle VectInstance::cone(const Mor& f) const {
    // C_f = ker(f) (+) coker(f); the second morphism is the cokernel
    // projection into the second summand, the third the kernel inclusion
    // out of the first.
    const ExactMatrix& m = matrix(f);
    ExactMatrix ker = kernel_basis(m);              // dim(X) x n_ker
    ExactMatrix cok = cokernel_projection(m);       // n_cok x dim(Y)
    int nk = ker.cols(), nc = cok.rows();
    ObjectRef cz = object(nk + nc);
    ExactMatrix gmat = ExactMatrix::zero(field_, nk, m.rows()).vstack(cok);
    ExactMatrix hmat = ker.hstack(ExactMatrix::zero(field_, m.cols(), nc));
    return CandidateTriangle{f.source, f.target, cz, f,
                             Mor{f.target, cz, std::make_shared<VectMor>(gmat)},
                             Mor{cz, f.source, std::make_shared<VectMor>(hmat)}};
}

OctahedronWitness VectInstance::octahedron(const Mor& f, const Mor& g) const {
    if (g.source != f.target) throw ShapeMismatch("octahedron: pair not composable");
    Mor gf = compose(g, f);
    CandidateTriangle tf = cone(f), tg = cone(g), tgf = cone(gf);

    const ExactMatrix &mf = matrix(f), &mg = matrix(g);
    ExactMatrix kf = kernel_basis(mf), kgf = kernel_basis(matrix(gf)), kg = kernel_basis(mg);
    ExactMatrix pf = cokernel_projection(mf), pgf = cokernel_projection(matrix(gf)),
                pg = cokernel_projection(mg);

    // j1 : ker f -> ker gf,   induced by the identity of X
    auto j1 = solve(kgf, kf);
    // j2 : ker gf -> ker g,   induced by f
    auto j2 = solve(kg, mf * kgf);
    // q1 : coker f -> coker gf, induced by g:   q1 * pf = pgf * g
    auto q1t = solve(pf.transposed(), (pgf * mg).transposed());
    // q2 : coker gf -> coker g, induced by id:  q2 * pgf = pg
    auto q2t = solve(pgf.transposed(), pg.transposed());
    if (!j1 || !j2 || !q1t || !q2t)
        throw Error("octahedron: universal-property lift failed (should be impossible)");

    ExactMatrix kmat = block_diag(*j1, q1t->transposed());
    ExactMatrix kpmat = block_diag(*j2, q2t->transposed());

    Mor k{tf.z, tgf.z, std::make_shared<VectMor>(kmat)};
    Mor kp{tgf.z, tg.z, std::make_shared<VectMor>(kpmat)};
    Mor ks = compose(suspend_mor(tf.g), tg.h);  // (Σ i_f) ∘ p_g
    return OctahedronWitness{f, g, gf, tf, tg, tgf, k, kp, ks};
}

std::optional<bool> VectInstance::is_triangle(const CandidateTriangle& t) const {
    std::string why;
    if (!candidate_well_formed(*this, t, &why)) return false;
    const ExactMatrix &f = matrix(t.f), &g = matrix(t.g), &h = matrix(t.h);
    // exact at Y, Z and X: im = ker checked by vanishing + rank count
    if (!(g * f).is_zero()) return false;
    if (!(h * g).is_zero()) return false;
    if (!(f * h).is_zero()) return false;
    if (rank(f) + rank(g) != f.rows()) return false;
    if (rank(g) + rank(h) != g.rows()) return false;
    if (rank(h) + rank(f) != h.rows()) return false;
    return true;
}

HomSpace VectInstance::hom_group(const ObjectRef& x, const ObjectRef& y) const {
    int a = obj_dim(x), b = obj_dim(y);
    HomSpace hs;
    hs.basis.reserve(static_cast<size_t>(a) * b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < a; ++j) {
            ExactMatrix e = ExactMatrix::zero(field_, b, a);
            e.set(i, j, FieldElement::one(field_));
            hs.basis.push_back(Mor{x, y, std::make_shared<VectMor>(e)});
        }
    hs.coords = [](const Mor& m) {
        const ExactMatrix& mm = matrix(m);
        std::vector<FieldElement> c;
        c.reserve(static_cast<size_t>(mm.rows()) * mm.cols());
        for (int i = 0; i < mm.rows(); ++i)
            for (int j = 0; j < mm.cols(); ++j) c.push_back(mm.at(i, j));
        return c;
    };
    return hs;
}

std::optional<Mor> VectInstance::obj_iso(const ObjectRef& x, const ObjectRef& y) const {
    if (obj_dim(x) != obj_dim(y)) return std::nullopt;
    return Mor{x, y, std::make_shared<VectMor>(ExactMatrix::identity(field_, obj_dim(x)))};
}

BiproductWitness VectInstance::biproduct(const ObjectRef& x, const ObjectRef& y) const {
    int a = obj_dim(x), b = obj_dim(y);
    ObjectRef s = object(a + b);
    ExactMatrix i1 = ExactMatrix::identity(field_, a).vstack(ExactMatrix::zero(field_, b, a));
    ExactMatrix i2 = ExactMatrix::zero(field_, a, b).vstack(ExactMatrix::identity(field_, b));
    return BiproductWitness{s,
                            Mor{x, s, std::make_shared<VectMor>(i1)},
                            Mor{y, s, std::make_shared<VectMor>(i2)},
                            Mor{s, x, std::make_shared<VectMor>(i1.transposed())},
                            Mor{s, y, std::make_shared<VectMor>(i2.transposed())}};
}

ObjectRef VectInstance::random_object(std::mt19937_64& rng, const SampleBudget& b) const {
    return object(static_cast<int>(bounded_random(rng, 0, b.max_dim)));
}

TriangleDecomposition decompose_triangle(const VectInstance& inst, const CandidateTriangle& t) {
    auto ok = inst.is_triangle(t);
    if (!ok.has_value() || !*ok) throw NotATriangle("decompose_triangle: input is not exact");

    const Field F = inst.field();
    const ExactMatrix &f = VectInstance::matrix(t.f), &g = VectInstance::matrix(t.g),
                      &h = VectInstance::matrix(t.h);
    auto rf = rref(f), rg = rref(g), rh = rref(h);
    int n1 = rf.rank, n2 = rg.rank, n3 = rh.rank;

    // Model: X_m = n1+n3, Y_m = n1+n2, Z_m = n2+n3 with the elementary maps.
    ObjectRef xm = inst.object(n1 + n3), ym = inst.object(n1 + n2), zm = inst.object(n2 + n3);
    ExactMatrix Fm = block2x2(ExactMatrix::identity(F, n1), ExactMatrix::zero(F, n1, n3),
                              ExactMatrix::zero(F, n2, n1), ExactMatrix::zero(F, n2, n3));
    ExactMatrix Gm = block2x2(ExactMatrix::zero(F, n2, n1), ExactMatrix::identity(F, n2),
                              ExactMatrix::zero(F, n3, n1), ExactMatrix::zero(F, n3, n2));
    ExactMatrix Hm = block2x2(ExactMatrix::zero(F, n1, n2), ExactMatrix::zero(F, n1, n3),
                              ExactMatrix::zero(F, n3, n2), ExactMatrix::identity(F, n3));
    CandidateTriangle model{xm, ym, zm, inst.mor(Fm), inst.mor(Gm), inst.mor(Hm)};

    // Bases: standard vectors on the pivot columns span a complement of the
    // kernel; the images of those under the map span the image.
    auto unit_cols = [&](int dim, const std::vector<int>& idx) {
        ExactMatrix m = ExactMatrix::zero(F, dim, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j)
            m.set(idx[j], j, FieldElement::one(F));
        return m;
    };
    ExactMatrix v = unit_cols(f.cols(), rf.pivot_cols);   // complement of ker f in X
    ExactMatrix w = unit_cols(g.cols(), rg.pivot_cols);   // complement of ker g in Y
    ExactMatrix zc = unit_cols(h.cols(), rh.pivot_cols);  // complement of ker h in Z

    ExactMatrix phiX = v.hstack(h * zc);
    ExactMatrix phiY = (f * v).hstack(w);
    ExactMatrix phiZ = (g * w).hstack(zc);

    TriangleMorphism iso{model, t, inst.mor(phiX), inst.mor(phiY), inst.mor(phiZ)};
    return TriangleDecomposition{n1, n2, n3, model, iso};
}

}  // namespace tricat
