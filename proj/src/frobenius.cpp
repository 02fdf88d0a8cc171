#include "tricat/frobenius.hpp"

#include "tricat/toolkit.hpp"

namespace tricat {

namespace {

struct NfObject : ObjectData {
    Field field;
    int a, b;
    NfObject(const Field& f, int aa, int bb) : field(f), a(aa), b(bb) {}
    bool equals(const ObjectData& o) const override {
        auto* v = dynamic_cast<const NfObject*>(&o);
        return v && v->field == field && v->a == a && v->b == b;
    }
    std::string name() const override {
        return "M(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

struct FrobMor : MorData {
    ExactMatrix m;
    explicit FrobMor(ExactMatrix mm) : m(std::move(mm)) {}
};

const NfObject& nf(const ObjectRef& x) {
    auto* v = dynamic_cast<const NfObject*>(x.data.get());
    if (!v) throw Error("not a stable-module object: " + x.name());
    return *v;
}

ExactMatrix vec(const ExactMatrix& m) {
    ExactMatrix v(m.field(), m.rows() * m.cols(), 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

ExactMatrix unvec(const Field& f, const ExactMatrix& v, int rows, int cols) {
    ExactMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, v.at(i * cols + j, 0));
    return m;
}

ExactMatrix std_action(const Field& f, int a, int b) {
    ExactMatrix x(f, 2 * a + b, 2 * a + b);
    for (int i = 0; i < a; ++i) x.set(2 * i + 1, 2 * i, FieldElement::one(f));
    return x;
}

}  // namespace

SqZeroModule SqZeroModule::make(const ExactMatrix& action) {
    if (action.rows() != action.cols()) throw ShapeMismatch("module action must be square");
    if (!(action * action).is_zero())
        throw PreconditionViolated("module action does not square to zero");
    return SqZeroModule{action.rows(), action};
}

ObjectRef FrobeniusInstance::object(int a, int b) const {
    if (a < 0 || b < 0) throw Error("negative module ranks");
    return ObjectRef{std::make_shared<NfObject>(field_, a, b)};
}

int FrobeniusInstance::free_rank(const ObjectRef& x) { return nf(x).a; }
int FrobeniusInstance::trivial_rank(const ObjectRef& x) { return nf(x).b; }

SqZeroModule FrobeniusInstance::module_of(const ObjectRef& x) const {
    const NfObject& o = nf(x);
    return SqZeroModule{2 * o.a + o.b, std_action(field_, o.a, o.b)};
}

Mor FrobeniusInstance::mor(const ObjectRef& src, const ObjectRef& tgt,
                           const ExactMatrix& m) const {
    SqZeroModule s = module_of(src), t = module_of(tgt);
    if (m.rows() != t.dim || m.cols() != s.dim) throw ShapeMismatch("stable morphism shape");
    if (!(m * s.x == t.x * m))
        throw PreconditionViolated("matrix does not commute with the actions");
    return Mor{src, tgt, std::make_shared<FrobMor>(m)};
}

const ExactMatrix& FrobeniusInstance::matrix(const Mor& f) {
    auto* v = dynamic_cast<const FrobMor*>(f.payload.get());
    if (!v) throw Error("not a stable-module morphism");
    return v->m;
}

ModuleDecomposition FrobeniusInstance::decompose(const SqZeroModule& m) const {
    RrefResult r = rref(m.x);
    int a = r.rank, b = m.dim - 2 * a;
    if (b < 0) throw Error("decompose: action rank too large for a square-zero action");
    ExactMatrix K = kernel_basis(m.x);
    ExactMatrix img(field_, m.dim, a);
    ExactMatrix pre(field_, m.dim, a);
    for (int j = 0; j < a; ++j) {
        pre.set(r.pivot_cols[static_cast<size_t>(j)], j, FieldElement::one(field_));
        for (int i = 0; i < m.dim; ++i) img.set(i, j, m.x.at(i, r.pivot_cols[static_cast<size_t>(j)]));
    }
    RrefResult rk = rref(img.hstack(K));
    std::vector<int> chosen;
    for (int p : rk.pivot_cols)
        if (p >= a) chosen.push_back(p - a);
    ExactMatrix W = K.columns(chosen);
    if (W.cols() != b) throw Error("decompose: trivial part has unexpected rank");
    ExactMatrix T(field_, m.dim, m.dim);
    for (int i = 0; i < a; ++i)
        for (int rrow = 0; rrow < m.dim; ++rrow) {
            T.set(rrow, 2 * i, pre.at(rrow, i));
            T.set(rrow, 2 * i + 1, img.at(rrow, i));
        }
    for (int j = 0; j < b; ++j)
        for (int rrow = 0; rrow < m.dim; ++rrow) T.set(rrow, 2 * a + j, W.at(rrow, j));
    if (!inverse(T).has_value()) throw Error("decompose: adapted basis is singular");
    return ModuleDecomposition{a, b, T};
}

ExactMatrix FrobeniusInstance::nf_embedding(int a, int b) const {
    ExactMatrix e(field_, 2 * (a + b), 2 * a + b);
    for (int k = 0; k < 2 * a; ++k) e.set(k, k, FieldElement::one(field_));
    for (int j = 0; j < b; ++j) e.set(2 * (a + j) + 1, 2 * a + j, FieldElement::one(field_));
    return e;
}

std::pair<SqZeroModule, ExactMatrix> FrobeniusInstance::injective_hull(
    const SqZeroModule& m) const {
    ModuleDecomposition d = decompose(m);
    SqZeroModule hull{2 * (d.free_rank + d.trivial_rank),
                      std_action(field_, d.free_rank + d.trivial_rank, 0)};
    auto Ti = inverse(d.basis);
    return {hull, nf_embedding(d.free_rank, d.trivial_rank) * *Ti};
}

std::vector<ExactMatrix> FrobeniusInstance::commuting_maps(const SqZeroModule& a,
                                                           const SqZeroModule& b) const {
    // kernel of U |-> x_b U - U x_a
    ExactMatrix op = kron_operator(field_, b.dim, a.dim,
                                   {{b.x, ExactMatrix::identity(field_, a.dim)},
                                    {-ExactMatrix::identity(field_, b.dim), a.x}});
    ExactMatrix K = kernel_basis(op);
    std::vector<ExactMatrix> out;
    for (int j = 0; j < K.cols(); ++j)
        out.push_back(unvec(field_, K.submatrix(0, j, K.rows(), 1), b.dim, a.dim));
    return out;
}

namespace {
bool is_standard_layout(const Field& f, const SqZeroModule& m) {
    int a = rank(m.x);
    if (m.dim - 2 * a < 0) return false;
    return m.x == std_action(f, a, m.dim - 2 * a);
}
}  // namespace

std::shared_ptr<const LinearSolver> FrobeniusInstance::factor_solver(
    const SqZeroModule& a, const SqZeroModule& b) const {
    bool cacheable = is_standard_layout(field_, a) && is_standard_layout(field_, b);
    std::array<int, 4> key{rank(a.x), a.dim, rank(b.x), b.dim};
    if (cacheable) {
        std::lock_guard<std::mutex> lk(cache_mu_);
        if (auto it = eq_solvers_.find(key); it != eq_solvers_.end()) return it->second;
    }
    auto [hull, emb] = injective_hull(a);
    ExactMatrix comm = kron_operator(field_, b.dim, hull.dim,
                                     {{ExactMatrix::identity(field_, b.dim), hull.x},
                                      {-b.x, ExactMatrix::identity(field_, hull.dim)}});
    ExactMatrix ext = kron_operator(field_, b.dim, hull.dim,
                                    {{ExactMatrix::identity(field_, b.dim), emb}});
    auto solver = std::make_shared<const LinearSolver>(comm.vstack(ext));
    if (cacheable) {
        std::lock_guard<std::mutex> lk(cache_mu_);
        eq_solvers_.emplace(key, solver);
    }
    return solver;
}

const LinearSolver& FrobeniusInstance::extend_solver(int aa, int ab, int ba, int bb) const {
    std::array<int, 4> key{aa, ab, ba, bb};
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        if (auto it = ext_solvers_.find(key); it != ext_solvers_.end()) return *it->second;
    }
    int ia_dim = 2 * (aa + ab), ib_dim = 2 * (ba + bb);
    ExactMatrix xa = std_action(field_, aa + ab, 0), xb = std_action(field_, ba + bb, 0);
    ExactMatrix ea = nf_embedding(aa, ab);
    ExactMatrix comm = kron_operator(field_, ib_dim, ia_dim,
                                     {{ExactMatrix::identity(field_, ib_dim), xa},
                                      {-xb, ExactMatrix::identity(field_, ia_dim)}});
    ExactMatrix ext = kron_operator(field_, ib_dim, ia_dim,
                                    {{ExactMatrix::identity(field_, ib_dim), ea}});
    auto solver = std::make_shared<const LinearSolver>(comm.vstack(ext));
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto [it, _] = ext_solvers_.emplace(key, solver);
    return *it->second;
}

bool FrobeniusInstance::stable_equal_raw(const SqZeroModule& a, const SqZeroModule& b,
                                         const ExactMatrix& f, const ExactMatrix& g) const {
    auto solver = factor_solver(a, b);
    int hull_dim = 2 * (a.dim - rank(a.x));  // free rank + trivial rank, doubled
    ExactMatrix rhs = ExactMatrix::zero(field_, b.dim * hull_dim, 1).vstack(vec(f - g));
    return (*solver)(rhs).has_value();
}

std::pair<SqZeroModule, ExactMatrix> FrobeniusInstance::suspend_raw(const SqZeroModule& m) const {
    auto [hull, emb] = injective_hull(m);
    ExactMatrix pi = cokernel_projection(emb);
    if (!(pi * hull.x).is_zero())
        throw Error("suspend_raw: quotient action is nonzero (socle not inside the image)");
    return {SqZeroModule{pi.rows(), ExactMatrix::zero(field_, pi.rows(), pi.rows())}, pi};
}

ExactMatrix FrobeniusInstance::hull_extend(const Mor& f) const {
    const NfObject &A = nf(f.source), &B = nf(f.target);
    ExactMatrix eb = nf_embedding(B.a, B.b);
    int ia_dim = 2 * (A.a + A.b), ib_dim = 2 * (B.a + B.b);
    const LinearSolver& solver = extend_solver(A.a, A.b, B.a, B.b);
    ExactMatrix rhs =
        ExactMatrix::zero(field_, ib_dim * ia_dim, 1).vstack(vec(eb * matrix(f)));
    auto sol = solver(rhs);
    if (!sol) throw Error("hull_extend: no x-commuting extension (should be impossible)");
    return unvec(field_, *sol, ib_dim, ia_dim);
}

Mor FrobeniusInstance::compose(const Mor& g, const Mor& f) const {
    if (g.source != f.target) throw ShapeMismatch("stable compose: inner objects differ");
    return Mor{f.source, g.target, std::make_shared<FrobMor>(matrix(g) * matrix(f))};
}

Mor FrobeniusInstance::add(const Mor& f, const Mor& g) const {
    if (f.source != g.source || f.target != g.target)
        throw ShapeMismatch("stable add: endpoints differ");
    return Mor{f.source, f.target, std::make_shared<FrobMor>(matrix(f) + matrix(g))};
}

Mor FrobeniusInstance::negate(const Mor& f) const {
    return Mor{f.source, f.target, std::make_shared<FrobMor>(-matrix(f))};
}

Mor FrobeniusInstance::zero_mor(const ObjectRef& x, const ObjectRef& y) const {
    return Mor{x, y, std::make_shared<FrobMor>(
                         ExactMatrix::zero(field_, module_of(y).dim, module_of(x).dim))};
}

Mor FrobeniusInstance::identity(const ObjectRef& x) const {
    return Mor{x, x, std::make_shared<FrobMor>(ExactMatrix::identity(field_, module_of(x).dim))};
}

Mor FrobeniusInstance::scale(const FieldElement& c, const Mor& f) const {
    return Mor{f.source, f.target, std::make_shared<FrobMor>(matrix(f).scaled(c))};
}

Mor FrobeniusInstance::suspend_mor(const Mor& f) const {
    const NfObject &A = nf(f.source), &B = nf(f.target);
    ExactMatrix ea = nf_embedding(A.a, A.b), eb = nf_embedding(B.a, B.b);
    ExactMatrix pa = cokernel_projection(ea), pb = cokernel_projection(eb);
    ExactMatrix u = hull_extend(f);
    // hatf with hatf * pa = pb * u
    auto hatf_t = solve(pa.transposed(), (pb * u).transposed());
    if (!hatf_t) throw Error("suspend_mor: induced quotient map failed");
    ExactMatrix hatf = hatf_t->transposed();
    // conjugate through the trivial part: theta_B ∘ hatf ∘ triv_A
    ExactMatrix theta(field_, 2 * B.a + B.b, B.b);
    for (int j = 0; j < B.b; ++j) theta.set(2 * B.a + j, j, FieldElement::one(field_));
    ExactMatrix triv(field_, A.b, 2 * A.a + A.b);
    for (int j = 0; j < A.b; ++j) triv.set(j, 2 * A.a + j, FieldElement::one(field_));
    return Mor{f.source, f.target, std::make_shared<FrobMor>(theta * hatf * triv)};
}

Mor FrobeniusInstance::desuspend_mor(const Mor& f) const {
    HomSpace hs = hom_group(f.source, f.target);
    ExactMatrix s(field_, hs.dim(), hs.dim());
    for (int j = 0; j < hs.dim(); ++j) {
        auto col = hs.coords(suspend_mor(hs.basis[j]));
        for (int i = 0; i < hs.dim(); ++i) s.set(i, j, col[i]);
    }
    ExactMatrix rhs(field_, hs.dim(), 1);
    auto fc = hs.coords(f);
    for (int i = 0; i < hs.dim(); ++i) rhs.set(i, 0, fc[i]);
    auto sol = solve(s, rhs);
    if (!sol) throw Error("desuspend_mor: morphism is not in the image of the suspension");
    Mor out = zero_mor(f.source, f.target);
    for (int i = 0; i < hs.dim(); ++i) out = add(out, scale(sol->at(i, 0), hs.basis[i]));
    return out;
}

bool FrobeniusInstance::mor_equal(const Mor& f, const Mor& g) const {
    if (f.source != g.source || f.target != g.target)
        throw ShapeMismatch("stable mor_equal: endpoints differ");
    return stable_equal_raw(module_of(f.source), module_of(f.target), matrix(f), matrix(g));
}

struct FrobeniusInstance::ConeData {
    ObjectRef z;
    ExactMatrix pi;     // I(A) (+) B  ->  raw cone coordinates
    ExactMatrix basis;  // NF coordinates -> raw cone coordinates
    CandidateTriangle triangle;
};

FrobeniusInstance::ConeData FrobeniusInstance::cone_data(const Mor& f) const {
    const NfObject& A = nf(f.source);
    ExactMatrix ea = nf_embedding(A.a, A.b);
    SqZeroModule ia{2 * (A.a + A.b), std_action(field_, A.a + A.b, 0)};
    SqZeroModule mb = module_of(f.target);
    ExactMatrix E = ea.vstack(matrix(f));
    ExactMatrix xE = block_diag(ia.x, mb.x);
    ExactMatrix pi = cokernel_projection(E);
    auto xc_t = solve(pi.transposed(), (pi * xE).transposed());
    if (!xc_t) throw Error("cone: induced action failed");
    ExactMatrix xc = xc_t->transposed();
    SqZeroModule craw = SqZeroModule::make(xc);
    ModuleDecomposition d = decompose(craw);
    ObjectRef z = object(d.free_rank, d.trivial_rank);
    ExactMatrix nu = *inverse(d.basis);

    ExactMatrix incB = ExactMatrix::zero(field_, ia.dim, mb.dim)
                           .vstack(ExactMatrix::identity(field_, mb.dim));
    ExactMatrix g = nu * (pi * incB);

    ExactMatrix pa = cokernel_projection(ea);
    ExactMatrix projIA = ExactMatrix::identity(field_, ia.dim)
                             .hstack(ExactMatrix::zero(field_, ia.dim, mb.dim));
    auto hath_t = solve(pi.transposed(), (pa * projIA).transposed());
    if (!hath_t) throw Error("cone: projection to the suspension failed");
    ExactMatrix theta(field_, 2 * A.a + A.b, A.b);
    for (int j = 0; j < A.b; ++j) theta.set(2 * A.a + j, j, FieldElement::one(field_));
    ExactMatrix h = theta * hath_t->transposed() * d.basis;

    CandidateTriangle t{f.source, f.target, z, f,
                        Mor{f.target, z, std::make_shared<FrobMor>(g)},
                        Mor{z, f.source, std::make_shared<FrobMor>(h)}};
    return ConeData{z, pi, d.basis, t};
}

CandidateTriangle FrobeniusInstance::cone(const Mor& f) const { return cone_data(f).triangle; }

OctahedronWitness FrobeniusInstance::octahedron(const Mor& f, const Mor& g) const {
    if (g.source != f.target) throw ShapeMismatch("stable octahedron: pair not composable");
    Mor gf = compose(g, f);
    ConeData cf = cone_data(f), cg = cone_data(g), cgf = cone_data(gf);
    const NfObject& A = nf(f.source);
    int ia_dim = 2 * (A.a + A.b);

    // k : C_f -> C_gf induced by id_{I(A)} (+) g
    ExactMatrix D1 = block_diag(ExactMatrix::identity(field_, ia_dim), matrix(g));
    auto kraw_t = solve(cf.pi.transposed(), (cgf.pi * D1).transposed());
    if (!kraw_t) throw Error("octahedron: k does not descend");
    ExactMatrix k = *inverse(cgf.basis) * kraw_t->transposed() * cf.basis;

    // k' : C_gf -> C_g induced by u_f (+) id_C
    ExactMatrix D2 = block_diag(hull_extend(f),
                                ExactMatrix::identity(field_, module_of(g.target).dim));
    auto kpraw_t = solve(cgf.pi.transposed(), (cg.pi * D2).transposed());
    if (!kpraw_t) throw Error("octahedron: k' does not descend");
    ExactMatrix kp = *inverse(cg.basis) * kpraw_t->transposed() * cgf.basis;

    Mor km{cf.z, cgf.z, std::make_shared<FrobMor>(k)};
    Mor kpm{cgf.z, cg.z, std::make_shared<FrobMor>(kp)};
    Mor ks = compose(suspend_mor(cf.triangle.g), cg.triangle.h);
    return OctahedronWitness{f, g, gf, cf.triangle, cg.triangle, cgf.triangle, km, kpm, ks};
}

std::optional<bool> FrobeniusInstance::is_triangle(const CandidateTriangle& t) const {
    std::string why;
    if (!candidate_well_formed(*this, t, &why)) return false;
    CandidateTriangle ct = cone(t.f);
    auto phi = solve_mor(*this, ct.z, t.z,
                         {MorConstraint{std::nullopt, ct.g, t.g},
                          MorConstraint{t.h, std::nullopt, ct.h}});
    if (!phi) return false;
    if (trivial_rank(ct.z) != trivial_rank(t.z)) return false;
    return invert_mor(*this, *phi).has_value();
}

std::shared_ptr<const FrobeniusInstance::HomCache> FrobeniusInstance::hom_cache(int aa, int ab,
                                                                               int ba,
                                                                               int bb) const {
    std::array<int, 4> key{aa, ab, ba, bb};
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        if (auto it = hom_caches_.find(key); it != hom_caches_.end()) return it->second;
    }
    SqZeroModule mx{2 * aa + ab, std_action(field_, aa, ab)};
    SqZeroModule my{2 * ba + bb, std_action(field_, ba, bb)};
    std::vector<ExactMatrix> all = commuting_maps(mx, my);
    ExactMatrix V(field_, mx.dim * my.dim, static_cast<int>(all.size()));
    for (int j = 0; j < static_cast<int>(all.size()); ++j) {
        ExactMatrix col = vec(all[static_cast<size_t>(j)]);
        for (int i = 0; i < col.rows(); ++i) V.set(i, j, col.at(i, 0));
    }
    auto [hull, emb] = injective_hull(mx);
    std::vector<ExactMatrix> thru = commuting_maps(hull, my);
    ExactMatrix W(field_, mx.dim * my.dim, static_cast<int>(thru.size()));
    for (int j = 0; j < static_cast<int>(thru.size()); ++j) {
        ExactMatrix col = vec(thru[static_cast<size_t>(j)] * emb);
        for (int i = 0; i < col.rows(); ++i) W.set(i, j, col.at(i, 0));
    }
    RrefResult r = rref(W.hstack(V));
    auto cache = std::make_shared<HomCache>();
    for (int p : r.pivot_cols)
        if (p >= W.cols()) {
            ExactMatrix col = V.submatrix(0, p - W.cols(), V.rows(), 1);
            cache->basis.push_back(unvec(field_, col, my.dim, mx.dim));
        }
    ExactMatrix B(field_, V.rows(), static_cast<int>(cache->basis.size()));
    for (int j = 0; j < static_cast<int>(cache->basis.size()); ++j) {
        ExactMatrix col = vec(cache->basis[static_cast<size_t>(j)]);
        for (int i = 0; i < col.rows(); ++i) B.set(i, j, col.at(i, 0));
    }
    cache->wcols = W.cols();
    cache->wb = std::make_shared<const LinearSolver>(W.hstack(B));
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto [it, _] = hom_caches_.emplace(key, std::move(cache));
    return it->second;
}

HomSpace FrobeniusInstance::hom_group(const ObjectRef& x, const ObjectRef& y) const {
    const NfObject &X = nf(x), &Y = nf(y);
    auto cache = hom_cache(X.a, X.b, Y.a, Y.b);
    HomSpace hs;
    for (const ExactMatrix& m : cache->basis)
        hs.basis.push_back(Mor{x, y, std::make_shared<FrobMor>(m)});
    int k = static_cast<int>(cache->basis.size());
    hs.coords = [cache, k](const Mor& m) {
        auto sol = (*cache->wb)(vec(matrix(m)));
        if (!sol) throw Error("stable hom coords: morphism not in the presented space");
        std::vector<FieldElement> out;
        for (int i = 0; i < k; ++i) out.push_back(sol->at(cache->wcols + i, 0));
        return out;
    };
    return hs;
}

std::optional<Mor> FrobeniusInstance::obj_iso(const ObjectRef& x, const ObjectRef& y) const {
    const NfObject &X = nf(x), &Y = nf(y);
    if (X.b != Y.b) return std::nullopt;
    ExactMatrix w(field_, 2 * Y.a + Y.b, 2 * X.a + X.b);
    for (int j = 0; j < X.b; ++j) w.set(2 * Y.a + j, 2 * X.a + j, FieldElement::one(field_));
    return Mor{x, y, std::make_shared<FrobMor>(w)};
}

BiproductWitness FrobeniusInstance::biproduct(const ObjectRef& x, const ObjectRef& y) const {
    const NfObject &X = nf(x), &Y = nf(y);
    ObjectRef s = object(X.a + Y.a, X.b + Y.b);
    int sd = 2 * (X.a + Y.a) + X.b + Y.b;
    ExactMatrix i1(field_, sd, 2 * X.a + X.b), i2(field_, sd, 2 * Y.a + Y.b);
    for (int k = 0; k < 2 * X.a; ++k) i1.set(k, k, FieldElement::one(field_));
    for (int j = 0; j < X.b; ++j)
        i1.set(2 * (X.a + Y.a) + j, 2 * X.a + j, FieldElement::one(field_));
    for (int k = 0; k < 2 * Y.a; ++k) i2.set(2 * X.a + k, k, FieldElement::one(field_));
    for (int j = 0; j < Y.b; ++j)
        i2.set(2 * (X.a + Y.a) + X.b + j, 2 * Y.a + j, FieldElement::one(field_));
    return BiproductWitness{s, Mor{x, s, std::make_shared<FrobMor>(i1)},
                            Mor{y, s, std::make_shared<FrobMor>(i2)},
                            Mor{s, x, std::make_shared<FrobMor>(i1.transposed())},
                            Mor{s, y, std::make_shared<FrobMor>(i2.transposed())}};
}

ObjectRef FrobeniusInstance::random_object(std::mt19937_64& rng, const SampleBudget& bud) const {
    int a = static_cast<int>(bounded_random(rng, 0, bud.max_dim / 2));
    return object(a, static_cast<int>(bounded_random(rng, 0, bud.max_dim - 2 * a)));
}

SqZeroModule FrobeniusInstance::random_module(std::mt19937_64& rng, int max_dim) const {
    int d = static_cast<int>(bounded_random(rng, 0, max_dim));
    int a = static_cast<int>(bounded_random(rng, 0, d / 2));
    ExactMatrix n = std_action(field_, a, d - 2 * a);
    for (int attempt = 0; attempt < 16; ++attempt) {
        ExactMatrix s = random_matrix(rng, field_, d, d);
        auto si = inverse(s);
        if (si) return SqZeroModule::make(s * n * *si);
    }
    return SqZeroModule::make(n);
}

CandidateTriangle FrobeniusInstance::ses_to_triangle(const SqZeroModule& a, const SqZeroModule& b,
                                                     const SqZeroModule& c, const ExactMatrix& i,
                                                     const ExactMatrix& p) const {
    if (i.rows() != b.dim || i.cols() != a.dim || p.rows() != c.dim || p.cols() != b.dim)
        throw ShapeMismatch("ses_to_triangle: map shapes");
    if (!(i * a.x == b.x * i) || !(p * b.x == c.x * p))
        throw PreconditionViolated("ses_to_triangle: maps must commute with the actions");
    if (a.dim + c.dim != b.dim || rank(i) != a.dim || rank(p) != c.dim || !(p * i).is_zero())
        throw NotExact("ses_to_triangle: sequence is not short exact");

    ModuleDecomposition da = decompose(a), db = decompose(b), dc = decompose(c);
    auto [hull, emb] = injective_hull(a);
    // u : B -> I(A), x-commuting, with u ∘ i = emb
    ExactMatrix comm = kron_operator(field_, hull.dim, b.dim,
                                     {{ExactMatrix::identity(field_, hull.dim), b.x},
                                      {-hull.x, ExactMatrix::identity(field_, b.dim)}});
    ExactMatrix ext = kron_operator(field_, hull.dim, b.dim,
                                    {{ExactMatrix::identity(field_, hull.dim), i}});
    auto usol = solve(comm.vstack(ext),
                      ExactMatrix::zero(field_, comm.rows(), 1).vstack(vec(emb)));
    if (!usol) throw Error("ses_to_triangle: hull extension failed");
    ExactMatrix u = unvec(field_, *usol, hull.dim, b.dim);

    ExactMatrix pa = cokernel_projection(emb);
    auto v_t = solve(p.transposed(), (pa * u).transposed());
    if (!v_t) throw Error("ses_to_triangle: connecting map does not descend");
    ExactMatrix v = v_t->transposed();  // C -> Sigma A = trivial^{b_A}

    ObjectRef oa = object(da.free_rank, da.trivial_rank);
    ObjectRef ob = object(db.free_rank, db.trivial_rank);
    ObjectRef oc = object(dc.free_rank, dc.trivial_rank);
    ExactMatrix theta(field_, 2 * da.free_rank + da.trivial_rank, da.trivial_rank);
    for (int j = 0; j < da.trivial_rank; ++j)
        theta.set(2 * da.free_rank + j, j, FieldElement::one(field_));

    ExactMatrix fm = *inverse(db.basis) * i * da.basis;
    ExactMatrix gm = *inverse(dc.basis) * p * db.basis;
    ExactMatrix hm = theta * v * dc.basis;
    return CandidateTriangle{oa, ob, oc, mor(oa, ob, fm), mor(ob, oc, gm), mor(oc, oa, hm)};
}

}  // namespace tricat
