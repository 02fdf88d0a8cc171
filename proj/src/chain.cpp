#include "tricat/chain.hpp"

#include <algorithm>

#include "tricat/toolkit.hpp"

namespace tricat {

namespace {

struct ComplexObject : ObjectData {
    Complex c;
    explicit ComplexObject(Complex cc) : c(std::move(cc)) {}
    bool equals(const ObjectData& o) const override {
        auto* v = dynamic_cast<const ComplexObject*>(&o);
        return v && v->c == c;
    }
    std::string name() const override {
        std::string s = "C[" + std::to_string(c.lo) + ":";
        for (size_t i = 0; i < c.dims.size(); ++i)
            s += (i ? "," : "") + std::to_string(c.dims[i]);
        return s + "]";
    }
};

struct ChainMor : MorData {
    std::map<int, ExactMatrix> comps;  // degree -> component, zero elsewhere
    explicit ChainMor(std::map<int, ExactMatrix> m) : comps(std::move(m)) {}
};

const Complex& cx(const ObjectRef& x) {
    auto* v = dynamic_cast<const ComplexObject*>(x.data.get());
    if (!v) throw Error("not a chain object: " + x.name());
    return v->c;
}

const std::map<int, ExactMatrix>& comps_of(const Mor& f) {
    auto* v = dynamic_cast<const ChainMor*>(f.payload.get());
    if (!v) throw Error("not a chain morphism");
    return v->comps;
}

ExactMatrix comp_at(const Field& F, const Mor& f, int n) {
    const auto& m = comps_of(f);
    auto it = m.find(n);
    if (it != m.end()) return it->second;
    return ExactMatrix::zero(F, cx(f.target).dim_at(n), cx(f.source).dim_at(n));
}

// Coordinates for the space of degree-shifted families X_n -> Y_{n+shift}.
struct BlockLayout {
    struct Block {
        int degree, rows, cols, offset;
    };
    std::vector<Block> blocks;
    int total = 0;
};

BlockLayout layout_for(const Complex& x, const Complex& y, int shift) {
    BlockLayout L;
    for (int n = x.lo; n <= x.hi(); ++n) {
        int r = y.dim_at(n + shift), c = x.dim_at(n);
        if (r > 0 && c > 0) {
            L.blocks.push_back({n, r, c, L.total});
            L.total += r * c;
        }
    }
    return L;
}

ExactMatrix flatten(const Field& F, const BlockLayout& L,
                    const std::map<int, ExactMatrix>& comps) {
    ExactMatrix v(F, L.total, 1);
    for (const auto& b : L.blocks) {
        auto it = comps.find(b.degree);
        if (it == comps.end()) continue;
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j)
                v.set(b.offset + i * b.cols + j, 0, it->second.at(i, j));
    }
    for (const auto& [n, m] : comps) {
        bool in_layout = false;
        for (const auto& b : L.blocks) in_layout = in_layout || b.degree == n;
        if (!in_layout && !m.is_zero()) throw ShapeMismatch("component outside layout");
    }
    return v;
}

std::map<int, ExactMatrix> unflatten(const Field& F, const BlockLayout& L, const ExactMatrix& v) {
    std::map<int, ExactMatrix> comps;
    for (const auto& b : L.blocks) {
        ExactMatrix m(F, b.rows, b.cols);
        bool nonzero = false;
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) {
                const FieldElement& e = v.at(b.offset + i * b.cols + j, 0);
                if (!e.is_zero()) nonzero = true;
                m.set(i, j, e);
            }
        if (nonzero) comps.emplace(b.degree, std::move(m));
    }
    return comps;
}

// Matrix of a linear operator between block layouts, built column-by-column.
template <typename Fn>
ExactMatrix linmap_matrix(const Field& F, const BlockLayout& dom, const BlockLayout& cod,
                          Fn&& fn) {
    ExactMatrix a(F, cod.total, dom.total);
    for (const auto& b : dom.blocks)
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) {
                std::map<int, ExactMatrix> unit;
                ExactMatrix u(F, b.rows, b.cols);
                u.set(i, j, FieldElement::one(F));
                unit.emplace(b.degree, std::move(u));
                ExactMatrix col = flatten(F, cod, fn(unit));
                for (int r = 0; r < cod.total; ++r)
                    a.set(r, b.offset + i * b.cols + j, col.at(r, 0));
            }
    return a;
}

}  // namespace

int Complex::dim_at(int n) const {
    if (n < lo || n > hi()) return 0;
    return dims[static_cast<size_t>(n - lo)];
}

ExactMatrix Complex::diff_at(int n) const {
    if (n - 1 >= lo && n <= hi()) return diffs[static_cast<size_t>(n - 1 - lo)];
    return ExactMatrix::zero(field, dim_at(n - 1), dim_at(n));
}

bool Complex::operator==(const Complex& o) const {
    return field == o.field && lo == o.lo && dims == o.dims && diffs == o.diffs;
}

Complex make_complex(const Field& f, int lo, std::vector<int> dims,
                     std::vector<ExactMatrix> diffs) {
    if (!dims.empty() && diffs.size() != dims.size() - 1)
        throw ShapeMismatch("make_complex: need one differential per adjacent pair");
    for (size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].rows() != dims[i] || diffs[i].cols() != dims[i + 1])
            throw ShapeMismatch("make_complex: differential shape at index " + std::to_string(i));
        if (diffs[i].field() != f) throw FieldMismatch("make_complex: differential field");
    }
    for (size_t i = 0; i + 1 < diffs.size(); ++i)
        if (!(diffs[i] * diffs[i + 1]).is_zero())
            throw PreconditionViolated("make_complex: d∘d != 0 at degree " +
                                       std::to_string(lo + static_cast<int>(i) + 2));
    // trim zero-dimensional ends
    size_t a = 0, b = dims.size();
    while (a < b && dims[a] == 0) ++a;
    while (b > a && dims[b - 1] == 0) --b;
    Complex c;
    c.field = f;
    if (a == b) {
        c.lo = 0;
        return c;
    }
    c.lo = lo + static_cast<int>(a);
    c.dims.assign(dims.begin() + static_cast<long>(a), dims.begin() + static_cast<long>(b));
    for (size_t i = a; i + 1 < b; ++i) c.diffs.push_back(diffs[i]);
    return c;
}

Complex concentrated(const Field& f, int deg, int dim) {
    return make_complex(f, deg, {dim}, {});
}

ObjectRef ChainInstance::object(const Complex& c) const {
    if (c.field != field_) throw FieldMismatch("complex over the wrong field");
    return ObjectRef{std::make_shared<ComplexObject>(c)};
}

const Complex& ChainInstance::complex_of(const ObjectRef& x) { return cx(x); }

Mor ChainInstance::chain_mor(const ObjectRef& src, const ObjectRef& tgt,
                             const std::map<int, ExactMatrix>& comps) const {
    const Complex &X = cx(src), &Y = cx(tgt);
    std::map<int, ExactMatrix> kept;
    for (const auto& [n, m] : comps) {
        if (m.rows() != Y.dim_at(n) || m.cols() != X.dim_at(n))
            throw ShapeMismatch("chain_mor: component shape at degree " + std::to_string(n));
        if (!m.is_zero()) kept.emplace(n, m);
    }
    Mor f{src, tgt, std::make_shared<ChainMor>(kept)};
    for (int n = std::min(X.lo, Y.lo); n <= std::max(X.hi(), Y.hi()); ++n) {
        ExactMatrix lhs = Y.diff_at(n) * comp_at(field_, f, n);
        ExactMatrix rhs = comp_at(field_, f, n - 1) * X.diff_at(n);
        if (!(lhs == rhs)) throw PreconditionViolated("chain_mor: does not commute with d");
    }
    return f;
}

ExactMatrix ChainInstance::component(const Mor& f, int degree) {
    return comp_at(cx(f.source).field, f, degree);
}

ObjectRef ChainInstance::zero_object() const { return object(make_complex(field_, 0, {}, {})); }

ObjectRef ChainInstance::suspend_obj(const ObjectRef& x) const {
    const Complex& c = cx(x);
    std::vector<ExactMatrix> d;
    for (const auto& m : c.diffs) d.push_back(-m);
    Complex s;
    s.field = c.field;
    s.lo = c.dims.empty() ? 0 : c.lo + 1;
    s.dims = c.dims;
    s.diffs = std::move(d);
    return object(s);
}

ObjectRef ChainInstance::desuspend_obj(const ObjectRef& x) const {
    const Complex& c = cx(x);
    std::vector<ExactMatrix> d;
    for (const auto& m : c.diffs) d.push_back(-m);
    Complex s;
    s.field = c.field;
    s.lo = c.dims.empty() ? 0 : c.lo - 1;
    s.dims = c.dims;
    s.diffs = std::move(d);
    return object(s);
}

bool ChainInstance::is_zero_object(const ObjectRef& x) const {
    const Complex& c = cx(x);
    for (int n = c.lo; n <= c.hi(); ++n)
        if (homology(x, n).dim != 0) return false;
    return true;
}

Mor ChainInstance::compose(const Mor& g, const Mor& f) const {
    if (g.source != f.target) throw ShapeMismatch("chain compose: inner objects differ");
    const Complex &X = cx(f.source), &Z = cx(g.target);
    std::map<int, ExactMatrix> out;
    for (int n = X.lo; n <= X.hi(); ++n) {
        if (X.dim_at(n) == 0 || Z.dim_at(n) == 0) continue;
        out.emplace(n, comp_at(field_, g, n) * comp_at(field_, f, n));
    }
    return Mor{f.source, g.target, std::make_shared<ChainMor>(out)};
}

Mor ChainInstance::add(const Mor& f, const Mor& g) const {
    if (f.source != g.source || f.target != g.target) throw ShapeMismatch("chain add endpoints");
    const Complex &X = cx(f.source), &Y = cx(f.target);
    std::map<int, ExactMatrix> out;
    for (int n = std::min(X.lo, Y.lo); n <= std::max(X.hi(), Y.hi()); ++n) {
        if (X.dim_at(n) == 0 || Y.dim_at(n) == 0) continue;
        out.emplace(n, comp_at(field_, f, n) + comp_at(field_, g, n));
    }
    return Mor{f.source, f.target, std::make_shared<ChainMor>(out)};
}

Mor ChainInstance::negate(const Mor& f) const { return scale(-FieldElement::one(field_), f); }

Mor ChainInstance::zero_mor(const ObjectRef& x, const ObjectRef& y) const {
    return Mor{x, y, std::make_shared<ChainMor>(std::map<int, ExactMatrix>{})};
}

Mor ChainInstance::identity(const ObjectRef& x) const {
    const Complex& X = cx(x);
    std::map<int, ExactMatrix> out;
    for (int n = X.lo; n <= X.hi(); ++n)
        if (X.dim_at(n) > 0) out.emplace(n, ExactMatrix::identity(field_, X.dim_at(n)));
    return Mor{x, x, std::make_shared<ChainMor>(out)};
}

Mor ChainInstance::scale(const FieldElement& c, const Mor& f) const {
    std::map<int, ExactMatrix> out;
    for (const auto& [n, m] : comps_of(f)) out.emplace(n, m.scaled(c));
    return Mor{f.source, f.target, std::make_shared<ChainMor>(out)};
}

Mor ChainInstance::suspend_mor(const Mor& f) const {
    std::map<int, ExactMatrix> out;
    for (const auto& [n, m] : comps_of(f)) out.emplace(n + 1, m);
    return Mor{suspend_obj(f.source), suspend_obj(f.target), std::make_shared<ChainMor>(out)};
}

Mor ChainInstance::desuspend_mor(const Mor& f) const {
    std::map<int, ExactMatrix> out;
    for (const auto& [n, m] : comps_of(f)) out.emplace(n - 1, m);
    return Mor{desuspend_obj(f.source), desuspend_obj(f.target), std::make_shared<ChainMor>(out)};
}

std::optional<ChainHomotopy> ChainInstance::homotopic(const Mor& f, const Mor& g) const {
    if (f.source != g.source || f.target != g.target)
        throw ShapeMismatch("homotopic: endpoints differ");
    const Complex &X = cx(f.source), &Y = cx(f.target);
    BlockLayout Ls = layout_for(X, Y, 1);
    BlockLayout Lf = layout_for(X, Y, 0);
    auto boundary = [&](const std::map<int, ExactMatrix>& s) {
        // (d s + s d)_n = d_{Y,n+1} s_n + s_{n-1} d_{X,n}
        std::map<int, ExactMatrix> out;
        for (const auto& b : Lf.blocks) {
            int n = b.degree;
            ExactMatrix v = ExactMatrix::zero(field_, Y.dim_at(n), X.dim_at(n));
            if (auto it = s.find(n); it != s.end()) v = v + Y.diff_at(n + 1) * it->second;
            if (auto it = s.find(n - 1); it != s.end()) v = v + it->second * X.diff_at(n);
            out.emplace(n, std::move(v));
        }
        return out;
    };
    ExactMatrix D = linmap_matrix(field_, Ls, Lf, boundary);
    std::map<int, ExactMatrix> diff_comps;
    for (const auto& b : Lf.blocks)
        diff_comps.emplace(b.degree,
                           comp_at(field_, f, b.degree) - comp_at(field_, g, b.degree));
    ExactMatrix rhs = flatten(field_, Lf, diff_comps);
    auto sol = solve(D, rhs);
    if (!sol) return std::nullopt;
    return ChainHomotopy{unflatten(field_, Ls, *sol)};
}

bool ChainInstance::mor_equal(const Mor& f, const Mor& g) const {
    return homotopic(f, g).has_value();
}

CandidateTriangle ChainInstance::cone(const Mor& f) const {
    const Complex &X = cx(f.source), &Y = cx(f.target);
    int lo = std::min(X.lo + 1, Y.lo), hi = std::max(X.hi() + 1, Y.hi());
    if (X.dims.empty() && Y.dims.empty()) lo = 0, hi = -1;
    std::vector<int> dims;
    std::vector<ExactMatrix> diffs;
    for (int n = lo; n <= hi; ++n) dims.push_back(X.dim_at(n - 1) + Y.dim_at(n));
    // diffs[i] maps degree lo+i+1 -> lo+i
    for (int n = lo + 1; n <= hi; ++n)
        diffs.push_back(block2x2(-X.diff_at(n - 1),
                                 ExactMatrix::zero(field_, X.dim_at(n - 2), Y.dim_at(n)),
                                 -comp_at(field_, f, n - 1), Y.diff_at(n)));
    ObjectRef c = object(make_complex(field_, lo, dims, diffs));
    const Complex& C = cx(c);

    std::map<int, ExactMatrix> icomps, pcomps;
    for (int n = C.lo; n <= C.hi(); ++n) {
        int dx = X.dim_at(n - 1), dy = Y.dim_at(n);
        if (dy > 0)
            icomps.emplace(n, ExactMatrix::zero(field_, dx, dy)
                                  .vstack(ExactMatrix::identity(field_, dy)));
        if (dx > 0)
            pcomps.emplace(n, ExactMatrix::identity(field_, dx)
                                  .hstack(ExactMatrix::zero(field_, dx, dy)));
    }
    ObjectRef sx = suspend_obj(f.source);
    Mor inc{f.target, c, std::make_shared<ChainMor>(icomps)};
    Mor prj{c, sx, std::make_shared<ChainMor>(pcomps)};
    return CandidateTriangle{f.source, f.target, c, f, inc, prj};
}

OctahedronWitness ChainInstance::octahedron(const Mor& f, const Mor& g) const {
    if (g.source != f.target) throw ShapeMismatch("chain octahedron: pair not composable");
    Mor gf = compose(g, f);
    CandidateTriangle tf = cone(f), tg = cone(g), tgf = cone(gf);
    const Complex &X = cx(f.source), &Z = cx(g.target);

    std::map<int, ExactMatrix> kc, kpc;
    const Complex &Cf = cx(tf.z), &Cgf = cx(tgf.z), &Cg = cx(tg.z);
    for (int n = std::min(Cf.lo, Cgf.lo); n <= std::max(Cf.hi(), Cgf.hi()); ++n) {
        if (Cf.dim_at(n) == 0 || Cgf.dim_at(n) == 0) continue;
        kc.emplace(n, block_diag(ExactMatrix::identity(field_, X.dim_at(n - 1)),
                                 comp_at(field_, g, n)));
    }
    for (int n = std::min(Cgf.lo, Cg.lo); n <= std::max(Cgf.hi(), Cg.hi()); ++n) {
        if (Cgf.dim_at(n) == 0 || Cg.dim_at(n) == 0) continue;
        kpc.emplace(n, block_diag(comp_at(field_, f, n - 1),
                                  ExactMatrix::identity(field_, Z.dim_at(n))));
    }
    Mor k{tf.z, tgf.z, std::make_shared<ChainMor>(kc)};
    Mor kp{tgf.z, tg.z, std::make_shared<ChainMor>(kpc)};
    Mor ks = compose(suspend_mor(tf.g), tg.h);
    return OctahedronWitness{f, g, gf, tf, tg, tgf, k, kp, ks};
}

std::optional<bool> ChainInstance::is_triangle(const CandidateTriangle& t) const {
    std::string why;
    if (!candidate_well_formed(*this, t, &why)) return false;
    CandidateTriangle ct = cone(t.f);
    auto phi = solve_mor(*this, ct.z, t.z,
                         {MorConstraint{std::nullopt, ct.g, t.g},
                          MorConstraint{t.h, std::nullopt, ct.h}});
    if (!phi) return false;
    return is_quasi_iso(*phi);
}

HomSpace ChainInstance::hom_group(const ObjectRef& x, const ObjectRef& y) const {
    const Complex &X = cx(x), &Y = cx(y);
    BlockLayout Lf = layout_for(X, Y, 0);
    BlockLayout Ls = layout_for(X, Y, 1);

    // chain-map condition d_Y f - f d_X = 0, expressed on a layout shifted
    // one degree down (targets live in Y_{n-1})
    BlockLayout Leq = layout_for(X, Y, -1);
    auto chain_cond = [&](const std::map<int, ExactMatrix>& comps) {
        std::map<int, ExactMatrix> out;
        for (const auto& b : Leq.blocks) {
            int n = b.degree;
            ExactMatrix v = ExactMatrix::zero(field_, Y.dim_at(n - 1), X.dim_at(n));
            if (auto it = comps.find(n); it != comps.end()) v = v + Y.diff_at(n) * it->second;
            if (auto it = comps.find(n - 1); it != comps.end())
                v = v - it->second * X.diff_at(n);
            out.emplace(n, std::move(v));
        }
        return out;
    };
    ExactMatrix A = linmap_matrix(field_, Lf, Leq, chain_cond);
    ExactMatrix K = kernel_basis(A);  // chain maps, as columns in Lf coords

    auto boundary = [&](const std::map<int, ExactMatrix>& s) {
        std::map<int, ExactMatrix> out;
        for (const auto& b : Lf.blocks) {
            int n = b.degree;
            ExactMatrix v = ExactMatrix::zero(field_, Y.dim_at(n), X.dim_at(n));
            if (auto it = s.find(n); it != s.end()) v = v + Y.diff_at(n + 1) * it->second;
            if (auto it = s.find(n - 1); it != s.end()) v = v + it->second * X.diff_at(n);
            out.emplace(n, std::move(v));
        }
        return out;
    };
    ExactMatrix N = linmap_matrix(field_, Ls, Lf, boundary);

    // pick those kernel columns that complete the nullhomotopic subspace
    RrefResult r = rref(N.hstack(K));
    std::vector<int> chosen;
    for (int p : r.pivot_cols)
        if (p >= N.cols()) chosen.push_back(p - N.cols());
    ExactMatrix B = K.columns(chosen);

    HomSpace hs;
    for (int j = 0; j < B.cols(); ++j) {
        ExactMatrix col = B.submatrix(0, j, B.rows(), 1);
        hs.basis.push_back(Mor{x, y, std::make_shared<ChainMor>(unflatten(field_, Lf, col))});
    }
    Field F = field_;
    auto nb = std::make_shared<const LinearSolver>(N.hstack(B));
    hs.coords = [F, nb, Lf, ncols = N.cols(), k = B.cols()](const Mor& m) {
        ExactMatrix v = flatten(F, Lf, comps_of(m));
        auto sol = (*nb)(v);
        if (!sol) throw Error("hom coords: morphism not in the presented space");
        std::vector<FieldElement> out;
        for (int i = 0; i < k; ++i) out.push_back(sol->at(ncols + i, 0));
        return out;
    };
    return hs;
}

std::optional<Mor> ChainInstance::obj_iso(const ObjectRef& x, const ObjectRef& y) const {
    Normalization nx = normalize(x), ny = normalize(y);
    if (!(cx(nx.h) == cx(ny.h))) return std::nullopt;
    Mor u = identity(nx.h);
    u = Mor{nx.h, ny.h, u.payload};  // same complex, retag endpoints
    return compose(ny.inclusion, compose(u, nx.retraction));
}

BiproductWitness ChainInstance::biproduct(const ObjectRef& x, const ObjectRef& y) const {
    const Complex &X = cx(x), &Y = cx(y);
    int lo = std::min(X.dims.empty() ? Y.lo : X.lo, Y.dims.empty() ? X.lo : Y.lo);
    int hi = std::max(X.hi(), Y.hi());
    std::vector<int> dims;
    std::vector<ExactMatrix> diffs;
    for (int n = lo; n <= hi; ++n) dims.push_back(X.dim_at(n) + Y.dim_at(n));
    for (int n = lo + 1; n <= hi; ++n) diffs.push_back(block_diag(X.diff_at(n), Y.diff_at(n)));
    ObjectRef s = object(make_complex(field_, lo, dims, diffs));
    const Complex& S = cx(s);
    std::map<int, ExactMatrix> i1, i2, p1, p2;
    for (int n = S.lo; n <= S.hi(); ++n) {
        int a = X.dim_at(n), b = Y.dim_at(n);
        if (a > 0)
            i1.emplace(n, ExactMatrix::identity(field_, a).vstack(ExactMatrix::zero(field_, b, a)));
        if (b > 0)
            i2.emplace(n, ExactMatrix::zero(field_, a, b).vstack(ExactMatrix::identity(field_, b)));
        if (a > 0)
            p1.emplace(n, ExactMatrix::identity(field_, a).hstack(ExactMatrix::zero(field_, a, b)));
        if (b > 0)
            p2.emplace(n, ExactMatrix::zero(field_, b, a).hstack(ExactMatrix::identity(field_, b)));
    }
    return BiproductWitness{s, Mor{x, s, std::make_shared<ChainMor>(i1)},
                            Mor{y, s, std::make_shared<ChainMor>(i2)},
                            Mor{s, x, std::make_shared<ChainMor>(p1)},
                            Mor{s, y, std::make_shared<ChainMor>(p2)}};
}

ObjectRef ChainInstance::random_object(std::mt19937_64& rng, const SampleBudget& b) const {
    int len = static_cast<int>(bounded_random(rng, 1, std::max(1, b.max_length)));
    int lo = static_cast<int>(bounded_random(rng, -1, 1));
    std::vector<int> dims;
    for (int i = 0; i < len; ++i)
        dims.push_back(static_cast<int>(bounded_random(rng, 0, b.max_deg_dim)));
    // build differentials top-down: each one lands in the kernel-compatible
    // complement of the previous image
    std::vector<ExactMatrix> diffs(static_cast<size_t>(std::max(0, len - 1)),
                                   ExactMatrix(field_, 0, 0));
    ExactMatrix prev = ExactMatrix::zero(field_, dims.empty() ? 0 : dims.back(), 0);
    for (int i = len - 2; i >= 0; --i) {
        // d : degree lo+i+1 -> lo+i, constrained by d * prev = 0
        ExactMatrix P = cokernel_projection(prev);  // dims[i+1]-rank rows
        ExactMatrix R = random_matrix(rng, field_, dims[static_cast<size_t>(i)], P.rows());
        diffs[static_cast<size_t>(i)] = R * P;
        prev = diffs[static_cast<size_t>(i)];
    }
    return object(make_complex(field_, lo, dims, diffs));
}

ChainInstance::Homology ChainInstance::homology(const ObjectRef& x, int n) const {
    const Complex& X = cx(x);
    ExactMatrix Z = kernel_basis(X.diff_at(n));           // dim_n x z
    ExactMatrix Bimg = X.diff_at(n + 1);                  // dim_n x dim_{n+1}
    RrefResult r = rref(Bimg.hstack(Z));
    std::vector<int> chosen;
    for (int p : r.pivot_cols)
        if (p >= Bimg.cols()) chosen.push_back(p - Bimg.cols());
    ExactMatrix reps = Z.columns(chosen);
    return Homology{reps.cols(), reps};
}

ExactMatrix ChainInstance::homology_map(const Mor& f, int n) const {
    const ObjectRef &x = f.source, &y = f.target;
    Homology hx = homology(x, n), hy = homology(y, n);
    const Complex& Y = cx(y);
    ExactMatrix Bimg = Y.diff_at(n + 1);
    ExactMatrix lift_basis = Bimg.hstack(hy.representatives);
    ExactMatrix out(field_, hy.dim, hx.dim);
    for (int j = 0; j < hx.dim; ++j) {
        ExactMatrix v = comp_at(field_, f, n) * hx.representatives.submatrix(0, j, hx.representatives.rows(), 1);
        auto sol = solve(lift_basis, v);
        if (!sol) throw Error("homology_map: image of a cycle is not a cycle");
        for (int i = 0; i < hy.dim; ++i) out.set(i, j, sol->at(Bimg.cols() + i, 0));
    }
    return out;
}

bool ChainInstance::is_quasi_iso(const Mor& f) const {
    const Complex &X = cx(f.source), &Y = cx(f.target);
    int lo = std::min(X.lo, Y.lo) - 1, hi = std::max(X.hi(), Y.hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
        Homology hx = homology(f.source, n), hy = homology(f.target, n);
        if (hx.dim != hy.dim) return false;
        if (hx.dim > 0 && !inverse(homology_map(f, n)).has_value()) return false;
    }
    return true;
}

ChainInstance::Normalization ChainInstance::normalize(const ObjectRef& x) const {
    const Complex& X = cx(x);
    std::map<int, ExactMatrix> acols, bcols, reps, rcomp;
    // A_n: complement of the kernel of d_n; B_n := d_{n+1} A_{n+1}
    for (int n = X.lo; n <= X.hi(); ++n) {
        RrefResult r = rref(X.diff_at(n));
        ExactMatrix A(field_, X.dim_at(n), static_cast<int>(r.pivot_cols.size()));
        for (int j = 0; j < static_cast<int>(r.pivot_cols.size()); ++j)
            A.set(r.pivot_cols[static_cast<size_t>(j)], j, FieldElement::one(field_));
        acols.emplace(n, A);
    }
    std::vector<int> hdims;
    std::map<int, ExactMatrix> incl;
    for (int n = X.lo; n <= X.hi(); ++n) {
        ExactMatrix Bn = (n + 1 <= X.hi()) ? X.diff_at(n + 1) * acols.at(n + 1)
                                           : ExactMatrix::zero(field_, X.dim_at(n), 0);
        ExactMatrix K = kernel_basis(X.diff_at(n));
        RrefResult r = rref(Bn.hstack(K));
        std::vector<int> chosen;
        for (int p : r.pivot_cols)
            if (p >= Bn.cols()) chosen.push_back(p - Bn.cols());
        ExactMatrix R = K.columns(chosen);
        ExactMatrix T = Bn.hstack(R).hstack(acols.at(n));
        auto Ti = inverse(T);
        if (!Ti) throw Error("normalize: basis assembly failed");
        rcomp.emplace(n, Ti->submatrix(Bn.cols(), 0, R.cols(), T.cols()));
        incl.emplace(n, R);
        hdims.push_back(R.cols());
    }
    Complex H = make_complex(
        field_, X.lo, hdims,
        [&] {
            std::vector<ExactMatrix> zs;
            for (size_t i = 0; i + 1 < hdims.size(); ++i)
                zs.push_back(ExactMatrix::zero(field_, hdims[i], hdims[i + 1]));
            return zs;
        }());
    ObjectRef h = object(H);
    std::map<int, ExactMatrix> rc, ic;
    for (int n = X.lo; n <= X.hi(); ++n) {
        if (H.dim_at(n) == 0 || X.dim_at(n) == 0) continue;
        rc.emplace(n, rcomp.at(n));
        ic.emplace(n, incl.at(n));
    }
    return Normalization{h, Mor{x, h, std::make_shared<ChainMor>(rc)},
                         Mor{h, x, std::make_shared<ChainMor>(ic)}};
}

std::pair<CandidateTriangle, Mor> ChainInstance::ses_to_triangle(const Mor& i,
                                                                 const Mor& p) const {
    if (i.target != p.source) throw ShapeMismatch("ses_to_triangle: middle objects differ");
    const Complex &A = cx(i.source), &B = cx(i.target), &C = cx(p.target);
    for (int n = std::min({A.lo, B.lo, C.lo}); n <= std::max({A.hi(), B.hi(), C.hi()}); ++n) {
        int a = A.dim_at(n), b = B.dim_at(n), c = C.dim_at(n);
        ExactMatrix in = comp_at(field_, i, n), pn = comp_at(field_, p, n);
        if (a + c != b || rank(in) != a || rank(pn) != c || !(pn * in).is_zero())
            throw NotExact("ses_to_triangle: not degreewise exact at degree " + std::to_string(n));
    }
    CandidateTriangle t = cone(i);
    const Complex& Cone = cx(t.z);
    std::map<int, ExactMatrix> chi;
    for (int n = Cone.lo; n <= Cone.hi(); ++n) {
        if (C.dim_at(n) == 0 || Cone.dim_at(n) == 0) continue;
        chi.emplace(n, ExactMatrix::zero(field_, C.dim_at(n), A.dim_at(n - 1))
                           .hstack(comp_at(field_, p, n)));
    }
    Mor comparison{t.z, p.target, std::make_shared<ChainMor>(chi)};
    if (!is_quasi_iso(comparison))
        throw Error("ses_to_triangle: comparison map is not a quasi-isomorphism");
    return {t, comparison};
}

int ChainInstance::DerivedHom::total() const {
    int s = 0;
    for (const auto& [k, d] : dims) s += d;
    return s;
}

ChainInstance::DerivedHom ChainInstance::derived_hom(const ObjectRef& x,
                                                     const ObjectRef& y) const {
    const Complex &X = cx(x), &Y = cx(y);
    std::map<int, int> hx, hy;
    for (int n = X.lo; n <= X.hi(); ++n) hx[n] = homology(x, n).dim;
    for (int n = Y.lo; n <= Y.hi(); ++n) hy[n] = homology(y, n).dim;
    DerivedHom out;
    for (const auto& [n, dx] : hx)
        for (const auto& [m, dy] : hy) {
            if (dx == 0 || dy == 0) continue;
            out.dims[m - n] += dx * dy;
        }
    return out;
}

std::map<int, ExactMatrix> ChainInstance::loc_action(const Mor& f) const {
    const Complex &X = cx(f.source), &Y = cx(f.target);
    std::map<int, ExactMatrix> out;
    for (int n = std::min(X.lo, Y.lo); n <= std::max(X.hi(), Y.hi()); ++n)
        out.emplace(n, homology_map(f, n));
    return out;
}

}  // namespace tricat
