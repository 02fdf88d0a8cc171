#ifndef TRICAT_CHAIN_HPP
#define TRICAT_CHAIN_HPP

#include <map>

#include "tricat/category.hpp"

namespace tricat {

/*
 * Bounded chain complexes over an exact field and their homotopy category.
 * Complexes are kept in a trimmed canonical form (no zero-dimensional
 * degrees at either end), so strict object equality is meaningful.
 *
 * Conventions: d_n : X_n -> X_{n-1}; the shift puts (ΣX)_n = X_{n-1} and
 * negates differentials; the cone of f : X -> Y has degree-n part
 * X_{n-1} (+) Y_n with differential [[-d_X, 0], [-f, d_Y]].
 */
struct Complex {
    Field field = Field::Q();
    int lo = 0;
    std::vector<int> dims;             // dims[i] = dimension in degree lo+i
    std::vector<ExactMatrix> diffs;    // diffs[i] : degree lo+i+1 -> lo+i

    int length() const { return static_cast<int>(dims.size()); }
    int hi() const { return lo + length() - 1; }
    int dim_at(int n) const;
    /// d_n : X_n -> X_{n-1}, zero-shaped outside the support.
    ExactMatrix diff_at(int n) const;
    bool operator==(const Complex& o) const;
};

/// Canonical (trimmed) complex; throws unless every d_{n-1} d_n = 0.
Complex make_complex(const Field& f, int lo, std::vector<int> dims,
                     std::vector<ExactMatrix> diffs);

/// Complex with one space in degree `deg`.
Complex concentrated(const Field& f, int deg, int dim);

struct ChainHomotopy {
    std::map<int, ExactMatrix> s;  // s_n : X_n -> Y_{n+1}
};

class ChainInstance : public Instance {
public:
    explicit ChainInstance(const Field& f) : field_(f) {}

    std::string name() const override { return "chain(" + field_.to_string() + ")"; }
    Field field() const override { return field_; }

    ObjectRef object(const Complex& c) const;
    static const Complex& complex_of(const ObjectRef& x);
    /// Chain map given by per-degree components (missing degrees are zero).
    /// Throws unless it commutes with the differentials.
    Mor chain_mor(const ObjectRef& src, const ObjectRef& tgt,
                  const std::map<int, ExactMatrix>& comps) const;
    static ExactMatrix component(const Mor& f, int degree);

    ObjectRef zero_object() const override;
    ObjectRef suspend_obj(const ObjectRef& x) const override;
    ObjectRef desuspend_obj(const ObjectRef& x) const override;
    bool is_zero_object(const ObjectRef& x) const override;

    Mor compose(const Mor& g, const Mor& f) const override;
    Mor add(const Mor& f, const Mor& g) const override;
    Mor negate(const Mor& f) const override;
    Mor zero_mor(const ObjectRef& x, const ObjectRef& y) const override;
    Mor identity(const ObjectRef& x) const override;
    Mor scale(const FieldElement& c, const Mor& f) const override;
    Mor suspend_mor(const Mor& f) const override;
    Mor desuspend_mor(const Mor& f) const override;

    /// Equality in the homotopy category.
    bool mor_equal(const Mor& f, const Mor& g) const override;

    CandidateTriangle cone(const Mor& f) const override;
    OctahedronWitness octahedron(const Mor& f, const Mor& g) const override;
    /// Semi-test: searches for a homotopy equivalence onto the cone
    /// triangle of the first morphism. Complete over a field.
    std::optional<bool> is_triangle(const CandidateTriangle& t) const override;

    HomSpace hom_group(const ObjectRef& x, const ObjectRef& y) const override;
    std::optional<Mor> obj_iso(const ObjectRef& x, const ObjectRef& y) const override;
    BiproductWitness biproduct(const ObjectRef& x, const ObjectRef& y) const override;

    ObjectRef random_object(std::mt19937_64& rng, const SampleBudget& b) const override;

    // -- chain-specific operations -----------------------------------------

    /// Homotopy with d s + s d = f - g, or nullopt if none exists.
    std::optional<ChainHomotopy> homotopic(const Mor& f, const Mor& g) const;

    struct Homology {
        int dim = 0;
        ExactMatrix representatives;  // cycles spanning H_n, one per column
    };
    Homology homology(const ObjectRef& x, int n) const;
    /// Matrix of H_n(f) in the representative bases.
    ExactMatrix homology_map(const Mor& f, int n) const;
    bool is_quasi_iso(const Mor& f) const;

    struct Normalization {
        ObjectRef h;      // the homology complex, zero differentials
        Mor retraction;   // x -> h
        Mor inclusion;    // h -> x,  retraction∘inclusion = id on the nose
    };
    /// Deformation of a complex onto its homology (field coefficients).
    Normalization normalize(const ObjectRef& x) const;

    /// For a degreewise short exact sequence 0 -> A -i-> B -p-> C -> 0:
    /// the cone triangle of i together with the comparison quasi-iso
    /// cone(i) -> C. Throws NotExact when the sequence is not exact.
    std::pair<CandidateTriangle, Mor> ses_to_triangle(const Mor& i, const Mor& p) const;

    struct DerivedHom {
        std::map<int, int> dims;  // degree k -> dimension
        int total() const;
    };
    /// Derived hom-space dimensions: in degree k the sum over n of
    /// dim Hom(H_n(x), H_{n+k}(y)). Cross-checked elsewhere against the
    /// roof-enumeration oracle; these two routes are kept independent.
    DerivedHom derived_hom(const ObjectRef& x, const ObjectRef& y) const;
    /// The localized image of a chain map: its action on homology.
    std::map<int, ExactMatrix> loc_action(const Mor& f) const;

private:
    Field field_;
};

}  // namespace tricat

#endif
