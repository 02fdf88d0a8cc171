#ifndef TRICAT_FROBENIUS_HPP
#define TRICAT_FROBENIUS_HPP

#include <array>
#include <map>
#include <mutex>

#include "tricat/category.hpp"

namespace tricat {

/*
 * The stable module category of the dual numbers K[x]/(x^2). A module is a
 * space with a square-zero action of x; every module splits as
 * free^a (+) trivial^b, injectives and projectives coincide with the free
 * modules, and two morphisms are equal in the stable category when their
 * difference extends along the injective hull embedding.
 *
 * Objects of the instance are normal forms (a, b) with the standard
 * square-zero action (free pairs first, then trivial coordinates). The
 * suspension I(A)/A lands, for every object, in the module (0, b); the
 * instance suspension is strictified to the identity on objects by
 * conjugating with the fixed stable isomorphism through the trivial part.
 */
struct SqZeroModule {
    int dim = 0;
    ExactMatrix x;  // square-zero action

    static SqZeroModule make(const ExactMatrix& action);  // validates x*x = 0
};

struct ModuleDecomposition {
    int free_rank = 0;     // a
    int trivial_rank = 0;  // b,  dim = 2a + b
    // columns: v_1, x v_1, ..., v_a, x v_a, w_1, ..., w_b  (an adapted
    // basis; conjugating by it puts the action in the standard layout)
    ExactMatrix basis;
};

class FrobeniusInstance : public Instance {
public:
    explicit FrobeniusInstance(const Field& f) : field_(f) {}

    std::string name() const override { return "frobenius(" + field_.to_string() + ")"; }
    Field field() const override { return field_; }

    /// The normal-form object free^a (+) trivial^b.
    ObjectRef object(int free_rank, int trivial_rank) const;
    static int free_rank(const ObjectRef& x);
    static int trivial_rank(const ObjectRef& x);
    /// The standard module underlying a normal-form object.
    SqZeroModule module_of(const ObjectRef& x) const;
    /// A morphism from its x-commuting representative matrix.
    Mor mor(const ObjectRef& src, const ObjectRef& tgt, const ExactMatrix& m) const;
    static const ExactMatrix& matrix(const Mor& f);

    // -- module-level structure theory (works on arbitrary modules) --------
    ModuleDecomposition decompose(const SqZeroModule& m) const;
    /// Injective hull: a free module of rank a+b with an x-commuting
    /// injective embedding.
    std::pair<SqZeroModule, ExactMatrix> injective_hull(const SqZeroModule& m) const;
    /// Difference factors over an injective object (one constrained solve).
    bool stable_equal_raw(const SqZeroModule& a, const SqZeroModule& b, const ExactMatrix& f,
                          const ExactMatrix& g) const;
    /// The quotient I(m)/m together with the quotient map; the result is
    /// always the trivial module of rank b.
    std::pair<SqZeroModule, ExactMatrix> suspend_raw(const SqZeroModule& m) const;
    /// Basis of { u : B -> C x-commuting }.
    std::vector<ExactMatrix> commuting_maps(const SqZeroModule& a, const SqZeroModule& b) const;

    /// Triangle of a short exact sequence 0 -> A -i-> B -p-> C -> 0 of raw
    /// modules, normalised into the instance; the connecting map comes from
    /// the hull diagram. Throws NotExact.
    CandidateTriangle ses_to_triangle(const SqZeroModule& a, const SqZeroModule& b,
                                      const SqZeroModule& c, const ExactMatrix& i,
                                      const ExactMatrix& p) const;

    // -- instance contract ---------------------------------------------------
    ObjectRef zero_object() const override { return object(0, 0); }
    ObjectRef suspend_obj(const ObjectRef& x) const override { return x; }
    ObjectRef desuspend_obj(const ObjectRef& x) const override { return x; }
    bool is_zero_object(const ObjectRef& x) const override { return trivial_rank(x) == 0; }

    Mor compose(const Mor& g, const Mor& f) const override;
    Mor add(const Mor& f, const Mor& g) const override;
    Mor negate(const Mor& f) const override;
    Mor zero_mor(const ObjectRef& x, const ObjectRef& y) const override;
    Mor identity(const ObjectRef& x) const override;
    Mor scale(const FieldElement& c, const Mor& f) const override;
    Mor suspend_mor(const Mor& f) const override;
    Mor desuspend_mor(const Mor& f) const override;

    bool mor_equal(const Mor& f, const Mor& g) const override;

    CandidateTriangle cone(const Mor& f) const override;
    OctahedronWitness octahedron(const Mor& f, const Mor& g) const override;
    std::optional<bool> is_triangle(const CandidateTriangle& t) const override;

    HomSpace hom_group(const ObjectRef& x, const ObjectRef& y) const override;
    std::optional<Mor> obj_iso(const ObjectRef& x, const ObjectRef& y) const override;
    BiproductWitness biproduct(const ObjectRef& x, const ObjectRef& y) const override;

    ObjectRef random_object(std::mt19937_64& rng, const SampleBudget& b) const override;

    /// A random module of bounded dimension in an arbitrary (non-normal)
    /// basis; exercises decompose and the raw-module operations.
    SqZeroModule random_module(std::mt19937_64& rng, int max_dim) const;

private:
    struct ConeData;
    ConeData cone_data(const Mor& f) const;

    // deterministic hull embedding of a normal form
    ExactMatrix nf_embedding(int a, int b) const;
    // deterministic extension of eps_B ∘ f along eps_A
    ExactMatrix hull_extend(const Mor& f) const;

    // factored systems, memoised per normal-form pair
    std::shared_ptr<const LinearSolver> factor_solver(const SqZeroModule& a,
                                                      const SqZeroModule& b) const;
    const LinearSolver& extend_solver(int aa, int ab, int ba, int bb) const;

    struct HomCache {
        std::vector<ExactMatrix> basis;
        int wcols = 0;
        std::shared_ptr<const LinearSolver> wb;
    };
    std::shared_ptr<const HomCache> hom_cache(int aa, int ab, int ba, int bb) const;

    Field field_;
    mutable std::mutex cache_mu_;
    mutable std::map<std::array<int, 4>, std::shared_ptr<const LinearSolver>> eq_solvers_;
    mutable std::map<std::array<int, 4>, std::shared_ptr<const LinearSolver>> ext_solvers_;
    mutable std::map<std::array<int, 4>, std::shared_ptr<const HomCache>> hom_caches_;
};

}  // namespace tricat

#endif
