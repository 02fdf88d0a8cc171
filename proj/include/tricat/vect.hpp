#ifndef TRICAT_VECT_HPP
#define TRICAT_VECT_HPP

#include "tricat/category.hpp"

namespace tricat {

/*
 * Finite-dimensional vector spaces over an exact field, with the identity
 * functor as suspension and exact triples as triangles. Cones have the
 * closed form ker(f) (+) coker(f); this makes the instance the ground
 * truth against which all generic machinery is tested.
 */
class VectInstance : public Instance {
public:
    explicit VectInstance(const Field& f) : field_(f) {}

    std::string name() const override { return "vect(" + field_.to_string() + ")"; }
    Field field() const override { return field_; }

    ObjectRef object(int dim) const;
    Mor mor(const ExactMatrix& m) const;
    /// Matrix payload of a vect morphism.
    static const ExactMatrix& matrix(const Mor& f);
    static int dim(const ObjectRef& x);

    ObjectRef zero_object() const override { return object(0); }
    ObjectRef suspend_obj(const ObjectRef& x) const override { return x; }
    ObjectRef desuspend_obj(const ObjectRef& x) const override { return x; }
    bool is_zero_object(const ObjectRef& x) const override { return dim(x) == 0; }

    Mor compose(const Mor& g, const Mor& f) const override;
    Mor add(const Mor& f, const Mor& g) const override;
    Mor negate(const Mor& f) const override;
    Mor zero_mor(const ObjectRef& x, const ObjectRef& y) const override;
    Mor identity(const ObjectRef& x) const override;
    Mor scale(const FieldElement& c, const Mor& f) const override;
    Mor suspend_mor(const Mor& f) const override { return f; }
    Mor desuspend_mor(const Mor& f) const override { return f; }

    bool mor_equal(const Mor& f, const Mor& g) const override;

    CandidateTriangle cone(const Mor& f) const override;
    OctahedronWitness octahedron(const Mor& f, const Mor& g) const override;
    std::optional<bool> is_triangle(const CandidateTriangle& t) const override;

    HomSpace hom_group(const ObjectRef& x, const ObjectRef& y) const override;
    std::optional<Mor> obj_iso(const ObjectRef& x, const ObjectRef& y) const override;
    BiproductWitness biproduct(const ObjectRef& x, const ObjectRef& y) const override;

    ObjectRef random_object(std::mt19937_64& rng, const SampleBudget& b) const override;

private:
    Field field_;
};

/// Multiplicities of the three elementary triangle shapes
///   (X = X -> 0 -> X), (0 -> X = X -> 0), (X -> 0 -> X = X)
/// inside an exact triple, together with an explicit isomorphism of
/// candidate triangles from the assembled model onto the input.
struct TriangleDecomposition {
    int n1 = 0, n2 = 0, n3 = 0;  // = rank f, rank g, rank h
    CandidateTriangle model;
    TriangleMorphism iso;  // model -> t, all three maps invertible
};

/// Throws NotATriangle when t is not exact.
TriangleDecomposition decompose_triangle(const VectInstance& inst, const CandidateTriangle& t);

}  // namespace tricat

#endif
