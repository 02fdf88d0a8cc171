#ifndef TRICAT_OP_HPP
#define TRICAT_OP_HPP

#include <memory>

#include "tricat/category.hpp"

namespace tricat {

/*
 * The dual of a triangulated instance: morphisms reverse, the suspension
 * becomes the desuspension, and a candidate (u, v, w) is a triangle
 * exactly when (w_base, v_base, u_base) is one downstairs. Cones come from
 * the base cone of the desuspended morphism, rotated back up.
 */
class OpInstance : public Instance {
public:
    explicit OpInstance(std::shared_ptr<const Instance> base) : base_(std::move(base)) {}

    const Instance& base() const { return *base_; }

    /// Wrap a base morphism y -> x as an op morphism x -> y.
    Mor lift(const Mor& base_mor) const;
    /// The underlying base morphism (runs opposite to the op one).
    static const Mor& lower(const Mor& op_mor);

    std::string name() const override { return "op(" + base_->name() + ")"; }
    Field field() const override { return base_->field(); }

    ObjectRef zero_object() const override { return base_->zero_object(); }
    ObjectRef suspend_obj(const ObjectRef& x) const override { return base_->desuspend_obj(x); }
    ObjectRef desuspend_obj(const ObjectRef& x) const override { return base_->suspend_obj(x); }
    bool is_zero_object(const ObjectRef& x) const override { return base_->is_zero_object(x); }

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

private:
    std::shared_ptr<const Instance> base_;
};

std::shared_ptr<Instance> op_instance(std::shared_ptr<const Instance> base);

}  // namespace tricat

#endif
