#ifndef TRICAT_CATEGORY_HPP
#define TRICAT_CATEGORY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tricat/matrix.hpp"

namespace tricat {

/*
 * The abstract contract a concrete triangulated instance implements, plus
 * the shared diagram value types. Object and morphism payloads are opaque
 * to generic code; each instance downcasts its own.
 *
 * Object equality is strict structural equality, never isomorphism: the
 * last object of a candidate triangle has to be *equal* to the suspension
 * of the first, and all generic constructions rely on that.
 */

struct ObjectData {
    virtual ~ObjectData() = default;
    virtual bool equals(const ObjectData& o) const = 0;
    virtual std::string name() const = 0;
};

struct MorData {
    virtual ~MorData() = default;
};

struct ObjectRef {
    std::shared_ptr<const ObjectData> data;

    bool operator==(const ObjectRef& o) const {
        if (data == o.data) return true;
        if (!data || !o.data) return false;
        return data->equals(*o.data);
    }
    bool operator!=(const ObjectRef& o) const { return !(*this == o); }
    std::string name() const { return data ? data->name() : "<null>"; }
};

struct Mor {
    ObjectRef source;
    ObjectRef target;
    std::shared_ptr<const MorData> payload;
};

/// Three composable morphisms whose last object equals the suspension of
/// the first, on the nose.
struct CandidateTriangle {
    ObjectRef x, y, z;
    Mor f;  // x -> y
    Mor g;  // y -> z
    Mor h;  // z -> suspend(x)
};

/// Vertical maps (a, b, c) between two candidate triangles; the fourth
/// vertical arrow is always suspend(a).
struct TriangleMorphism {
    CandidateTriangle source;
    CandidateTriangle target;
    Mor a, b, c;
};

/// The data produced by the composition axiom for a composable pair
/// (f, g): the three cone triangles over f, g and g∘f, and the connecting
/// morphisms (k, k', k'') which themselves form a triangle.
struct OctahedronWitness {
    Mor f, g, gf;
    CandidateTriangle t_f, t_g, t_gf;
    Mor k;        // cone(f)  -> cone(gf)
    Mor k_prime;  // cone(gf) -> cone(g)
    Mor k_second; // cone(g)  -> suspend(cone(f))
};

struct BiproductWitness {
    ObjectRef object;  // x (+) y
    Mor i1, i2;        // injections
    Mor p1, p2;        // projections
};

/// Finite-dimensional presentation of a hom-set: a spanning basis of
/// morphisms plus a coordinate map. Composition against a fixed morphism
/// is linear in these coordinates.
struct HomSpace {
    std::vector<Mor> basis;
    // Coordinates of a morphism class in `basis`. For instances whose
    // mor_equal is a quotient (homotopy, stable equality) the coordinates
    // are those of the class, so equal classes get equal coordinates.
    std::function<std::vector<FieldElement>(const Mor&)> coords;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Options controlling random sampling of objects.
struct SampleBudget {
    int max_dim = 6;     // vect dimension / frobenius underlying dimension
    int max_length = 4;  // chain: support length
    int max_deg_dim = 3; // chain: per-degree dimension
};

class Instance {
public:
    virtual ~Instance() = default;

    virtual std::string name() const = 0;
    virtual Field field() const = 0;

    // -- objects ----------------------------------------------------------
    virtual ObjectRef zero_object() const = 0;
    virtual ObjectRef suspend_obj(const ObjectRef& x) const = 0;
    virtual ObjectRef desuspend_obj(const ObjectRef& x) const = 0;
    virtual bool is_zero_object(const ObjectRef& x) const = 0;

    // -- additive structure ------------------------------------------------
    virtual Mor compose(const Mor& g, const Mor& f) const = 0;
    virtual Mor add(const Mor& f, const Mor& g) const = 0;
    virtual Mor negate(const Mor& f) const = 0;
    virtual Mor zero_mor(const ObjectRef& x, const ObjectRef& y) const = 0;
    virtual Mor identity(const ObjectRef& x) const = 0;
    virtual Mor scale(const FieldElement& c, const Mor& f) const = 0;

    virtual Mor suspend_mor(const Mor& f) const = 0;
    virtual Mor desuspend_mor(const Mor& f) const = 0;

    // Congruence for the instance (literal equality, homotopy, stable
    // equality, ...). Endpoints must agree.
    virtual bool mor_equal(const Mor& f, const Mor& g) const = 0;

    // -- triangulation -----------------------------------------------------
    virtual CandidateTriangle cone(const Mor& f) const = 0;
    virtual OctahedronWitness octahedron(const Mor& f, const Mor& g) const = 0;
    // nullopt: the instance cannot decide membership.
    virtual std::optional<bool> is_triangle(const CandidateTriangle& t) const = 0;

    // -- auxiliary structure -----------------------------------------------
    virtual HomSpace hom_group(const ObjectRef& x, const ObjectRef& y) const = 0;
    virtual std::optional<Mor> obj_iso(const ObjectRef& x, const ObjectRef& y) const = 0;
    virtual BiproductWitness biproduct(const ObjectRef& x, const ObjectRef& y) const = 0;

    // -- sampling ----------------------------------------------------------
    virtual ObjectRef random_object(std::mt19937_64& rng, const SampleBudget& b) const = 0;

    /// Random morphism x -> y through the hom_group presentation.
    Mor random_mor(std::mt19937_64& rng, const ObjectRef& x, const ObjectRef& y) const;

    // -- conveniences -------------------------------------------------------
    bool is_zero_mor(const Mor& f) const { return mor_equal(f, zero_mor(f.source, f.target)); }
    Mor sub(const Mor& f, const Mor& g) const { return add(f, negate(g)); }
};

/// Checks that (a, b, c) really is a morphism of candidate triangles:
/// all three squares commute under the instance's mor_equal.
bool validate_triangle_morphism(const Instance& inst, const TriangleMorphism& tm,
                                std::string* why = nullptr);

/// Checks the five biproduct equations of the witness.
bool validate_biproduct(const Instance& inst, const BiproductWitness& w,
                        std::string* why = nullptr);

/// Checks the full composition-axiom diagram: the three cone triangles are
/// the instance's own, the five commutativity relations hold, and
/// (k, k', k'') passes the instance triangle test where one exists.
bool validate_octahedron(const Instance& inst, const OctahedronWitness& w,
                         std::string* why = nullptr);

/// Strict shape check for a candidate triangle (endpoint equalities).
bool candidate_well_formed(const Instance& inst, const CandidateTriangle& t,
                           std::string* why = nullptr);

}  // namespace tricat

#endif
