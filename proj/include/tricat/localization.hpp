#ifndef TRICAT_LOCALIZATION_HPP
#define TRICAT_LOCALIZATION_HPP

#include "tricat/toolkit.hpp"
#include "tricat/verify.hpp"

namespace tricat {

/*
 * Thick subcategories, the localizing class Iso(D), the calculus of
 * fractions and the Verdier quotient, executable over any instance.
 * Subcategories are extensional predicates on objects; the predicate kind
 * records enough structure for fraction equality to be decided exactly on
 * the built-in instances.
 */
struct SubcategoryPredicate {
    enum class Kind { zero_only, even_dim, acyclic, all, generated, custom };

    Kind kind = Kind::custom;
    std::string name;
    std::function<bool(const ObjectRef&)> contains;
};

SubcategoryPredicate zero_only(const Instance& inst);
SubcategoryPredicate all_objects();
/// Even-dimensional subspaces (vect instances).
SubcategoryPredicate even_dim();
/// Complexes with vanishing homology in every degree (chain instances).
SubcategoryPredicate acyclic_complexes();

/// f lies in the localizing class: its cone object belongs to d.
bool in_iso_D(const Instance& inst, const Mor& f, const SubcategoryPredicate& d);

/// x (+) Σx is a member (the thick-closure criterion); `pool` optionally
/// supplies additional members to compare against up to isomorphism.
bool thick_closure_member(const Instance& inst, const ObjectRef& x,
                          const SubcategoryPredicate& d,
                          const std::vector<ObjectRef>& pool = {});

struct ThickReport {
    bool suspension_closed = true;
    bool cone_closed = true;
    bool thick = true;
    std::string witness;  // a failing configuration, when one is found
    bool pass() const { return suspension_closed && cone_closed && thick; }
};

/// Samples the subcategory axioms and thickness (split monomorphisms into
/// members must have member sources).
ThickReport is_thick(const Instance& inst, const SubcategoryPredicate& d, std::mt19937_64& rng,
                     int samples, const SampleBudget& budget);

struct TwoOfThreeReport {
    bool compose_closed = true;  // v, w in Iso  =>  wv in Iso
    bool left_cancel = true;     // w, wv in Iso =>  v in Iso
    bool right_cancel = true;    // v, wv in Iso =>  w in Iso
    bool pass() const { return compose_closed && left_cancel && right_cancel; }
};

TwoOfThreeReport two_of_three(const Instance& inst, const Mor& v, const Mor& w,
                              const SubcategoryPredicate& d);

struct PushoutSquare {
    Mor f_prime;  // X' -> corner
    Mor w_prime;  // Y  -> corner
    ObjectRef corner;
};

/// The homotopy pushout of the span (w : X -> X', f : X -> Y), built from
/// a triangle over [w; f] into the biproduct; f'∘w = w'∘f exactly, and w'
/// inherits membership of Iso(d) from w.
PushoutSquare homotopy_pushout(const Instance& inst, const Mor& w, const Mor& f);

struct PullbackSquare {
    Mor a;  // corner -> A1
    Mor b;  // corner -> A2
    ObjectRef corner;
};

/// Dual construction for a cospan (f : A1 -> Y <- A2 : w).
PullbackSquare homotopy_pullback(const Instance& inst, const Mor& f, const Mor& w);

// ---------------------------------------------------------------------------
// fractions

struct Fraction {
    enum class Orientation { right, left };

    Orientation orientation = Orientation::right;
    ObjectRef apex;
    Mor leg_w;  // in the localizing class
    Mor leg_f;
    // right: X <=w= apex =f=> Y   (denotes Loc(f) Loc(w)^{-1} : X -> Y)
    // left:  X =f=> apex <=w= Y   (denotes Loc(w)^{-1} Loc(f) : X -> Y)

    const ObjectRef& source() const {
        return orientation == Orientation::right ? leg_w.target : leg_f.source;
    }
    const ObjectRef& target() const {
        return orientation == Orientation::right ? leg_f.target : leg_w.source;
    }
};

enum class Tri { yes, no, undecided };

/// Validates that leg_w is in the localizing class.
Fraction make_fraction(const Instance& inst, const SubcategoryPredicate& d,
                       Fraction::Orientation o, const Mor& w, const Mor& f);
/// The image of an ordinary morphism.
Fraction loc_of(const Instance& inst, const Mor& f,
                Fraction::Orientation o = Fraction::Orientation::right);
Fraction identity_fraction(const Instance& inst, const ObjectRef& x,
                           Fraction::Orientation o = Fraction::Orientation::right);

/// b ∘ a through the homotopy pushout / pullback.
Fraction compose_fractions(const Instance& inst, const SubcategoryPredicate& d,
                           const Fraction& b, const Fraction& a);

/// Loc(f) = 0, decided by the postcomposition criterion. Exact for the
/// built-in predicate kinds; `undecided` can only arise for custom
/// predicates whose search budget is exhausted.
Tri loc_zero(const Instance& inst, const SubcategoryPredicate& d, const Mor& f);

Tri fractions_equal(const Instance& inst, const SubcategoryPredicate& d, const Fraction& a,
                    const Fraction& b);

/// Loc(f) invertible: the cone of f lies in the thick closure of d.
bool loc_is_iso(const Instance& inst, const Mor& f, const SubcategoryPredicate& d);

/// x becomes a zero object in C/D: the zero endomorphism localizes to an
/// isomorphism. Extensionally equal to thick_closure_member.
bool kernel_of_loc(const Instance& inst, const ObjectRef& x, const SubcategoryPredicate& d);

/// The thick triangulated subcategory generated by the cones of the given
/// morphisms. Exact classification on vect instances; elsewhere a budgeted
/// saturation that throws SaturationBudgetExceeded when it overflows.
SubcategoryPredicate d_from_morphism_class(const Instance& inst, const std::vector<Mor>& ws,
                                           int budget = 64);

// ---------------------------------------------------------------------------
// the localized triangulation

struct HomologicalProbe {
    std::string name;
    // matrix of the functor on a morphism (in chosen bases); invertibility
    // of these matrices on Iso(d) witnesses factoring through the quotient
    std::function<ExactMatrix(const Mor&)> action;
};

struct LocReport {
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    CheckResult& check(const std::string& id);
};

struct LocOptions {
    std::uint64_t seed = 1;
    int samples = 30;
    SampleBudget budget;
    std::vector<HomologicalProbe> probes;
};

/// Rebuilds the triangulated-category checks inside the fraction calculus:
/// L0/L1, fraction-equality congruence, images of triangles, rotation,
/// vanishing, the composition axiom on pairs lifted from the base, and the
/// factoring of homological probes that vanish on d.
LocReport verify_localized_triangulation(const Instance& inst, const SubcategoryPredicate& d,
                                         const LocOptions& opts);

}  // namespace tricat

#endif
