#ifndef TRICAT_TOOLKIT_HPP
#define TRICAT_TOOLKIT_HPP

#include <string>
#include <vector>

#include "tricat/category.hpp"

namespace tricat {

/*
 * Generic constructions over any Instance: rotations, sign insertion,
 * filling morphisms, weak (co)kernels, split biproducts, direct sums of
 * triangles, the 3x3 grid, triples of composable morphisms, Puppe
 * sequences and braids. Everything here works purely through the contract
 * and is exercised against every concrete instance.
 */

// ---------------------------------------------------------------------------
// rotation and signs

/// (f, g, h) -> (g, h, -Σf)
CandidateTriangle rotate(const Instance& inst, const CandidateTriangle& t);
/// (f, g, h) -> (-Σ⁻¹h, f, g); exact inverse of rotate.
CandidateTriangle unrotate(const Instance& inst, const CandidateTriangle& t);

/// Negate the two morphisms at the given distinct positions in {0,1,2}.
CandidateTriangle insert_two_signs(const Instance& inst, const CandidateTriangle& t,
                                   int pos_a, int pos_b);

struct VanishingReport {
    bool gf_zero = false, hg_zero = false, sf_h_zero = false;
    bool pass() const { return gf_zero && hg_zero && sf_h_zero; }
    std::string describe() const;
};

/// g∘f = 0, h∘g = 0, (Σf)∘h = 0 for a triangle.
VanishingReport check_vanishing(const Instance& inst, const CandidateTriangle& t);

// ---------------------------------------------------------------------------
// morphism-level linear algebra over hom presentations

struct MorConstraint {
    // post ∘ φ ∘ pre == rhs, with absent factors treated as identities.
    std::optional<Mor> post;
    std::optional<Mor> pre;
    Mor rhs;
};

/// One φ : x -> y satisfying every constraint, or nullopt. Solved exactly
/// in the hom_group coordinates.
std::optional<Mor> solve_mor(const Instance& inst, const ObjectRef& x, const ObjectRef& y,
                             const std::vector<MorConstraint>& constraints);

/// Two-sided inverse of f under mor_equal, or nullopt.
std::optional<Mor> invert_mor(const Instance& inst, const Mor& f);

// ---------------------------------------------------------------------------
// octahedra with designated triangles, filling morphisms

/// Composition-axiom data for u, v with *designated* triangles t_u, t_v,
/// t_w over u, v and w = v∘u (rather than the instance's canonical cones).
/// Built by transporting the instance octahedron along the unique-up-to-iso
/// identifications of cones.
struct GeneralOctahedron {
    Mor k;        // cone(t_u) -> cone(t_w)
    Mor k_prime;  // cone(t_w) -> cone(t_v)
    Mor k_second; // cone(t_v) -> Σ cone(t_u)
};

GeneralOctahedron octahedron_general(const Instance& inst, const Mor& u, const Mor& v,
                                     const CandidateTriangle& t_u, const CandidateTriangle& t_v,
                                     const CandidateTriangle& t_w);

/// An isomorphism z(from) -> z(to) filling (id, id, ·) between two
/// triangles over the same first morphism. Exists and is invertible by
/// cone uniqueness; computed by an exact hom-space solve.
Mor cone_transport(const Instance& inst, const CandidateTriangle& from,
                   const CandidateTriangle& to);

/// The filling morphism m : z1 -> z2 for the square k∘f1 = f2∘j between
/// triangles t1, t2, routed through the two easy cases factored over the
/// cone of k∘f1. Throws PreconditionViolated when the square does not
/// commute.
Mor filling_morphism(const Instance& inst, const CandidateTriangle& t1,
                     const CandidateTriangle& t2, const Mor& j, const Mor& k);

// ---------------------------------------------------------------------------
// consequences of the axioms

/// f invertible iff its cone object is isomorphic to zero.
bool iso_via_cone(const Instance& inst, const Mor& f);

/// Extension of h along the cone inclusion of t = (f, i_f, p_f), given
/// h∘f = 0: returns e with e∘i_f = h.
Mor weak_cokernel_extend(const Instance& inst, const CandidateTriangle& t, const Mor& h);

/// Lift of g along the desuspended cone projection, given f∘g = 0:
/// returns l : W -> Σ⁻¹z with (Σ⁻¹p_f)∘l = g.
Mor weak_kernel_lift(const Instance& inst, const CandidateTriangle& t, const Mor& g);

/// For g∘f = id: Y splits as source(f) (+) cone(f), with the witness built
/// from the octahedron over (f, g).
BiproductWitness split_biproduct(const Instance& inst, const Mor& f, const Mor& g);

/// Componentwise direct sum of two triangles.
CandidateTriangle sum_triangles(const Instance& inst, const CandidateTriangle& t1,
                                const CandidateTriangle& t2);

// ---------------------------------------------------------------------------
// Puppe sequences and braids

struct PuppeSequence {
    CandidateTriangle base;
    int left_extent = 0;   // morphisms prepended before f
    int right_extent = 0;  // morphisms appended after h
    // morphisms[left_extent + i] is the degree-i entry; entry k satisfies
    // entry(k+3) = Σ entry(k), with entry(0..2) = (f, g, h).
    std::vector<Mor> morphisms;

    const Mor& entry(int k) const { return morphisms.at(static_cast<size_t>(k + left_extent)); }
};

PuppeSequence puppe(const Instance& inst, const CandidateTriangle& t, int n_left, int n_right);

/// Consecutive composites of the sequence vanish.
bool puppe_composites_vanish(const Instance& inst, const PuppeSequence& p, std::string* why = nullptr);

struct BraidDiagram {
    OctahedronWitness w;
    // the four strands: triangles over f, g, gf and (k, k', k'')
    CandidateTriangle strand_f, strand_g, strand_gf, strand_k;
};

/// Assembles the braid of a composition and checks all crossings commute.
BraidDiagram braid(const Instance& inst, const Mor& f, const Mor& g);
bool braid_commutes(const Instance& inst, const BraidDiagram& b, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// hom-functor exactness

struct HomExactnessReport {
    int dim_wx = 0, dim_wy = 0, dim_wz = 0;
    int rank_f = 0, rank_g = 0;
    bool composite_zero = false;
    bool exact_middle = false;
    bool pass() const { return composite_zero && exact_middle; }
};

/// Matrix of postcomposition b -> w∘b between hom presentations.
ExactMatrix hom_compose_left(const Instance& inst, const Mor& w, const HomSpace& dom,
                             const HomSpace& cod);
/// Matrix of precomposition b -> b∘w.
ExactMatrix hom_compose_right(const Instance& inst, const HomSpace& dom, const Mor& w,
                              const HomSpace& cod);

/// Exactness of hom(w, X) -> hom(w, Y) -> hom(w, Z) for a triangle t,
/// decided by exact rank computation in the hom presentations.
HomExactnessReport hom_exactness(const Instance& inst, const ObjectRef& w,
                                 const CandidateTriangle& t);

// ---------------------------------------------------------------------------
// the 3x3 grid

/// Full grid of the square  right∘top = bottom∘left:
///
///        x11 --top--> x12          rows:    (top,  f', f'')
///         |            |                    (bottom, h', h'')
///       left         right                  (j,    j', j'')
///         v            v           columns: (left, g', g'')
///        x21 -bottom-> x22                  (right, k', k'')
///                                           (m,    m', m'')
/// All nine inner squares commute except the bottom-right corner, which
/// anticommutes.
struct GridCompletion {
    Mor top, left, right, bottom;
    CandidateTriangle row1, row2, row3;
    CandidateTriangle col1, col2, col3;
};

GridCompletion three_by_three(const Instance& inst, const Mor& top, const Mor& left,
                              const Mor& right, const Mor& bottom);

struct GridReport {
    std::vector<std::string> failed;  // ids of failed squares / triangle checks
    int squares_checked = 0;
    bool anticommutes = false;
    bool pass() const { return failed.empty() && anticommutes; }
};

GridReport validate_grid(const Instance& inst, const GridCompletion& gc);

// ---------------------------------------------------------------------------
// triples of composable morphisms

struct TripleConeData {
    Mor alpha;  // cone(f)  -> cone(gf)
    Mor beta;   // cone(gf) -> cone(hgf)
    CandidateTriangle triangle;  // cone(f) -> cone(hgf) -> cone(hg) -> Σ cone(f)
};

/// For composable f, g, h: the triangle relating the cones of f, hgf and
/// hg, whose first morphism factors as beta∘alpha.
TripleConeData triple_composition(const Instance& inst, const Mor& f, const Mor& g, const Mor& h);

}  // namespace tricat

#endif
