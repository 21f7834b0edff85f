#ifndef EQEULER_REP_RING_HPP
#define EQEULER_REP_RING_HPP

#include <map>
#include <memory>
#include <vector>

#include "eqeuler/char_table.hpp"

namespace eqeuler {

// All representation-theoretic data for one group, computed once. The tables
// reference the owned group, so RepTheory is shared by pointer and never
// copied.
struct RepTheory {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<int> to_ambient;  // element -> element of the ambient group (sorted)
    CharTableC table;
    std::vector<RealIrred> real_irr;
    std::vector<RatIrred> rat_irr;
    std::vector<std::vector<Cyclotomic>> rat_irr_values;  // rat_irr as cyclotomics
    // Eigenvalue-multiplicity vectors (power basis over zeta_e) for the real
    // and rational bases; the complex case is table.digits. These drive the
    // reduction-free inner products used by decompose.
    std::vector<std::vector<std::vector<int32_t>>> digits_r, digits_q;
    FClassPartition fq, fr;  // the C partition is table.classes

    int order() const { return group->order(); }
    int irr_count(FieldTag f) const;
    const FClassPartition& fclasses(FieldTag f) const;
    int index_of_ambient(int ambient_elem) const;
    bool contains_ambient(int ambient_elem) const;

    // F-character value of basis irreducible i at conjugacy class c, at the
    // table's conductor.
    Cyclotomic irr_value(FieldTag f, int i, int c) const;
    const std::vector<std::vector<int32_t>>& irr_digits(FieldTag f, int i) const;
    Int irr_degree(FieldTag f, int i) const;
    int trivial_irr(FieldTag f) const;
};

using RepTheoryPtr = std::shared_ptr<const RepTheory>;

RepTheoryPtr rep_theory(const FiniteGroup& g, SchurPolicy policy = {});
// For a subgroup of an ambient group: elements keep their ambient indices via
// to_ambient, so cross-subgroup maps (induction, restriction) are index-safe.
RepTheoryPtr rep_theory_subgroup(const Subgroup& h, SchurPolicy policy = {});

struct RepRingElement;

// Cache of per-subgroup theories over one ambient group, with a memo for
// conjugated inductions (keyed by the actual map K -> H, so morphisms that
// induce identical maps are computed once).
class RepUniverse {
public:
    explicit RepUniverse(const FiniteGroup& g, SchurPolicy policy = {});

    const FiniteGroup& ambient() const { return *ambient_; }
    const RepTheoryPtr& ambient_theory() const { return ambient_theory_; }
    const RepTheoryPtr& theory_of(const Subgroup& h) const;

    // Same contract as induce_along, memoized.
    RepRingElement induce_cached(const RepTheoryPtr& kt, const RepTheoryPtr& ht,
                                 int conj_g, const RepRingElement& v) const;

private:
    std::shared_ptr<const FiniteGroup> ambient_;
    RepTheoryPtr ambient_theory_;
    SchurPolicy policy_;
    mutable std::map<std::vector<int>, RepTheoryPtr> cache_;
    using IndKey = std::tuple<const RepTheory*, const RepTheory*, std::vector<int>, int, int>;
    mutable std::map<IndKey, RepRingElement> induction_memo_;
};

// Element of R_F(H): integer coefficients over the deterministic
// F-irreducible basis (ordered by degree, then character lexicographic).
struct RepRingElement {
    FieldTag tag = FieldTag::R;
    IntVec coeffs;

    bool is_zero() const;
    RepRingElement& operator+=(const RepRingElement& o);
    RepRingElement operator-(const RepRingElement& o) const;
    RepRingElement operator*(const Int& s) const;
    bool operator==(const RepRingElement& o) const = default;
};

RepRingElement zero_element(const RepTheory& t, FieldTag f);
RepRingElement trivial_element(const RepTheory& t, FieldTag f);

// Virtual character of v on the conjugacy classes of t.group, at the table's
// conductor.
std::vector<Cyclotomic> character_of(const RepTheory& t, const RepRingElement& v);

// Decompose a class function (values on conjugacy classes, conductor any
// multiple or divisor-compatible value) in the F-irreducible basis. Throws
// DecompositionNotIntegral when the multiplicities are not integers (or
// negative with require_nonneg) or the combination fails to reproduce the
// input.
RepRingElement decompose(const RepTheory& t, FieldTag f,
                         const std::vector<Cyclotomic>& values,
                         bool require_nonneg = false);

// Induction along k -> conj_g^{-1} k conj_g, an injection K -> H between two
// subgroups of `ambient` (conj_g an ambient element with that property).
// Processed basis-wise so the non-negativity assertion applies to honest
// representations while virtual elements extend linearly.
RepRingElement induce_along(const FiniteGroup& ambient, const RepTheory& kt,
                            const RepTheory& ht, int conj_g, const RepRingElement& v);
RepRingElement induce(const FiniteGroup& ambient, const RepTheory& kt,
                      const RepTheory& ht, const RepRingElement& v);

RepRingElement restrict_to(const FiniteGroup& ambient, const RepTheory& ht,
                           const RepTheory& kt, const RepRingElement& v);

// R_Q(H) -> R_R(H): each rational irreducible decomposed as a real character.
RepRingElement change_fields_q_to_r(const RepTheory& t, const RepRingElement& v);

// Class of F[G/H] for H <= G: character g -> #fixed cosets.
RepRingElement perm_character(const FiniteGroup& ambient, const RepTheory& gt,
                              const Subgroup& h, FieldTag f);

// Class function with exact cyclotomic values indexed by con_F(H). Q-case
// values are rational; R and C cases may be irrational (still exact).
struct ClassFunction {
    FieldTag tag = FieldTag::Q;
    std::vector<Cyclotomic> values;

    bool operator==(const ClassFunction& o) const = default;
};

// Hattori-Stallings rank: value at (h)_F is |(h)_F|/|H| * tr_F(l_h).
// Constancy of tr on F-classes is asserted.
ClassFunction hs_rank(const RepTheory& t, const RepRingElement& v);

// Matrix of hs_rank over the F-irreducible basis (rows = irreducibles,
// columns = F-classes). Square; invertibility checked exactly.
std::vector<std::vector<Cyclotomic>> hs_matrix(const RepTheory& t, FieldTag f);
bool hs_matrix_invertible(const RepTheory& t, FieldTag f);

// Inverse of the Q-case HS matrix (entries rational).
RatMat hs_matrix_q_inverse(const RepTheory& t);

Cyclotomic inner_product(const RepTheory& t, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b);

}  // namespace eqeuler

#endif
