#ifndef EQEULER_BREDON_HPP
#define EQEULER_BREDON_HPP

#include <string>

#include "eqeuler/category.hpp"
#include "eqeuler/snf.hpp"

namespace eqeuler {

// Finitely generated abelian group presented as Z^ngen modulo the row lattice
// of a relation matrix, with Smith normal form coordinates.
struct FinAbPresentation {
    int ngen = 0;
    IntMat relations;
    SmithForm snf;
    IntMat v_inverse;  // integer inverse of snf.v

    // Coordinates in the SNF basis: torsion entries reduced mod the factor.
    IntVec normal_form(const IntVec& coords) const;
    // Order of the class; Int(0) encodes infinite order.
    Int order_of(const IntVec& coords) const;
    bool is_zero_class(const IntVec& coords) const;
    bool in_relation_lattice(const IntVec& v) const;
    int free_rank() const { return snf.free_rank(); }
    IntVec torsion_factors() const;  // invariant factors > 1
    // Image in Q tensor: the free SNF coordinates.
    RatVec rationalize(const IntVec& coords) const;
    RatVec rationalize(const RatVec& coords) const;
    // Ambient coordinates of the k-th rational basis vector.
    RatVec free_basis_ambient(int k) const;
};

FinAbPresentation presentation_from_relations(int ngen, IntMat relations);

// H_0^{Or(G)}(X; R_F) as the colimit presentation over the component
// category: generators are the F-irreducible bases of R_F(H_x) per object,
// one relation per (morphism, irreducible) pair.
struct H0Presentation {
    FieldTag tag = FieldTag::Q;
    std::vector<int> offset;  // generator offset per object
    std::vector<RepTheoryPtr> theories;
    FinAbPresentation pres;

    int ngen() const { return pres.ngen; }
};

H0Presentation h0_presentation(const RepUniverse& u, const ComponentCategory& cat,
                               FieldTag f);

// Element of H_0 carried by explicit generator coordinates.
struct H0Class {
    IntVec coords;
};

// e1: U^G(X) -> H_0(X; R_Q), [x] -> s_x([Q]).
H0Class e1(const H0Presentation& pq, const UGElement& u);

// e2: H_0(X; R_Q) -> H_0(X; R_R) via change of fields, generator-wise.
// Building the map verifies well-definedness on all relations
// (RelationMismatch).
struct E2Map {
    IntMat matrix;  // ngen_q x ngen_r
};
E2Map build_e2(const H0Presentation& pq, const H0Presentation& pr);
H0Class apply_e2(const E2Map& m, const H0Class& c);
H0Class e2(const H0Presentation& pq, const H0Presentation& pr, const H0Class& c);

// Int(0) encodes infinite order.
Int element_order(const H0Presentation& p, const H0Class& c);

// c_*: H_0(X; R_F) -> H_0(pt; R_F) = R_F(G) by induction to G.
RepRingElement c_star_to_rep(const RepUniverse& u, const H0Presentation& p,
                             const H0Class& c);

// Pushforward along an equivariant simplicial vertex map X -> Y
// (NotEquivariant / NotSimplicialAction on bad maps).
H0Class pushforward(const RepUniverse& u, const ComponentCategory& catx,
                    const H0Presentation& px, const ComponentCategory& caty,
                    const H0Presentation& py, const std::vector<int32_t>& vertex_map,
                    const H0Class& c);

// Indices (into cat.objects) of the objects with cyclic subgroup.
std::vector<int> cyclic_object_indices(const ComponentCategory& cat);

// gamma_Q: free Q-vector space on the cyclic objects -> Q tensor H_0(X; R_Q),
// the composite beta o HS^{-1} o alpha o D. Columns follow
// cyclic_object_indices; invertibility asserted (SingularMatrix).
RatMat gamma_q(const RepUniverse& u, const ComponentCategory& cat,
               const H0Presentation& pq);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// Exact whole-diagram verification:
//  (a) gamma_Q o pr o ch = 1 tensor e1 on Q tensor U^G(X)
//  (b) rational injectivity of e2
//  (c) c_* e2 e1 = j1 c_* on the U^G basis
//  (d) ch(chi^G)_[y] = orbifold Euler characteristic of X^K(y)
//  (e) Lefschetz: char(j1 c_* chi^G)(g) = chi(X^<g>) for every g.
// Mathematical mismatches are reported, never thrown.
VerifyReport verify_suite(const RepUniverse& u, const GComplex& x, const FixedData& fd,
                          const ComponentCategory& cat, const H0Presentation& pq,
                          const H0Presentation& pr);

}  // namespace eqeuler

#endif
