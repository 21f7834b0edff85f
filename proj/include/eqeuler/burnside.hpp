#ifndef EQEULER_BURNSIDE_HPP
#define EQEULER_BURNSIDE_HPP

#include "eqeuler/rep_ring.hpp"

namespace eqeuler {

// Element of the Burnside ring A(G): integer coefficients over the basis
// [G/H], (H) running through the subgroup class table order.
struct BurnsideElement {
    IntVec coeffs;

    bool is_zero() const;
    bool operator==(const BurnsideElement& o) const = default;
};

// Square integer matrix over consub(G): entry(H, K) = |(G/H)^K|, rows (H) and
// columns (K) in class-table order. Lower triangular with diagonal |WH|.
struct TableOfMarks {
    IntMat entries;
};

TableOfMarks table_of_marks(const FiniteGroup& g, const SubgroupClassTable& classes);

// Entry at (H) is sum_K a_K |(G/K)^H| / |WH|.
RatVec marks_hom(const FiniteGroup& g, const SubgroupClassTable& classes,
                 const TableOfMarks& marks, const BurnsideElement& a);

// j1: A(G) -> R_F(G), [G/H] -> class of F[G/H]. The R case is the map of
// record; the Q variant feeds the comparison square.
RepRingElement j1(const RepUniverse& u, const SubgroupClassTable& classes,
                  const BurnsideElement& a, FieldTag f = FieldTag::R);

// Indices of the cyclic classes inside the subgroup class table (the target
// basis of the diagram's projection).
std::vector<int> cyclic_class_indices(const FiniteGroup& g,
                                      const SubgroupClassTable& classes);

// Vector over cyclic subgroup classes with entry tr_Q(l_h)/|WH| at (H),
// h a generator of H.
RatVec hs_q_of_rep(const RepUniverse& u, const SubgroupClassTable& classes,
                   const RepRingElement& v);

}  // namespace eqeuler

#endif
