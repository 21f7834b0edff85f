#ifndef EQEULER_CATEGORY_HPP
#define EQEULER_CATEGORY_HPP

#include "eqeuler/complex.hpp"
#include "eqeuler/rep_ring.hpp"

namespace eqeuler {

// Object of the component category: a subgroup class representative H
// together with a component of X^H, carried by a concrete basepoint (the
// least fixed vertex of the representative component). Objects are exactly
// the UG basis items of the complex.
struct CatObject {
    int class_idx;      // into FixedData.classes
    int orbit;          // Weyl orbit of components
    int component;      // representative component (minimal index)
    int basepoint;      // least vertex of the representative component
};

// Reference to a possibly non-canonical object (any subgroup, any component):
// used for the alpha_F sources built from cyclic subgroups <g>.
struct ObjRef {
    Subgroup subgroup;
    std::vector<char> vfixed;       // fixed vertices of the subgroup
    std::vector<int> comp_of_vertex;
    int component;
    int basepoint;
};

struct MorSet {
    // Cosets gH (by minimal coset member) with g^{-1} K g <= H and
    // g * basepoint(x) in the source component.
    std::vector<int> cosets;
    std::vector<int> coset_rep_elem;  // minimal member of each listed coset
    // Orbit decomposition under the acting Weyl-type group (indices into
    // `cosets`), with the orbit stabilizer orders.
    std::vector<std::vector<int>> orbits;
    std::vector<int> stabilizer_order;

    int size() const { return static_cast<int>(cosets.size()); }
};

// The category of one complex: objects plus everything needed to enumerate
// morphisms.
struct ComponentCategory {
    const GComplex* complex = nullptr;
    const FixedData* fixed = nullptr;
    UGBasis basis;
    std::vector<CatObject> objects;
};

ComponentCategory component_category(const GComplex& x, const FixedData& fd);

// mor(y, x) with its WK_y-action (y = objects[yi], x = objects[xi]).
MorSet mor_set(const ComponentCategory& cat, int yi, int xi);

// Entry [x][y] = sum over WK_y-orbits of mor(y,x) of 1/|stabilizer|.
// Rationally invertible (asserted).
RatMat char_map_matrix(const ComponentCategory& cat);

// ch^G applied to an element of U^G(X).
RatVec char_map_apply(const RatMat& ch, const UGElement& u);

// One item of the alpha_F bijection: the source datum and the F-class of H
// it lands on.
struct AlphaItem {
    int fclass_of_g;   // index into con_F(G)
    int component;     // component of X^<g> (orbit representative)
    int mor_orbit;     // orbit index within mor(y(C), x)
    int target_hclass; // index into con_F(H_x)
};

// The explicit bijection of the alpha_F map for an object x; bijectivity
// onto con_F(H_x) is verified (BijectionFailure otherwise).
std::vector<AlphaItem> alpha_f(const RepUniverse& u, const ComponentCategory& cat,
                               int xi, FieldTag f);

}  // namespace eqeuler

#endif
