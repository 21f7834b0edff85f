#ifndef EQEULER_COMPLEX_HPP
#define EQEULER_COMPLEX_HPP

#include <memory>
#include <span>
#include <vector>

#include "eqeuler/burnside.hpp"
#include "eqeuler/group.hpp"

namespace eqeuler {

// Finite simplicial complex with a simplicial action of a finite group.
// Simplices are sorted vertex tuples, stored flat per dimension with stride
// dim+1 and ordered lexicographically; the action is stored as one vertex
// permutation per group element. Immutable after construction.
struct GComplex {
    std::shared_ptr<const FiniteGroup> group;
    int nverts = 0;
    std::vector<std::vector<int32_t>> simp;
    std::vector<Perm> action;

    int top_dim() const { return static_cast<int>(simp.size()) - 1; }
    long long count(int d) const {
        return d >= 0 && d <= top_dim()
                   ? static_cast<long long>(simp[d].size()) / (d + 1)
                   : 0;
    }
    long long total_simplices() const;
    const int32_t* tuple(int d, long long idx) const { return &simp[d][idx * (d + 1)]; }
    long long find(int d, std::span<const int32_t> t) const;  // -1 if absent
    // Image tuple under the action of group element g, sorted.
    void apply(int g, int d, long long idx, int32_t* out) const;
    Int euler_char() const;
};

// Per-dimension boolean mask over the simplices of a complex.
using SimplexMask = std::vector<std::vector<char>>;

Int euler_char_masked(const GComplex& x, const SimplexMask& mask);

// Builds the closure of the given faces and extends the generator images to
// an action of the whole group. Throws NotSimplicialAction if an image of a
// simplex is not a simplex, InvalidActionData if the images do not define a
// group action.
GComplex build_complex(const FiniteGroup& g, int nverts,
                       const std::vector<std::vector<int32_t>>& faces,
                       const std::vector<Perm>& generator_images);

// Admissible: any g fixing a simplex setwise fixes it vertexwise.
bool is_admissible(const GComplex& x);

GComplex barycentric_subdivide(const GComplex& x);

// Returns x unchanged when admissible, else its barycentric subdivision
// (one subdivision suffices; asserted).
GComplex validate_and_subdivide(GComplex x);

// Join: disjoint vertices, simplices s1 u s2 (empty allowed on one side),
// diagonal action. Both complexes must share the group.
GComplex join_complexes(const GComplex& a, const GComplex& b);

// Building blocks for unit spheres of real representations.
struct RepPiece {
    enum class Kind { TrivialLine, SignLine, RotationPlane, DihedralPlane };
    Kind kind = Kind::TrivialLine;
    std::vector<int> signs;          // SignLine: +1/-1 per generator
    int modulus = 1;                 // RotationPlane: image in Z/modulus
    std::vector<int> amounts;        // RotationPlane: rotation per generator
    int ngon = 0;                    // DihedralPlane: polygon size (2k)
    std::vector<Perm> vertex_images; // DihedralPlane: polygon action per generator
};

// Join of the unit-sphere complexes of the pieces, validated and subdivided
// if needed. Piece data must define homomorphisms (InvalidActionData).
GComplex rep_sphere(const FiniteGroup& g, const std::vector<RepPiece>& pieces);

struct Components {
    std::vector<int> comp_of_vertex;  // -1 for vertices outside the subcomplex
    int count = 0;
};

// Fixed data of one subgroup: X^H as a mask, with components.
struct SubgroupFixed {
    std::vector<char> vfixed;
    SimplexMask in_fixed;
    Components comps;
};

SubgroupFixed fixed_of_subgroup(const GComplex& x, const Subgroup& h);

// Fixed-point data per conjugacy class of subgroups: X^H, X^{>H}, pi_0(X^H),
// the Weyl action on components, orbits and per-component isotropy.
struct FixedData {
    struct ClassData {
        std::vector<char> vfixed;
        SimplexMask in_fixed;   // X^H
        SimplexMask in_bigger;  // X^{>H}
        Components comps;
        QuotientGroup weyl;
        std::vector<int> comp_image;          // flattened |WH| x count: w*comp
        std::vector<std::vector<int>> orbits;  // orbits of WH on components
        std::vector<int> orbit_of_comp;
        std::vector<std::vector<int>> comp_isotropy;  // WH elements fixing the comp

        int comp_img(int w, int c) const { return comp_image[w * comps.count + c]; }
    };
    SubgroupClassTable classes;
    std::vector<ClassData> per_class;
};

FixedData fixed_data(const GComplex& x);

// Basis of U^G(X): one item per (subgroup class, Weyl orbit of component),
// classes in table order, orbits by minimal component index.
struct UGBasis {
    struct Item {
        int class_idx;
        int orbit;
        int rep_component;  // minimal component index in the orbit
    };
    std::vector<Item> items;
};

UGBasis ug_basis(const FixedData& fd);

struct UGElement {
    IntVec coeffs;  // over UGBasis items

    bool is_zero() const;
    bool operator==(const UGElement& o) const = default;
};

// Coefficient at ((H), WH*C): alternating sum over dimensions of the number
// of WH_C-orbits of simplices of C not in X^{>H} (the Euler characteristic of
// the quotient pair; valid by admissibility).
UGElement universal_euler_char(const GComplex& x, const FixedData& fd,
                               const UGBasis& basis);

// Orbifold Euler characteristic of the masked subcomplex under the action of
// the listed vertex permutations (the element list of a finite group A):
// sum_p (-1)^p sum_{A-orbits} 1/|A_e|. Equality with chi/|A| is asserted.
Rat orbifold_euler_char_masked(const GComplex& x, const SimplexMask& mask,
                               const std::vector<Perm>& acting);
Rat orbifold_euler_char(const GComplex& x);  // full complex, full group action

// Restriction of the mask to one component of a fixed subcomplex.
SimplexMask component_mask(const GComplex& x, const SimplexMask& in_fixed,
                           const Components& comps, int comp);
SimplexMask mask_minus(const SimplexMask& a, const SimplexMask& b);

// c_*: U^G(X) -> A(G), coefficient at ((H), WH*C) lands on [G/H].
BurnsideElement pushforward_to_point(const FixedData& fd, const UGBasis& basis,
                                     const UGElement& u);

}  // namespace eqeuler

#endif
