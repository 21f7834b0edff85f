#ifndef EQEULER_GROUP_HPP
#define EQEULER_GROUP_HPP

#include <string>
#include <vector>

#include "eqeuler/perm.hpp"

namespace eqeuler {

inline constexpr int kDefaultOrderCap = 200;

enum class FieldTag { Q, R, C };

const char* field_name(FieldTag f);
FieldTag field_from_string(const std::string& s);

// Finite permutation group with full multiplication table.
//
// Element 0 is always the identity. Groups built by generate_group list
// elements breadth-first over generator words (lexicographic within a
// length); groups derived from subgroups or quotients document their own
// deterministic order. All tables are immutable after construction.
struct FiniteGroup {
    int degree = 0;
    std::vector<Perm> elements;
    std::vector<std::vector<int>> mult;  // mult[a][b] = index of a*b
    std::vector<int> inv;
    std::vector<int> generators;                // element indices of the input generators
    std::vector<std::pair<int, int>> word;      // word[i] = (parent element, generator slot),
                                                // (-1,-1) for the identity; BFS spanning data

    int order() const { return static_cast<int>(elements.size()); }
    int compose(int a, int b) const { return mult[a][b]; }
    // conj(g, h) = g h g^{-1}
    int conj(int g, int h) const { return mult[mult[g][h]][inv[g]]; }
    int power(int g, long long k) const;
    int element_order(int g) const;
    int exponent() const;
    bool is_abelian() const;
};

FiniteGroup generate_group(int degree, const std::vector<Perm>& gens,
                           int cap = kDefaultOrderCap);

// Group from an explicit closed list of permutations. `elems[0]` must be the
// identity. The listed order is kept (it must be deterministic at the caller).
FiniteGroup group_from_elements(int degree, std::vector<Perm> elems,
                                std::vector<int> generator_indices = {});

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;  // sorted element indices, always containing 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup cyclic_subgroup(const FiniteGroup& g, int elem);
Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed);
Subgroup conjugate_subgroup(const Subgroup& h, int g);

// Every subgroup, sorted by (order, lexicographic member list).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

struct SubgroupClassTable {
    struct ConjClass {
        Subgroup rep;                    // minimal member under (order, lex)
        std::vector<int> subgroup_idxs;  // indices into `subgroups`
    };
    std::vector<Subgroup> subgroups;  // same order as all_subgroups
    std::vector<ConjClass> classes;   // sorted by (order, rep lex); {1} first, G last
    std::vector<int> class_of;        // subgroup index -> class index

    int class_of_subgroup(const Subgroup& h) const;
};

SubgroupClassTable subgroup_classes(const FiniteGroup& g);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

// Quotient num/den realized as a permutation group acting on cosets by left
// translation. Quotient element 0 is the coset of the identity; cosets are
// ordered by minimal member. `coset_rep[i]` is the minimal parent element in
// coset i (the section), `coset_of` maps members of num to their coset.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> coset_rep;
    std::vector<int> coset_of;  // indexed by parent element; -1 outside num
};

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& num,
                             const Subgroup& den);
QuotientGroup weyl_group(const FiniteGroup& g, const Subgroup& h);

// F-conjugacy on elements. C: ordinary conjugacy. R: additionally identifies
// g with g^{-1}. Q: identifies elements generating conjugate cyclic subgroups.
struct FClassPartition {
    FieldTag tag = FieldTag::C;
    std::vector<std::vector<int>> classes;  // sorted members, classes ordered by min member
    std::vector<int> class_of;
    std::vector<int> rep;  // minimal member per class

    int count() const { return static_cast<int>(classes.size()); }
};

FClassPartition f_conjugacy_classes(const FiniteGroup& g, FieldTag f);

// C_Q(g) = {g' : g'^{-1} g g' in <g>}, C_R(g) = {g' : g'^{-1} g g' in {g, g^{-1}}},
// C_C(g) = ordinary centralizer.
Subgroup centralizer_f(const FiniteGroup& g, int elem, FieldTag f);
// Z_F(g) = C_F(g)/<g>.
QuotientGroup z_f(const FiniteGroup& g, int elem, FieldTag f);

// Subgroup realized as a standalone group: elements in parent-index order
// (identity first), permutations unchanged.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<int> to_parent;  // subgroup element index -> parent element index
};

SubgroupGroup as_group(const Subgroup& h);

}  // namespace eqeuler

#endif
