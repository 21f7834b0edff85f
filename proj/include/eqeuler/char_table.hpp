#ifndef EQEULER_CHAR_TABLE_HPP
#define EQEULER_CHAR_TABLE_HPP

#include <vector>

#include "eqeuler/cyclotomic.hpp"
#include "eqeuler/group.hpp"

namespace eqeuler {

// Complete table of irreducible complex characters with exact cyclotomic
// values. Characters are found by simultaneous splitting of the class-sum
// matrices over a finite field and lifted to Q(zeta_e), e the group exponent;
// the table is then verified against the exact orthogonality relations
// (InternalInconsistency on failure). Character order is deterministic:
// by degree, then lexicographic value vectors.
struct CharTableC {
    const FiniteGroup* group = nullptr;
    FClassPartition classes;  // ordinary conjugacy classes
    int conductor = 1;        // exponent of the group
    std::vector<int> inverse_class;

    // digits[i][c][t] = multiplicity of zeta_e^t among the eigenvalues of
    // rho_i(rep_c); values[i][c] is the reduced cyclotomic form.
    std::vector<std::vector<std::vector<int32_t>>> digits;
    std::vector<std::vector<Cyclotomic>> values;
    std::vector<Int> degrees;
    int trivial_index = -1;

    int num_chars() const { return static_cast<int>(values.size()); }
    int class_of(int elem) const { return classes.class_of[elem]; }
    const Cyclotomic& value_at_elem(int chi, int elem) const {
        return values[chi][class_of(elem)];
    }
};

CharTableC char_table_complex(const FiniteGroup& g);

// Frobenius-Schur indicator (1/|G|) sum chi(g^2), in {-1, 0, 1}.
int fs_indicator(const CharTableC& t, int chi);

// Real irreducible = an FS-driven combination of a complex conjugation orbit:
// type R: chi itself; type C: chi + conj(chi); type H: 2*chi.
struct RealIrred {
    char type = 'R';                     // 'R', 'C' or 'H'
    std::vector<int> constituents;       // indices into the complex table
    std::vector<Cyclotomic> values;      // on ordinary conjugacy classes
    Int degree;
};

std::vector<RealIrred> real_irreducibles(const CharTableC& t);

// Rational irreducible = schur_index * (Galois orbit sum).
struct RatIrred {
    int schur_index = 1;
    std::vector<int> orbit;   // indices into the complex table
    std::vector<Rat> values;  // rational values on ordinary conjugacy classes
    Int degree;
};

struct SchurPolicy {
    bool strict = false;
};

// The built-in Schur index rule: index 2 for quaternionic (FS = -1)
// characters, 1 otherwise. Correct for every group of order <= 31, for
// abelian groups and for the dicyclic/generalized-quaternion families;
// schur_rule_certain reports whether a group falls in that range. With
// policy.strict set, an uncertain group raises SchurIndexUnknown.
bool schur_rule_certain(const FiniteGroup& g);

std::vector<RatIrred> rational_irreducibles(const CharTableC& t,
                                            const SchurPolicy& policy = {});

}  // namespace eqeuler

#endif
