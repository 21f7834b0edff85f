#ifndef EQEULER_SNF_HPP
#define EQEULER_SNF_HPP

#include "eqeuler/rational.hpp"

namespace eqeuler {

// Smith normal form D = U * A * V with U, V unimodular and D diagonal with
// d1 | d2 | ... | dr, di > 0, zeros elsewhere. Transforms are verified by
// multiplication before returning.
struct SmithForm {
    IntMat u;             // rows x rows
    IntMat v;             // cols x cols
    IntVec factors;       // the nonzero invariant factors d1 | d2 | ...
    int rows = 0;
    int cols = 0;

    int rank() const { return static_cast<int>(factors.size()); }
    int free_rank() const { return cols - rank(); }
};

SmithForm smith_normal_form(const IntMat& a);

IntMat int_mat_mul(const IntMat& a, const IntMat& b);
IntVec int_vec_mat(const IntVec& v, const IntMat& m);  // row vector times matrix

}  // namespace eqeuler

#endif
