#ifndef EQEULER_BUILTIN_HPP
#define EQEULER_BUILTIN_HPP

#include "eqeuler/complex.hpp"

namespace eqeuler {

// The symmetric group on three letters with generators t = (0 1 2),
// s = (0 1); the realization used by the built-in spheres.
FiniteGroup s3_group();

RepPiece trivial_line_piece();
RepPiece sign_line_piece_s3();     // t -> +1, s -> -1
RepPiece hexagon_piece_s3();       // the 2-dim irreducible V on a hexagon

// S(R + R^- + V): the 3-sphere whose Euler class has order two.
GComplex builtin_s3_sphere3();
// S(R^3 + R^- + V): the 5-sphere with vanishing class and nonzero chi_s.
GComplex builtin_s3_sphere5();

}  // namespace eqeuler

#endif
