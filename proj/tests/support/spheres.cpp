#include "spheres.hpp"

#include "eqeuler/builtin.hpp"

namespace eqeuler::testsupport {

RepPiece piece_trivial() { return trivial_line_piece(); }
RepPiece piece_sign_s3() { return sign_line_piece_s3(); }
RepPiece piece_hexagon_s3() { return hexagon_piece_s3(); }

GComplex s3_sphere3() { return builtin_s3_sphere3(); }
GComplex s3_sphere5() { return builtin_s3_sphere5(); }

}  // namespace eqeuler::testsupport
