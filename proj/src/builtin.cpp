#include "eqeuler/builtin.hpp"

namespace eqeuler {

FiniteGroup s3_group() {
    return generate_group(3, {Perm({1, 2, 0}), Perm({1, 0, 2})});
}

RepPiece trivial_line_piece() {
    RepPiece p;
    p.kind = RepPiece::Kind::TrivialLine;
    return p;
}

RepPiece sign_line_piece_s3() {
    RepPiece p;
    p.kind = RepPiece::Kind::SignLine;
    p.signs = {1, -1};
    return p;
}

RepPiece hexagon_piece_s3() {
    // t rotates by two vertices, s reflects through the 0-3 axis.
    RepPiece p;
    p.kind = RepPiece::Kind::DihedralPlane;
    p.ngon = 6;
    p.vertex_images = {Perm({2, 3, 4, 5, 0, 1}), Perm({0, 5, 4, 3, 2, 1})};
    return p;
}

GComplex builtin_s3_sphere3() {
    return rep_sphere(s3_group(),
                      {trivial_line_piece(), sign_line_piece_s3(), hexagon_piece_s3()});
}

GComplex builtin_s3_sphere5() {
    return rep_sphere(s3_group(),
                      {trivial_line_piece(), trivial_line_piece(), trivial_line_piece(),
                       sign_line_piece_s3(), hexagon_piece_s3()});
}

}  // namespace eqeuler
