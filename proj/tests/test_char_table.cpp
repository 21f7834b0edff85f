#include "doctest.h"

#include <algorithm>

#include "eqeuler/char_table.hpp"
#include "eqeuler/errors.hpp"

using namespace eqeuler;

namespace {

FiniteGroup s3() {
    return generate_group(3, {Perm({1, 2, 0}), Perm({1, 0, 2})});
}

FiniteGroup cyclic(int n) {
    std::vector<int32_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return generate_group(n, {Perm(img)});
}

// Q8 as permutations of {1,i,j,k,-1,-i,-j,-k} (indices 0..7): left
// multiplication by i and j.
FiniteGroup quaternion8() {
    Perm i({1, 4, 3, 6, 5, 0, 7, 2});
    Perm j({2, 7, 4, 1, 6, 3, 0, 5});
    return generate_group(8, {i, j});
}

FiniteGroup dihedral(int n) {  // order 2n, symmetries of the n-gon
    std::vector<int32_t> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        ref[i] = (n - i) % n;
    }
    return generate_group(n, {Perm(rot), Perm(ref)});
}

FiniteGroup a4() {
    return generate_group(4, {Perm({1, 0, 3, 2}), Perm({0, 2, 3, 1})});
}

}  // namespace

TEST_CASE("character table of the trivial group") {
    CharTableC t = char_table_complex(generate_group(1, {}));
    CHECK(t.num_chars() == 1);
    CHECK(t.degrees[0] == 1);
    CHECK(t.trivial_index == 0);
}

TEST_CASE("character table of S3") {
    FiniteGroup g = s3();
    CharTableC t = char_table_complex(g);
    REQUIRE(t.num_chars() == 3);
    CHECK(t.degrees == IntVec{Int(1), Int(1), Int(2)});

    // The 2-dim character has values (2, 0, -1) on (1, transposition, 3-cycle).
    // Class order: by minimal element; element 1 is the 3-cycle t, element 2
    // is a transposition in BFS order for generators {t=(012), s=(01)}.
    int two = 2;
    int cls_id = t.class_of(0);
    CHECK(t.values[two][cls_id].rational_value() == Rat(2));
    for (int x = 0; x < 6; ++x) {
        int ord = g.element_order(x);
        Rat want = ord == 1 ? Rat(2) : (ord == 2 ? Rat(0) : Rat(-1));
        CHECK(t.value_at_elem(two, x).rational_value() == want);
    }
}

TEST_CASE("character table of Z/3 has values in Q(zeta_3)") {
    CharTableC t = char_table_complex(cyclic(3));
    REQUIRE(t.num_chars() == 3);
    // Nontrivial linear characters send the generator to zeta_3 and zeta_3^2.
    std::vector<Cyclotomic> gen_values;
    for (int i = 0; i < 3; ++i) gen_values.push_back(t.value_at_elem(i, 1));
    CHECK(std::count(gen_values.begin(), gen_values.end(), Cyclotomic::zeta_pow(3, 1)) == 1);
    CHECK(std::count(gen_values.begin(), gen_values.end(), Cyclotomic::zeta_pow(3, 2)) == 1);
    CHECK(std::count(gen_values.begin(), gen_values.end(), Cyclotomic(3, Rat(1))) == 1);
}

TEST_CASE("frobenius-schur indicators") {
    FiniteGroup z3 = cyclic(3);
    CharTableC t3 = char_table_complex(z3);
    CHECK(fs_indicator(t3, t3.trivial_index) == 1);
    for (int i = 0; i < 3; ++i)
        if (i != t3.trivial_index) CHECK(fs_indicator(t3, i) == 0);

    FiniteGroup q8 = quaternion8();
    CharTableC tq = char_table_complex(q8);
    REQUIRE(tq.num_chars() == 5);
    CHECK(tq.degrees[4] == 2);
    CHECK(fs_indicator(tq, 4) == -1);

    CHECK_THROWS_AS(fs_indicator(tq, 99), EqError);
}

TEST_CASE("real irreducibles of S3, Z/5, Q8") {
    FiniteGroup gs3 = s3(), gz5 = cyclic(5), gq8 = quaternion8();
    CharTableC ts3 = char_table_complex(gs3);
    auto rs3 = real_irreducibles(ts3);
    REQUIRE(rs3.size() == 3);
    CHECK(rs3[0].degree == 1);
    CHECK(rs3[1].degree == 1);
    CHECK(rs3[2].degree == 2);
    for (const auto& ri : rs3) CHECK(ri.type == 'R');

    CharTableC tz5 = char_table_complex(gz5);
    auto rz5 = real_irreducibles(tz5);
    REQUIRE(rz5.size() == 3);
    CHECK(rz5[0].degree == 1);
    CHECK(rz5[1].degree == 2);
    CHECK(rz5[2].degree == 2);
    CHECK(rz5[1].type == 'C');

    CharTableC tq8 = char_table_complex(gq8);
    auto rq8 = real_irreducibles(tq8);
    REQUIRE(rq8.size() == 5);
    CHECK(rq8[4].degree == 4);  // 2 * quaternionic 2-dim
    CHECK(rq8[4].type == 'H');
}

TEST_CASE("rational irreducibles") {
    FiniteGroup gz3 = cyclic(3), gz5 = cyclic(5), gq8 = quaternion8();
    CharTableC tz3 = char_table_complex(gz3);
    auto qz3 = rational_irreducibles(tz3);
    REQUIRE(qz3.size() == 2);
    CHECK(qz3[0].degree == 1);
    CHECK(qz3[1].degree == 2);  // Galois sum of the two nontrivial linears
    CHECK(qz3[1].schur_index == 1);

    CharTableC tz5 = char_table_complex(gz5);
    auto qz5 = rational_irreducibles(tz5);
    REQUIRE(qz5.size() == 2);
    CHECK(qz5[1].degree == 4);

    CharTableC tq8 = char_table_complex(gq8);
    auto qq8 = rational_irreducibles(tq8);
    REQUIRE(qq8.size() == 5);
    CHECK(qq8[4].schur_index == 2);
    CHECK(qq8[4].degree == 4);  // 2 * (2-dim)
}

TEST_CASE("schur rule coverage predicate") {
    CHECK(schur_rule_certain(s3()));
    CHECK(schur_rule_certain(cyclic(100)));
    CHECK(schur_rule_certain(quaternion8()));
    CHECK(schur_rule_certain(dihedral(4)));  // order 8
    // D16 x C2 would be uncertain, but dihedral itself of order 32 is not
    // dicyclic: two involution classes.
    CHECK(!schur_rule_certain(dihedral(16)));
    SchurPolicy strict{true};
    FiniteGroup d16 = dihedral(16);
    CharTableC td16 = char_table_complex(d16);
    CHECK_THROWS_AS(rational_irreducibles(td16, strict), EqError);
}

TEST_CASE("tables for an assortment of groups verify internally") {
    // char_table_complex throws InternalInconsistency if orthogonality or
    // degree checks fail, so constructing is already a strong test.
    for (int n : {2, 4, 6, 7, 8, 9, 10, 12}) {
        FiniteGroup g = cyclic(n);
        (void)char_table_complex(g);
    }
    for (int n : {3, 4, 6}) {
        FiniteGroup g = dihedral(n);
        (void)char_table_complex(g);
    }
    FiniteGroup g1 = a4(), g2 = quaternion8();
    (void)char_table_complex(g1);
    (void)char_table_complex(g2);
}
