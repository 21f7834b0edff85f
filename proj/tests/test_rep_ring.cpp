#include "doctest.h"

#include <random>

#include "eqeuler/errors.hpp"
#include "eqeuler/rep_ring.hpp"
#include "support/catalog.hpp"

using namespace eqeuler;
namespace ts = eqeuler::testsupport;

namespace {

// Coefficient of the irreducible whose values match `vals` exactly.
int irr_index_by_values(const RepTheory& t, FieldTag f, const std::vector<Rat>& vals) {
    for (int i = 0; i < t.irr_count(f); ++i) {
        bool ok = true;
        for (size_t c = 0; c < vals.size(); ++c) {
            Cyclotomic v = t.irr_value(f, i, static_cast<int>(c));
            if (!v.is_rational() || v.rational_value() != vals[c]) ok = false;
        }
        if (ok) return i;
    }
    return -1;
}

}  // namespace

TEST_CASE("S3 real basis and induction formulas") {
    RepUniverse u(ts::symmetric3());
    const RepTheory& gt = *u.ambient_theory();
    REQUIRE(gt.irr_count(FieldTag::R) == 3);

    // Conjugacy class order in S3: {e}, {3-cycles}, {transpositions}.
    int i_triv = irr_index_by_values(gt, FieldTag::R, {Rat(1), Rat(1), Rat(1)});
    int i_sign = irr_index_by_values(gt, FieldTag::R, {Rat(1), Rat(1), Rat(-1)});
    int i_v = irr_index_by_values(gt, FieldTag::R, {Rat(2), Rat(-1), Rat(0)});
    REQUIRE(i_triv >= 0);
    REQUIRE(i_sign >= 0);
    REQUIRE(i_v >= 0);
    CHECK(gt.trivial_irr(FieldTag::R) == i_triv);

    auto classes = subgroup_classes(u.ambient());
    const RepTheoryPtr& l2 = u.theory_of(classes.classes[1].rep);
    const RepTheoryPtr& l3 = u.theory_of(classes.classes[2].rep);

    // ind_{L2}^{S3} R = R + V; ind_{L2}^{S3} R^- = R^- + V.
    RepRingElement r2 = induce(u.ambient(), *l2, gt, trivial_element(*l2, FieldTag::R));
    CHECK(r2.coeffs[i_triv] == 1);
    CHECK(r2.coeffs[i_sign] == 0);
    CHECK(r2.coeffs[i_v] == 1);
    RepRingElement sgn2 = zero_element(*l2, FieldTag::R);
    sgn2.coeffs[1 - l2->trivial_irr(FieldTag::R)] = 1;
    RepRingElement rs = induce(u.ambient(), *l2, gt, sgn2);
    CHECK(rs.coeffs[i_triv] == 0);
    CHECK(rs.coeffs[i_sign] == 1);
    CHECK(rs.coeffs[i_v] == 1);

    // ind_{L3}^{S3} R = R + R^-; ind_{L3}^{S3} W = 2V.
    RepRingElement r3 = induce(u.ambient(), *l3, gt, trivial_element(*l3, FieldTag::R));
    CHECK(r3.coeffs[i_triv] == 1);
    CHECK(r3.coeffs[i_sign] == 1);
    CHECK(r3.coeffs[i_v] == 0);
    RepRingElement w3 = zero_element(*l3, FieldTag::R);
    for (int i = 0; i < 2; ++i)
        if (i != l3->trivial_irr(FieldTag::R)) w3.coeffs[i] = 1;
    RepRingElement rw = induce(u.ambient(), *l3, gt, w3);
    CHECK(rw.coeffs[i_triv] == 0);
    CHECK(rw.coeffs[i_sign] == 0);
    CHECK(rw.coeffs[i_v] == 2);

    // Induction from H = G is the identity.
    RepRingElement any = zero_element(gt, FieldTag::R);
    any.coeffs[i_v] = 2;
    any.coeffs[i_sign] = 1;
    CHECK(induce(u.ambient(), gt, gt, any) == any);
}

TEST_CASE("perm characters of S3") {
    RepUniverse u(ts::symmetric3());
    const RepTheory& gt = *u.ambient_theory();
    auto classes = subgroup_classes(u.ambient());
    int i_triv = gt.trivial_irr(FieldTag::R);
    int i_sign = irr_index_by_values(gt, FieldTag::R, {Rat(1), Rat(1), Rat(-1)});
    int i_v = irr_index_by_values(gt, FieldTag::R, {Rat(2), Rat(-1), Rat(0)});

    // R[S3/L2] = R + V  (fixed-coset counts (3,0,1)).
    RepRingElement p2 = perm_character(u.ambient(), gt, classes.classes[1].rep, FieldTag::R);
    CHECK(p2.coeffs[i_triv] == 1);
    CHECK(p2.coeffs[i_sign] == 0);
    CHECK(p2.coeffs[i_v] == 1);

    // R[S3] = R + R^- + 2V.
    RepRingElement preg =
        perm_character(u.ambient(), gt, classes.classes[0].rep, FieldTag::R);
    CHECK(preg.coeffs[i_triv] == 1);
    CHECK(preg.coeffs[i_sign] == 1);
    CHECK(preg.coeffs[i_v] == 2);

    // R[S3/S3] = R.
    RepRingElement pt = perm_character(u.ambient(), gt, classes.classes[3].rep, FieldTag::R);
    CHECK(pt.coeffs[i_triv] == 1);
    CHECK(pt.coeffs[i_sign] == 0);
    CHECK(pt.coeffs[i_v] == 0);
}

TEST_CASE("restriction and Frobenius reciprocity spot check") {
    RepUniverse u(ts::symmetric3());
    const RepTheory& gt = *u.ambient_theory();
    auto classes = subgroup_classes(u.ambient());
    const RepTheoryPtr& l2 = u.theory_of(classes.classes[1].rep);

    int i_v = irr_index_by_values(gt, FieldTag::R, {Rat(2), Rat(-1), Rat(0)});
    RepRingElement v = zero_element(gt, FieldTag::R);
    v.coeffs[i_v] = 1;
    // res_{L2} V = R + R^-.
    RepRingElement rv = restrict_to(u.ambient(), gt, *l2, v);
    CHECK(rv.coeffs == IntVec{Int(1), Int(1)});
}

TEST_CASE("change of fields") {
    RepUniverse u3(ts::cyclic(3));
    const RepTheory& t3 = *u3.ambient_theory();
    // Trivial [Q] -> [R].
    RepRingElement triv = trivial_element(t3, FieldTag::Q);
    RepRingElement tr = change_fields_q_to_r(t3, triv);
    CHECK(tr == trivial_element(t3, FieldTag::R));
    // The degree-2 rational irreducible of Z/3 maps to the 2-dim real rotation
    // irreducible.
    RepRingElement deg2 = zero_element(t3, FieldTag::Q);
    for (int i = 0; i < 2; ++i)
        if (i != t3.trivial_irr(FieldTag::Q)) deg2.coeffs[i] = 1;
    RepRingElement r2 = change_fields_q_to_r(t3, deg2);
    int found = -1;
    for (int i = 0; i < t3.irr_count(FieldTag::R); ++i)
        if (r2.coeffs[i] != 0) {
            CHECK(r2.coeffs[i] == 1);
            found = i;
        }
    REQUIRE(found >= 0);
    CHECK(t3.real_irr[found].degree == 2);
    CHECK(t3.real_irr[found].type == 'C');
}

TEST_CASE("hattori-stallings ranks") {
    // HS_{Q,S3}([Q]): 1/6 at {1}, 1/3 at 3-cycles, 1/2 at transpositions
    // (class order by minimal element).
    RepUniverse u(ts::symmetric3());
    const RepTheory& gt = *u.ambient_theory();
    ClassFunction f = hs_rank(gt, trivial_element(gt, FieldTag::Q));
    REQUIRE(f.values.size() == 3);
    CHECK(f.values[0].rational_value() == Rat(1, 6));
    CHECK(f.values[1].rational_value() == Rat(1, 3));
    CHECK(f.values[2].rational_value() == Rat(1, 2));

    // Trivial group.
    RepUniverse ut(ts::cyclic(1));
    ClassFunction ftriv = hs_rank(*ut.ambient_theory(), trivial_element(*ut.ambient_theory(), FieldTag::Q));
    CHECK(ftriv.values.size() == 1);
    CHECK(ftriv.values[0].rational_value() == Rat(1));

    // HS_{R,Z/2}([R^-]) = (1/2, -1/2).
    RepUniverse u2(ts::cyclic(2));
    const RepTheory& t2 = *u2.ambient_theory();
    RepRingElement sgn = zero_element(t2, FieldTag::R);
    sgn.coeffs[1 - t2.trivial_irr(FieldTag::R)] = 1;
    ClassFunction fs = hs_rank(t2, sgn);
    CHECK(fs.values[0].rational_value() == Rat(1, 2));
    CHECK(fs.values[1].rational_value() == Rat(-1, 2));
}

TEST_CASE("hs matrix invertibility and rank counts") {
    for (auto& [name, g] : ts::groups_of_order_at_most_12()) {
        CAPTURE(name);
        RepUniverse u(g);
        const RepTheory& t = *u.ambient_theory();
        CHECK(t.irr_count(FieldTag::R) == t.fr.count());
        CHECK(t.irr_count(FieldTag::Q) == t.fq.count());
        for (FieldTag f : {FieldTag::Q, FieldTag::R, FieldTag::C})
            CHECK(hs_matrix_invertible(t, f));
    }
}

TEST_CASE("frobenius reciprocity on random pairs") {
    std::mt19937 rng(7);
    auto groups = ts::groups_of_order_at_most_12();
    for (int trial = 0; trial < 12; ++trial) {
        auto& [name, g] = groups[rng() % groups.size()];
        CAPTURE(name);
        RepUniverse u(g);
        const RepTheory& gt = *u.ambient_theory();
        auto classes = subgroup_classes(u.ambient());
        const auto& cls = classes.classes[rng() % classes.classes.size()];
        const RepTheoryPtr& ht = u.theory_of(cls.rep);

        FieldTag f = std::array{FieldTag::Q, FieldTag::R, FieldTag::C}[rng() % 3];
        RepRingElement theta = zero_element(*ht, f);
        theta.coeffs[rng() % theta.coeffs.size()] = 1;
        RepRingElement psi = zero_element(gt, f);
        psi.coeffs[rng() % psi.coeffs.size()] = 1;

        auto ind_theta = character_of(gt, induce(u.ambient(), *ht, gt, theta));
        auto psi_chi = character_of(gt, psi);
        auto res_psi = character_of(*ht, restrict_to(u.ambient(), gt, *ht, psi));
        auto theta_chi = character_of(*ht, theta);
        CHECK(inner_product(gt, ind_theta, psi_chi) ==
              inner_product(*ht, theta_chi, res_psi).to_conductor(
                  std::lcm(gt.table.conductor, ht->table.conductor)) .to_conductor(
                  std::lcm(gt.table.conductor, ht->table.conductor)));
    }
}

TEST_CASE("hs_rank naturality under induction") {
    // HS(ind v) = pushforward of HS(v) along con_F(H) -> con_F(G).
    auto g = ts::symmetric3();
    RepUniverse u(g);
    const RepTheory& gt = *u.ambient_theory();
    auto classes = subgroup_classes(u.ambient());
    for (size_t ci = 0; ci < classes.classes.size(); ++ci) {
        const RepTheoryPtr& ht = u.theory_of(classes.classes[ci].rep);
        for (FieldTag f : {FieldTag::Q, FieldTag::R, FieldTag::C}) {
            for (int i = 0; i < ht->irr_count(f); ++i) {
                RepRingElement v = zero_element(*ht, f);
                v.coeffs[i] = 1;
                ClassFunction lhs = hs_rank(gt, induce(u.ambient(), *ht, gt, v));
                ClassFunction hs_v = hs_rank(*ht, v);
                // Push forward: F-class of h in H maps to the F-class of the
                // same ambient element in G.
                const FClassPartition& hp = ht->fclasses(f);
                const FClassPartition& gp = gt.fclasses(f);
                int m = std::lcm(ht->table.conductor, gt.table.conductor);
                std::vector<Cyclotomic> pushed(gp.count(), Cyclotomic(m));
                for (int hc = 0; hc < hp.count(); ++hc) {
                    int amb = ht->to_ambient[hp.rep[hc]];
                    pushed[gp.class_of[amb]] += hs_v.values[hc].to_conductor(m);
                }
                for (int gc = 0; gc < gp.count(); ++gc)
                    CHECK(lhs.values[gc].to_conductor(m) == pushed[gc]);
            }
        }
    }
}

TEST_CASE("decomposition failures raise DecompositionNotIntegral") {
    RepUniverse u(ts::cyclic(2));
    const RepTheory& t = *u.ambient_theory();
    std::vector<Cyclotomic> vals{Cyclotomic(2, Rat(1, 2)), Cyclotomic(2, Rat(1, 2))};
    CHECK_THROWS_AS(decompose(t, FieldTag::R, vals), EqError);
}
