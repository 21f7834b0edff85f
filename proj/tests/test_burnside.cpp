#include "doctest.h"

#include "eqeuler/burnside.hpp"
#include "support/catalog.hpp"

using namespace eqeuler;
namespace ts = eqeuler::testsupport;

TEST_CASE("table of marks of the trivial group and of S3") {
    FiniteGroup t = ts::cyclic(1);
    auto tc = subgroup_classes(t);
    CHECK(table_of_marks(t, tc).entries == IntMat{{Int(1)}});

    FiniteGroup g = ts::symmetric3();
    auto classes = subgroup_classes(g);
    TableOfMarks m = table_of_marks(g, classes);
    // Classes in order: 1, L2, L3, S3.
    CHECK(m.entries[1][1] == 1);  // |(S3/L2)^{L2}| = 1
    CHECK(m.entries[2][2] == 2);  // |(S3/L3)^{L3}| = 2
    CHECK(m.entries[0][0] == 6);  // |(S3/1)^{1}| = 6
    // Column at K = {1} is [G:H].
    for (size_t hi = 0; hi < classes.classes.size(); ++hi)
        CHECK(m.entries[hi][0] == 6 / classes.classes[hi].rep.order());
}

TEST_CASE("marks_hom golden values confirmed by the normalizer oracle") {
    FiniteGroup g = ts::symmetric3();
    auto classes = subgroup_classes(g);
    TableOfMarks m = table_of_marks(g, classes);

    // Oracle: |WH| for classes (1, L2, L3, S3) is (6, 1, 2, 1).
    IntVec wh;
    for (const auto& cls : classes.classes)
        wh.push_back(weyl_group(g, cls.rep).group.order());
    CHECK(wh == IntVec{Int(6), Int(1), Int(2), Int(1)});

    // [G/G]: |(G/G)^H| = 1 always, so entries are 1/|WH| = (1/6, 1, 1/2, 1).
    BurnsideElement gg{IntVec{Int(0), Int(0), Int(0), Int(1)}};
    CHECK(marks_hom(g, classes, m, gg) == RatVec{Rat(1, 6), Rat(1), Rat(1, 2), Rat(1)});

    // [G/1]: free orbit, entry 1 at (1) and 0 elsewhere.
    BurnsideElement g1{IntVec{Int(1), Int(0), Int(0), Int(0)}};
    CHECK(marks_hom(g, classes, m, g1) == RatVec{Rat(1), Rat(0), Rat(0), Rat(0)});

    BurnsideElement zero{IntVec(4, Int(0))};
    CHECK(marks_hom(g, classes, m, zero) == RatVec(4, Rat(0)));
}

TEST_CASE("j1 on S3 basis elements") {
    FiniteGroup g = ts::symmetric3();
    RepUniverse u(g);
    auto classes = subgroup_classes(g);

    BurnsideElement l2{IntVec{Int(0), Int(1), Int(0), Int(0)}};
    RepRingElement jl2 = j1(u, classes, l2);
    // R + V: total degree 3, trivial multiplicity 1.
    CHECK(jl2.coeffs[u.ambient_theory()->trivial_irr(FieldTag::R)] == 1);
    Int total = 0;
    for (int i = 0; i < 3; ++i)
        total += jl2.coeffs[i] * u.ambient_theory()->real_irr[i].degree;
    CHECK(total == 3);

    BurnsideElement gg{IntVec{Int(0), Int(0), Int(0), Int(1)}};
    CHECK(j1(u, classes, gg) == trivial_element(*u.ambient_theory(), FieldTag::R));

    // [S3/1] -> regular = R + R^- + 2V.
    BurnsideElement g1{IntVec{Int(1), Int(0), Int(0), Int(0)}};
    RepRingElement reg = j1(u, classes, g1);
    IntVec sorted = reg.coeffs;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == IntVec{Int(1), Int(1), Int(2)});
}

TEST_CASE("hs_q_of_rep golden values") {
    FiniteGroup g = ts::symmetric3();
    RepUniverse u(g);
    auto classes = subgroup_classes(g);
    // Cyclic classes of S3: (1, L2, L3); |W1|=6, |WL2|=1, |WL3|=2.
    CHECK(cyclic_class_indices(g, classes) == std::vector<int>{0, 1, 2});
    RepRingElement triv = trivial_element(*u.ambient_theory(), FieldTag::Q);
    CHECK(hs_q_of_rep(u, classes, triv) == RatVec{Rat(1, 6), Rat(1), Rat(1, 2)});

    CHECK(hs_q_of_rep(u, classes, zero_element(*u.ambient_theory(), FieldTag::Q)) ==
          RatVec(3, Rat(0)));

    // Z/2 regular module: character (2, 0); Weyl group orders (2, 1).
    FiniteGroup z2 = ts::cyclic(2);
    RepUniverse u2(z2);
    auto classes2 = subgroup_classes(z2);
    BurnsideElement free2{IntVec{Int(1), Int(0)}};
    RepRingElement reg = j1(u2, classes2, free2, FieldTag::Q);
    CHECK(hs_q_of_rep(u2, classes2, reg) == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("the comparison square commutes and ranks match") {
    for (auto& [name, g] : ts::groups_of_order_at_most_12()) {
        CAPTURE(name);
        RepUniverse u(g);
        auto classes = subgroup_classes(g);
        TableOfMarks m = table_of_marks(g, classes);
        auto cyc = cyclic_class_indices(g, classes);
        int n = static_cast<int>(classes.classes.size());

        // hs_q_of_rep(j1_Q(a)) = pr(marks_hom(a)) on the basis.
        for (int b = 0; b < n; ++b) {
            BurnsideElement a{IntVec(n, Int(0))};
            a.coeffs[b] = 1;
            RatVec lhs = hs_q_of_rep(u, classes, j1(u, classes, a, FieldTag::Q));
            RatVec full = marks_hom(g, classes, m, a);
            RatVec rhs;
            for (int ci : cyc) rhs.push_back(full[ci]);
            CHECK(lhs == rhs);
        }

        // marks_hom is injective (triangular, nonzero diagonal);
        // rank of the j1 matrix over Q equals |con_Q(G)|.
        RatMat jmat;
        const RepTheory& gt = *u.ambient_theory();
        for (int b = 0; b < n; ++b) {
            BurnsideElement a{IntVec(n, Int(0))};
            a.coeffs[b] = 1;
            RepRingElement v = j1(u, classes, a);
            RatVec row;
            for (const Int& c : v.coeffs) row.push_back(Rat(c));
            jmat.push_back(std::move(row));
        }
        CHECK(rank_rat(jmat) == gt.fq.count());
        CHECK(static_cast<int>(cyc.size()) == gt.fq.count());
    }
}
