#include "eqeuler/burnside.hpp"

#include "eqeuler/errors.hpp"

namespace eqeuler {

bool BurnsideElement::is_zero() const {
    for (const Int& c : coeffs)
        if (c != 0) return false;
    return true;
}

namespace {

// |(G/H)^K| by a direct coset scan.
Int fixed_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[x] != -1) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : h.members) coset_of[g.mult[x][m]] = id;
    }
    Int fixed = 0;
    for (int rep : reps) {
        bool all = true;
        for (int m : k.members)
            if (coset_of[g.mult[m][rep]] != coset_of[rep]) {
                all = false;
                break;
            }
        if (all) ++fixed;
    }
    return fixed;
}

}  // namespace

TableOfMarks table_of_marks(const FiniteGroup& g, const SubgroupClassTable& classes) {
    int n = static_cast<int>(classes.classes.size());
    TableOfMarks t;
    t.entries.assign(n, IntVec(n, Int(0)));
    for (int hi = 0; hi < n; ++hi)
        for (int ki = 0; ki < n; ++ki)
            t.entries[hi][ki] =
                fixed_cosets(g, classes.classes[hi].rep, classes.classes[ki].rep);
    // Triangularity under the deterministic class order, diagonal = |WH|.
    for (int hi = 0; hi < n; ++hi) {
        for (int ki = hi + 1; ki < n; ++ki)
            icheck(t.entries[hi][ki] == 0, "table of marks not triangular");
        Int wh = weyl_group(g, classes.classes[hi].rep).group.order();
        icheck(t.entries[hi][hi] == wh, "table of marks diagonal != |WH|");
    }
    return t;
}

RatVec marks_hom(const FiniteGroup& g, const SubgroupClassTable& classes,
                 const TableOfMarks& marks, const BurnsideElement& a) {
    int n = static_cast<int>(classes.classes.size());
    icheck(static_cast<int>(a.coeffs.size()) == n, "Burnside element length mismatch");
    RatVec out(n, Rat(0));
    for (int hi = 0; hi < n; ++hi) {
        Int acc = 0;
        for (int ki = 0; ki < n; ++ki) acc += a.coeffs[ki] * marks.entries[ki][hi];
        out[hi] = Rat(acc, marks.entries[hi][hi]);  // divide by |WH|
    }
    return out;
}

RepRingElement j1(const RepUniverse& u, const SubgroupClassTable& classes,
                  const BurnsideElement& a, FieldTag f) {
    const RepTheory& gt = *u.ambient_theory();
    RepRingElement out = zero_element(gt, f);
    for (size_t ci = 0; ci < classes.classes.size(); ++ci) {
        if (a.coeffs[ci] == 0) continue;
        out += perm_character(u.ambient(), gt, classes.classes[ci].rep, f) * a.coeffs[ci];
    }
    return out;
}

std::vector<int> cyclic_class_indices(const FiniteGroup& g,
                                      const SubgroupClassTable& classes) {
    std::vector<int> out;
    for (size_t ci = 0; ci < classes.classes.size(); ++ci) {
        const Subgroup& h = classes.classes[ci].rep;
        for (int m : h.members)
            if (cyclic_subgroup(g, m).order() == h.order()) {
                out.push_back(static_cast<int>(ci));
                break;
            }
    }
    return out;
}

RatVec hs_q_of_rep(const RepUniverse& u, const SubgroupClassTable& classes,
                   const RepRingElement& v) {
    icheck(v.tag == FieldTag::Q, "hs_q_of_rep expects a rational class");
    const FiniteGroup& g = u.ambient();
    const RepTheory& gt = *u.ambient_theory();
    std::vector<Cyclotomic> chi = character_of(gt, v);
    RatVec out;
    for (int ci : cyclic_class_indices(g, classes)) {
        const Subgroup& h = classes.classes[ci].rep;
        int gen = -1;
        for (int m : h.members)
            if (cyclic_subgroup(g, m).order() == h.order()) {
                gen = m;
                break;
            }
        Int wh = weyl_group(g, h).group.order();
        Cyclotomic val = chi[gt.table.class_of(gen)];
        icheck(val.is_rational(), "rational character has irrational value");
        out.push_back(val.rational_value() / Rat(wh));
    }
    return out;
}

}  // namespace eqeuler
