#include "eqeuler/category.hpp"

#include <algorithm>

#include "eqeuler/errors.hpp"

namespace eqeuler {

namespace {

// Coset decomposition of G by a subgroup: coset_of per element plus the
// minimal-member representative list.
struct Cosets {
    std::vector<int> coset_of;
    std::vector<int> reps;
};

Cosets cosets_of(const FiniteGroup& g, const Subgroup& h) {
    Cosets c;
    c.coset_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (c.coset_of[x] != -1) continue;
        int id = static_cast<int>(c.reps.size());
        c.reps.push_back(x);
        for (int m : h.members) c.coset_of[g.mult[x][m]] = id;
    }
    return c;
}

}  // namespace

ComponentCategory component_category(const GComplex& x, const FixedData& fd) {
    ComponentCategory cat;
    cat.complex = &x;
    cat.fixed = &fd;
    cat.basis = ug_basis(fd);
    for (const auto& item : cat.basis.items) {
        const auto& cd = fd.per_class[item.class_idx];
        int bp = -1;
        for (int v = 0; v < x.nverts && bp < 0; ++v)
            if (cd.comps.comp_of_vertex[v] == item.rep_component) bp = v;
        icheck(bp >= 0, "component without vertices");
        cat.objects.push_back({item.class_idx, item.orbit, item.rep_component, bp});
    }
    return cat;
}

MorSet mor_set(const ComponentCategory& cat, int yi, int xi) {
    const GComplex& x = *cat.complex;
    const FiniteGroup& g = *x.group;
    const FixedData& fd = *cat.fixed;
    const CatObject& oy = cat.objects[yi];
    const CatObject& ox = cat.objects[xi];
    const Subgroup& h = fd.classes.classes[ox.class_idx].rep;
    const Subgroup& k = fd.classes.classes[oy.class_idx].rep;
    const auto& ycd = fd.per_class[oy.class_idx];

    Cosets cs = cosets_of(g, h);
    MorSet m;
    for (size_t ci = 0; ci < cs.reps.size(); ++ci) {
        int rep = cs.reps[ci];
        bool kfixed = true;
        for (int kk : k.members)
            if (cs.coset_of[g.mult[kk][rep]] != static_cast<int>(ci)) {
                kfixed = false;
                break;
            }
        if (!kfixed) continue;
        int moved = x.action[rep].img[ox.basepoint];
        if (ycd.comps.comp_of_vertex[moved] == oy.component) {
            m.cosets.push_back(static_cast<int>(ci));
            m.coset_rep_elem.push_back(rep);
        }
    }

    // WK_y acts by left translation through its coset representatives.
    const auto& isotropy = ycd.comp_isotropy[oy.component];
    std::vector<char> seen(m.cosets.size(), 0);
    for (size_t i = 0; i < m.cosets.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        int stab = 0;
        for (int w : isotropy) {
            int amb = ycd.weyl.coset_rep[w];
            int img_coset = cs.coset_of[g.mult[amb][cs.reps[m.cosets[i]]]];
            auto it = std::find(m.cosets.begin(), m.cosets.end(), img_coset);
            icheck(it != m.cosets.end(), "Weyl action leaves the morphism set");
            size_t j = it - m.cosets.begin();
            if (j == i) ++stab;
            if (!seen[j]) {
                seen[j] = 1;
                orbit.push_back(static_cast<int>(j));
            }
        }
        std::sort(orbit.begin(), orbit.end());
        m.orbits.push_back(std::move(orbit));
        m.stabilizer_order.push_back(stab);
    }
    return m;
}

RatMat char_map_matrix(const ComponentCategory& cat) {
    int n = static_cast<int>(cat.objects.size());
    // Rows indexed by [y], columns by [x]: (M u)[y] = ch(u)_[y].
    RatMat m(n, RatVec(n, Rat(0)));
    for (int yi = 0; yi < n; ++yi)
        for (int xi = 0; xi < n; ++xi) {
            MorSet ms = mor_set(cat, yi, xi);
            Rat acc(0);
            for (int stab : ms.stabilizer_order) acc += Rat(1, stab);
            m[yi][xi] = acc;
        }
    RatMat copy = m;
    icheck(rank_rat(copy) == n, "character map matrix is singular");
    return m;
}

RatVec char_map_apply(const RatMat& ch, const UGElement& u) {
    RatVec v;
    v.reserve(u.coeffs.size());
    for (const Int& c : u.coeffs) v.push_back(Rat(c));
    return mat_apply(ch, v);
}

std::vector<AlphaItem> alpha_f(const RepUniverse& u, const ComponentCategory& cat,
                               int xi, FieldTag f) {
    const GComplex& x = *cat.complex;
    const FiniteGroup& g = u.ambient();
    const FixedData& fd = *cat.fixed;
    const CatObject& ox = cat.objects[xi];
    const Subgroup& h = fd.classes.classes[ox.class_idx].rep;
    const RepTheoryPtr& ht = u.theory_of(h);
    const FClassPartition& target = ht->fclasses(f);
    const FClassPartition& source = u.ambient_theory()->fclasses(f);

    Cosets cs = cosets_of(g, h);
    std::vector<AlphaItem> items;

    for (int fc = 0; fc < source.count(); ++fc) {
        int gen = source.rep[fc];
        Subgroup cyc = cyclic_subgroup(g, gen);
        SubgroupFixed sf = fixed_of_subgroup(x, cyc);
        QuotientGroup zf = z_f(g, gen, f);
        int zn = zf.group.order();

        // Z_F(g)-action on components of X^<g>.
        std::vector<int> comp_vertex(sf.comps.count, -1);
        for (int v = 0; v < x.nverts; ++v) {
            int c = sf.comps.comp_of_vertex[v];
            if (c >= 0 && comp_vertex[c] == -1) comp_vertex[c] = v;
        }
        std::vector<std::vector<int>> comp_img(zn, std::vector<int>(sf.comps.count));
        for (int z = 0; z < zn; ++z)
            for (int c = 0; c < sf.comps.count; ++c) {
                int img = sf.comps.comp_of_vertex[x.action[zf.coset_rep[z]].img[comp_vertex[c]]];
                icheck(img >= 0, "Z_F(g) action leaves X^<g>");
                comp_img[z][c] = img;
            }
        std::vector<int> orbit_of(sf.comps.count, -1);
        std::vector<int> orbit_reps;
        for (int c = 0; c < sf.comps.count; ++c) {
            if (orbit_of[c] != -1) continue;
            int o = static_cast<int>(orbit_reps.size());
            orbit_reps.push_back(c);
            for (int z = 0; z < zn; ++z) orbit_of[comp_img[z][c]] = o;
        }

        for (int comp : orbit_reps) {
            // mor(y(C), x): <g>-fixed cosets moving x's basepoint into C.
            std::vector<int> mor;
            for (size_t ci = 0; ci < cs.reps.size(); ++ci) {
                int rep = cs.reps[ci];
                bool fixed = true;
                for (int kk : cyc.members)
                    if (cs.coset_of[g.mult[kk][rep]] != static_cast<int>(ci)) {
                        fixed = false;
                        break;
                    }
                if (!fixed) continue;
                if (sf.comps.comp_of_vertex[x.action[rep].img[ox.basepoint]] == comp)
                    mor.push_back(static_cast<int>(ci));
            }
            // Z_F(g)_y: elements keeping the component.
            std::vector<int> zy;
            for (int z = 0; z < zn; ++z)
                if (comp_img[z][comp] == comp) zy.push_back(z);

            std::vector<char> seen(mor.size(), 0);
            for (size_t i = 0; i < mor.size(); ++i) {
                if (seen[i]) continue;
                for (int z : zy) {
                    int img_coset = cs.coset_of[g.mult[zf.coset_rep[z]][cs.reps[mor[i]]]];
                    auto it = std::find(mor.begin(), mor.end(), img_coset);
                    icheck(it != mor.end(), "Z_F(g)_y action leaves the morphism set");
                    seen[it - mor.begin()] = 1;
                }
                // sigma = cosets g'H maps to ((g')^{-1} g g')_F in con_F(H).
                int gp = cs.reps[mor[i]];
                int conj = g.conj(g.inv[gp], gen);
                int target_class = target.class_of[ht->index_of_ambient(conj)];
                items.push_back({fc, comp, static_cast<int>(i), target_class});
            }
        }
    }

    // The assembled map must biject onto con_F(H).
    std::vector<int> hits(target.count(), 0);
    for (const AlphaItem& it : items) ++hits[it.target_hclass];
    for (int c = 0; c < target.count(); ++c)
        check(hits[c] == 1, err::BijectionFailure,
              "alpha_F is not a bijection onto con_F(H)");
    return items;
}

}  // namespace eqeuler
