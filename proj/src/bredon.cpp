#include "eqeuler/bredon.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eqeuler/errors.hpp"

namespace eqeuler {

namespace {

Int pos_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

IntVec FinAbPresentation::normal_form(const IntVec& coords) const {
    icheck(static_cast<int>(coords.size()) == ngen, "coordinate length mismatch");
    IntVec c = int_vec_mat(coords, snf.v);
    for (int i = 0; i < snf.rank(); ++i) c[i] = pos_mod(c[i], snf.factors[i]);
    return c;
}

Int FinAbPresentation::order_of(const IntVec& coords) const {
    IntVec c = normal_form(coords);
    for (int i = snf.rank(); i < ngen; ++i)
        if (c[i] != 0) return 0;  // infinite
    Int ord = 1;
    for (int i = 0; i < snf.rank(); ++i) {
        if (c[i] == 0) continue;
        Int d = snf.factors[i] / gcd(snf.factors[i], c[i]);
        ord = lcm(ord, d);
    }
    return ord;
}

bool FinAbPresentation::is_zero_class(const IntVec& coords) const {
    IntVec c = normal_form(coords);
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

bool FinAbPresentation::in_relation_lattice(const IntVec& v) const {
    IntVec c = int_vec_mat(v, snf.v);
    for (int i = 0; i < snf.rank(); ++i)
        if (c[i] % snf.factors[i] != 0) return false;
    for (int i = snf.rank(); i < ngen; ++i)
        if (c[i] != 0) return false;
    return true;
}

IntVec FinAbPresentation::torsion_factors() const {
    IntVec out;
    for (const Int& d : snf.factors)
        if (d > 1) out.push_back(d);
    return out;
}

RatVec FinAbPresentation::rationalize(const IntVec& coords) const {
    RatVec r(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) r[i] = Rat(coords[i]);
    return rationalize(r);
}

RatVec FinAbPresentation::rationalize(const RatVec& coords) const {
    icheck(static_cast<int>(coords.size()) == ngen, "coordinate length mismatch");
    RatVec out(free_rank(), Rat(0));
    for (int k = 0; k < free_rank(); ++k) {
        Rat acc(0);
        int col = snf.rank() + k;
        for (int i = 0; i < ngen; ++i)
            if (coords[i] != 0) acc += coords[i] * Rat(snf.v[i][col]);
        out[k] = acc;
    }
    return out;
}

RatVec FinAbPresentation::free_basis_ambient(int k) const {
    RatVec out(ngen);
    int row = snf.rank() + k;
    for (int i = 0; i < ngen; ++i) out[i] = Rat(v_inverse[row][i]);
    return out;
}

FinAbPresentation presentation_from_relations(int ngen, IntMat relations) {
    // Deduplicate relation rows; keep at least one row so shapes stay sane.
    std::set<IntVec> uniq(relations.begin(), relations.end());
    uniq.erase(IntVec(ngen, Int(0)));
    FinAbPresentation p;
    p.ngen = ngen;
    p.relations.assign(uniq.begin(), uniq.end());
    if (p.relations.empty()) p.relations.assign(1, IntVec(ngen, Int(0)));
    p.snf = smith_normal_form(p.relations);

    // Integer inverse of the unimodular V.
    RatMat vr(ngen, RatVec(ngen));
    for (int i = 0; i < ngen; ++i)
        for (int j = 0; j < ngen; ++j) vr[i][j] = Rat(p.snf.v[i][j]);
    RatMat inv = inverse_rat(vr);
    p.v_inverse.assign(ngen, IntVec(ngen));
    for (int i = 0; i < ngen; ++i)
        for (int j = 0; j < ngen; ++j) {
            icheck(denominator(inv[i][j]) == 1, "V is not unimodular");
            p.v_inverse[i][j] = numerator(inv[i][j]);
        }
    return p;
}

H0Presentation h0_presentation(const RepUniverse& u, const ComponentCategory& cat,
                               FieldTag f) {
    check(f == FieldTag::Q || f == FieldTag::R, err::InvalidInput,
          "Bredon coefficients are taken over Q or R");
    H0Presentation hp;
    hp.tag = f;
    const FixedData& fd = *cat.fixed;
    int n = static_cast<int>(cat.objects.size());
    int total = 0;
    for (int i = 0; i < n; ++i) {
        hp.offset.push_back(total);
        const Subgroup& h = fd.classes.classes[cat.objects[i].class_idx].rep;
        hp.theories.push_back(u.theory_of(h));
        total += hp.theories.back()->irr_count(f);
    }

    IntMat rels;
    for (int yi = 0; yi < n; ++yi) {
        const RepTheory& kt = *hp.theories[yi];
        for (int xi = 0; xi < n; ++xi) {
            const RepTheory& ht = *hp.theories[xi];
            MorSet ms = mor_set(cat, yi, xi);
            for (int rep : ms.coset_rep_elem) {
                for (int b = 0; b < kt.irr_count(f); ++b) {
                    RepRingElement basis = zero_element(kt, f);
                    basis.coeffs[b] = 1;
                    RepRingElement ind =
                        u.induce_cached(hp.theories[yi], hp.theories[xi], rep, basis);
                    IntVec row(total, Int(0));
                    row[hp.offset[yi] + b] += 1;
                    for (int j = 0; j < ht.irr_count(f); ++j)
                        row[hp.offset[xi] + j] -= ind.coeffs[j];
                    rels.push_back(std::move(row));
                }
            }
        }
    }
    hp.pres = presentation_from_relations(total, std::move(rels));
    return hp;
}

H0Class e1(const H0Presentation& pq, const UGElement& u) {
    icheck(pq.tag == FieldTag::Q, "e1 lands in rational coefficients");
    H0Class c{IntVec(pq.ngen(), Int(0))};
    for (size_t i = 0; i < u.coeffs.size(); ++i) {
        if (u.coeffs[i] == 0) continue;
        int t = pq.theories[i]->trivial_irr(FieldTag::Q);
        c.coords[pq.offset[i] + t] += u.coeffs[i];
    }
    return c;
}

E2Map build_e2(const H0Presentation& pq, const H0Presentation& pr) {
    icheck(pq.tag == FieldTag::Q && pr.tag == FieldTag::R, "e2 maps Q to R coefficients");
    icheck(pq.theories.size() == pr.theories.size(),
           "presentations over different complexes");
    E2Map m;
    m.matrix.assign(pq.ngen(), IntVec(pr.ngen(), Int(0)));
    for (size_t i = 0; i < pq.theories.size(); ++i) {
        const RepTheory& t = *pq.theories[i];
        for (int b = 0; b < t.irr_count(FieldTag::Q); ++b) {
            RepRingElement basis = zero_element(t, FieldTag::Q);
            basis.coeffs[b] = 1;
            RepRingElement img = change_fields_q_to_r(t, basis);
            for (int j = 0; j < t.irr_count(FieldTag::R); ++j)
                m.matrix[pq.offset[i] + b][pr.offset[i] + j] = img.coeffs[j];
        }
    }
    // Relations of the rational presentation must land in the real relation
    // lattice; otherwise the map is not defined on classes.
    for (const IntVec& rel : pq.pres.relations)
        check(pr.pres.in_relation_lattice(int_vec_mat(rel, m.matrix)),
              err::RelationMismatch,
              "change of fields does not preserve the relation lattice");
    return m;
}

H0Class apply_e2(const E2Map& m, const H0Class& c) {
    return H0Class{int_vec_mat(c.coords, m.matrix)};
}

H0Class e2(const H0Presentation& pq, const H0Presentation& pr, const H0Class& c) {
    return apply_e2(build_e2(pq, pr), c);
}

Int element_order(const H0Presentation& p, const H0Class& c) {
    return p.pres.order_of(c.coords);
}

RepRingElement c_star_to_rep(const RepUniverse& u, const H0Presentation& p,
                             const H0Class& c) {
    const RepTheory& gt = *u.ambient_theory();
    RepRingElement out = zero_element(gt, p.tag);
    for (size_t i = 0; i < p.theories.size(); ++i) {
        const RepTheory& t = *p.theories[i];
        for (int b = 0; b < t.irr_count(p.tag); ++b) {
            const Int& coef = c.coords[p.offset[i] + b];
            if (coef == 0) continue;
            RepRingElement basis = zero_element(t, p.tag);
            basis.coeffs[b] = 1;
            out += u.induce_cached(p.theories[i], u.ambient_theory(), 0, basis) * coef;
        }
    }
    return out;
}

H0Class pushforward(const RepUniverse& u, const ComponentCategory& catx,
                    const H0Presentation& px, const ComponentCategory& caty,
                    const H0Presentation& py, const std::vector<int32_t>& vertex_map,
                    const H0Class& c) {
    const GComplex& x = *catx.complex;
    const GComplex& y = *caty.complex;
    const FiniteGroup& g = u.ambient();
    icheck(px.tag == py.tag, "pushforward between different coefficient fields");
    check(static_cast<int>(vertex_map.size()) == x.nverts, err::InvalidInput,
          "vertex map length mismatch");
    for (int32_t img : vertex_map)
        check(img >= 0 && img < y.nverts, err::InvalidInput, "vertex map out of range");
    for (int e = 0; e < g.order(); ++e)
        for (int v = 0; v < x.nverts; ++v)
            check(vertex_map[x.action[e].img[v]] == y.action[e].img[vertex_map[v]],
                  err::NotEquivariant, "vertex map is not equivariant");
    // Simplicial: the (deduplicated) image of each simplex is a simplex of y.
    for (int d = 0; d <= x.top_dim(); ++d) {
        for (long long i = 0; i < x.count(d); ++i) {
            const int32_t* t = x.tuple(d, i);
            std::vector<int32_t> img(t, t + d + 1);
            for (int32_t& v : img) v = vertex_map[v];
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            check(y.find(static_cast<int>(img.size()) - 1, img) >= 0,
                  err::NotSimplicialAction, "vertex map is not simplicial");
        }
    }

    const FixedData& fdy = *caty.fixed;
    H0Class out{IntVec(py.ngen(), Int(0))};
    for (size_t xi = 0; xi < catx.objects.size(); ++xi) {
        const CatObject& ox = catx.objects[xi];
        const RepTheory& t = *px.theories[xi];
        int cls = ox.class_idx;  // class tables agree: same ambient group
        const auto& ycd = fdy.per_class[cls];
        int img_vertex = vertex_map[ox.basepoint];
        int img_comp = ycd.comps.comp_of_vertex[img_vertex];
        icheck(img_comp >= 0, "image of a fixed basepoint misses the fixed set");
        int orbit = ycd.orbit_of_comp[img_comp];
        int canon_comp = ycd.orbits[orbit][0];
        // Target object index in cat y.
        int yi = -1;
        for (size_t j = 0; j < caty.objects.size(); ++j)
            if (caty.objects[j].class_idx == cls && caty.objects[j].orbit == orbit)
                yi = static_cast<int>(j);
        icheck(yi >= 0, "target object missing");
        // Weyl element moving the canonical component to the image component;
        // the transport is induction along h -> a^{-1} h a (a in NH).
        int a = -1;
        for (int w = 0; w < ycd.weyl.group.order(); ++w)
            if (ycd.comp_img(w, canon_comp) == img_comp) {
                a = ycd.weyl.coset_rep[w];
                break;
            }
        icheck(a >= 0, "no Weyl element connects the components");
        for (int b = 0; b < t.irr_count(px.tag); ++b) {
            const Int& coef = c.coords[px.offset[xi] + b];
            if (coef == 0) continue;
            RepRingElement basis = zero_element(t, px.tag);
            basis.coeffs[b] = 1;
            RepRingElement moved =
                u.induce_cached(px.theories[xi], py.theories[yi], a, basis);
            for (int j = 0; j < py.theories[yi]->irr_count(py.tag); ++j)
                out.coords[py.offset[yi] + j] += coef * moved.coeffs[j];
        }
    }
    return out;
}

std::vector<int> cyclic_object_indices(const ComponentCategory& cat) {
    const FixedData& fd = *cat.fixed;
    const FiniteGroup& g = *cat.complex->group;
    std::vector<int> out;
    for (size_t i = 0; i < cat.objects.size(); ++i) {
        const Subgroup& h = fd.classes.classes[cat.objects[i].class_idx].rep;
        for (int m : h.members)
            if (cyclic_subgroup(g, m).order() == h.order()) {
                out.push_back(static_cast<int>(i));
                break;
            }
    }
    return out;
}

RatMat gamma_q(const RepUniverse& u, const ComponentCategory& cat,
               const H0Presentation& pq) {
    const FixedData& fd = *cat.fixed;
    const FiniteGroup& g = u.ambient();
    std::vector<int> cyc = cyclic_object_indices(cat);
    int rank = pq.pres.free_rank();
    check(rank == static_cast<int>(cyc.size()), err::SingularMatrix,
          "rational H0 rank differs from the number of cyclic objects");

    RatMat m(rank, RatVec(cyc.size(), Rat(0)));
    for (size_t col = 0; col < cyc.size(); ++col) {
        int oi = cyc[col];
        const Subgroup& l = fd.classes.classes[cat.objects[oi].class_idx].rep;
        const RepTheory& lt = *pq.theories[oi];
        // A generator of the cyclic group L.
        int gen = -1;
        for (int mm : l.members)
            if (cyclic_subgroup(g, mm).order() == l.order()) {
                gen = mm;
                break;
            }
        icheck(gen >= 0, "object subgroup is not cyclic");
        int gen_count = 0;  // |Gen(L)|
        for (int mm : l.members)
            if (cyclic_subgroup(g, mm).order() == l.order()) ++gen_count;

        // D: scale the delta at (gen)_Q in class_Q(L) by |Gen(L)|/|L|.
        int qclass = lt.fq.class_of[lt.index_of_ambient(gen)];
        RatVec delta(lt.fq.count(), Rat(0));
        delta[qclass] = Rat(gen_count, l.order());

        // HS^{-1}: rational coefficients over the Q-irreducible basis.
        RatMat hs_inv = hs_matrix_q_inverse(lt);
        RatVec irr_coeffs(lt.irr_count(FieldTag::Q), Rat(0));
        for (int i = 0; i < lt.irr_count(FieldTag::Q); ++i)
            irr_coeffs[i] = hs_inv[qclass][i] * delta[qclass];

        // beta: place at the object and rationalize.
        RatVec ambient(pq.ngen(), Rat(0));
        for (int i = 0; i < lt.irr_count(FieldTag::Q); ++i)
            ambient[pq.offset[oi] + i] = irr_coeffs[i];
        RatVec column = pq.pres.rationalize(ambient);
        for (int r = 0; r < rank; ++r) m[r][col] = column[r];
    }
    RatMat copy = m;
    check(rank_rat(copy) == rank, err::SingularMatrix, "gamma_Q is singular");
    return m;
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

template <typename F>
void run_check(VerifyReport& report, const std::string& name, F&& body) {
    VerifyCheck c;
    c.name = name;
    try {
        c.detail = body(c.pass);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(c));
}

}  // namespace

VerifyReport verify_suite(const RepUniverse& u, const GComplex& x, const FixedData& fd,
                          const ComponentCategory& cat, const H0Presentation& pq,
                          const H0Presentation& pr) {
    VerifyReport report;
    const FiniteGroup& g = u.ambient();
    UGBasis basis = ug_basis(fd);
    UGElement chi = universal_euler_char(x, fd, basis);
    RatMat ch = char_map_matrix(cat);
    int nobj = static_cast<int>(cat.objects.size());

    run_check(report, "gamma_pr_ch_equals_e1", [&](bool& pass) {
        RatMat gm = gamma_q(u, cat, pq);
        std::vector<int> cyc = cyclic_object_indices(cat);
        pass = true;
        for (int xi = 0; xi < nobj; ++xi) {
            RatVec chcol(nobj);
            for (int yi = 0; yi < nobj; ++yi) chcol[yi] = ch[yi][xi];
            RatVec projected;
            for (int ci : cyc) projected.push_back(chcol[ci]);
            RatVec lhs = mat_apply(gm, projected);
            UGElement e{IntVec(nobj, Int(0))};
            e.coeffs[xi] = 1;
            RatVec rhs = pq.pres.rationalize(e1(pq, e).coords);
            if (lhs != rhs) pass = false;
        }
        return std::string("checked on the U^G basis");
    });

    run_check(report, "e2_rationally_injective", [&](bool& pass) {
        E2Map em = build_e2(pq, pr);
        int rq = pq.pres.free_rank();
        RatMat image;
        for (int k = 0; k < rq; ++k) {
            RatVec ambient = pq.pres.free_basis_ambient(k);
            RatVec mapped(pr.ngen(), Rat(0));
            for (int i = 0; i < pq.ngen(); ++i) {
                if (ambient[i] == 0) continue;
                for (int j = 0; j < pr.ngen(); ++j)
                    if (em.matrix[i][j] != 0)
                        mapped[j] += ambient[i] * Rat(em.matrix[i][j]);
            }
            image.push_back(pr.pres.rationalize(mapped));
        }
        pass = rank_rat(image) == rq;
        return "rank " + std::to_string(rq) + " preserved under e2";
    });

    run_check(report, "pushforward_square", [&](bool& pass) {
        pass = true;
        E2Map em = build_e2(pq, pr);
        for (int xi = 0; xi < nobj; ++xi) {
            UGElement e{IntVec(nobj, Int(0))};
            e.coeffs[xi] = 1;
            RepRingElement lhs = c_star_to_rep(u, pr, apply_e2(em, e1(pq, e)));
            BurnsideElement be = pushforward_to_point(fd, basis, e);
            RepRingElement rhs = j1(u, fd.classes, be, FieldTag::R);
            if (!(lhs == rhs)) pass = false;
        }
        return std::string("c_* e2 e1 = j1 c_* on the U^G basis");
    });

    run_check(report, "ch_chi_equals_orbifold", [&](bool& pass) {
        pass = true;
        RatVec lhs = char_map_apply(ch, chi);
        for (int yi = 0; yi < nobj; ++yi) {
            const CatObject& oy = cat.objects[yi];
            const auto& cd = fd.per_class[oy.class_idx];
            std::vector<Perm> acting;
            for (int w : cd.comp_isotropy[oy.component])
                acting.push_back(x.action[cd.weyl.coset_rep[w]]);
            SimplexMask cm = component_mask(x, cd.in_fixed, cd.comps, oy.component);
            if (lhs[yi] != orbifold_euler_char_masked(x, cm, acting)) pass = false;
        }
        return std::string("character map matches orbifold characteristics");
    });

    run_check(report, "lefschetz_fixed_points", [&](bool& pass) {
        pass = true;
        RepRingElement a = c_star_to_rep(u, pr, apply_e2(build_e2(pq, pr), e1(pq, chi)));
        std::vector<Cyclotomic> values = character_of(*u.ambient_theory(), a);
        for (int e = 0; e < g.order(); ++e) {
            SubgroupFixed sf = fixed_of_subgroup(x, cyclic_subgroup(g, e));
            Int rhs = euler_char_masked(x, sf.in_fixed);
            Cyclotomic lhs = values[u.ambient_theory()->table.class_of(e)];
            if (!lhs.is_rational() || lhs.rational_value() != Rat(rhs)) pass = false;
        }
        return std::string("character of j1 c_* chi matches fixed-set Euler characteristics");
    });

    return report;
}

}  // namespace eqeuler
