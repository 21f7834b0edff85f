#include "eqeuler/rep_ring.hpp"

#include <algorithm>
#include <numeric>

#include "eqeuler/errors.hpp"

namespace eqeuler {

int RepTheory::irr_count(FieldTag f) const {
    switch (f) {
        case FieldTag::Q: return static_cast<int>(rat_irr.size());
        case FieldTag::R: return static_cast<int>(real_irr.size());
        case FieldTag::C: return table.num_chars();
    }
    return 0;
}

const FClassPartition& RepTheory::fclasses(FieldTag f) const {
    switch (f) {
        case FieldTag::Q: return fq;
        case FieldTag::R: return fr;
        case FieldTag::C: return table.classes;
    }
    return table.classes;
}

int RepTheory::index_of_ambient(int ambient_elem) const {
    auto it = std::lower_bound(to_ambient.begin(), to_ambient.end(), ambient_elem);
    icheck(it != to_ambient.end() && *it == ambient_elem,
           "element does not belong to this subgroup");
    return static_cast<int>(it - to_ambient.begin());
}

bool RepTheory::contains_ambient(int ambient_elem) const {
    return std::binary_search(to_ambient.begin(), to_ambient.end(), ambient_elem);
}

Cyclotomic RepTheory::irr_value(FieldTag f, int i, int c) const {
    switch (f) {
        case FieldTag::Q: return rat_irr_values[i][c];
        case FieldTag::R: return real_irr[i].values[c];
        case FieldTag::C: return table.values[i][c];
    }
    return Cyclotomic(table.conductor);
}

const std::vector<std::vector<int32_t>>& RepTheory::irr_digits(FieldTag f, int i) const {
    switch (f) {
        case FieldTag::Q: return digits_q[i];
        case FieldTag::R: return digits_r[i];
        case FieldTag::C: return table.digits[i];
    }
    return table.digits[i];
}

Int RepTheory::irr_degree(FieldTag f, int i) const {
    switch (f) {
        case FieldTag::Q: return rat_irr[i].degree;
        case FieldTag::R: return real_irr[i].degree;
        case FieldTag::C: return table.degrees[i];
    }
    return 0;
}

int RepTheory::trivial_irr(FieldTag f) const {
    Cyclotomic one(table.conductor, Rat(1));
    for (int i = 0; i < irr_count(f); ++i) {
        bool triv = true;
        for (int c = 0; c < table.classes.count() && triv; ++c)
            if (irr_value(f, i, c) != one) triv = false;
        if (triv) return i;
    }
    icheck(false, "trivial representation missing from basis");
    return -1;
}

namespace {

RepTheoryPtr build_theory(std::shared_ptr<const FiniteGroup> g,
                          std::vector<int> to_ambient, SchurPolicy policy) {
    auto t = std::make_shared<RepTheory>();
    t->group = std::move(g);
    t->to_ambient = std::move(to_ambient);
    t->table = char_table_complex(*t->group);
    t->table.group = t->group.get();
    t->real_irr = real_irreducibles(t->table);
    t->rat_irr = rational_irreducibles(t->table, policy);
    int e = t->table.conductor;
    int r = t->table.classes.count();
    for (const RealIrred& ri : t->real_irr) {
        std::vector<std::vector<int32_t>> d(r, std::vector<int32_t>(e, 0));
        int mult = ri.type == 'H' ? 2 : 1;
        for (int c = 0; c < r; ++c)
            for (int i : ri.constituents)
                for (int p = 0; p < e; ++p) d[c][p] += mult * t->table.digits[i][c][p];
        t->digits_r.push_back(std::move(d));
    }
    for (const RatIrred& ri : t->rat_irr) {
        std::vector<std::vector<int32_t>> d(r, std::vector<int32_t>(e, 0));
        for (int c = 0; c < r; ++c)
            for (int i : ri.orbit)
                for (int p = 0; p < e; ++p)
                    d[c][p] += ri.schur_index * t->table.digits[i][c][p];
        t->digits_q.push_back(std::move(d));
    }
    for (const RatIrred& ri : t->rat_irr) {
        std::vector<Cyclotomic> row;
        row.reserve(ri.values.size());
        for (const Rat& v : ri.values) row.emplace_back(t->table.conductor, v);
        t->rat_irr_values.push_back(std::move(row));
    }
    t->fq = f_conjugacy_classes(*t->group, FieldTag::Q);
    t->fr = f_conjugacy_classes(*t->group, FieldTag::R);
    return t;
}

}  // namespace

RepTheoryPtr rep_theory(const FiniteGroup& g, SchurPolicy policy) {
    auto owned = std::make_shared<FiniteGroup>(g);
    std::vector<int> ids(g.order());
    std::iota(ids.begin(), ids.end(), 0);
    return build_theory(owned, std::move(ids), policy);
}

RepTheoryPtr rep_theory_subgroup(const Subgroup& h, SchurPolicy policy) {
    SubgroupGroup sg = as_group(h);
    auto owned = std::make_shared<FiniteGroup>(std::move(sg.group));
    return build_theory(owned, std::move(sg.to_parent), policy);
}

RepUniverse::RepUniverse(const FiniteGroup& g, SchurPolicy policy)
    : ambient_(std::make_shared<FiniteGroup>(g)), policy_(policy) {
    std::vector<int> ids(g.order());
    std::iota(ids.begin(), ids.end(), 0);
    ambient_theory_ = build_theory(ambient_, ids, policy_);
    cache_[ids] = ambient_theory_;
}

RepRingElement RepUniverse::induce_cached(const RepTheoryPtr& kt, const RepTheoryPtr& ht,
                                          int conj_g, const RepRingElement& v) const {
    // The induced map depends on conj_g only through k -> g^{-1} k g on K.
    std::vector<int> signature;
    signature.reserve(kt->to_ambient.size());
    for (int k_amb : kt->to_ambient)
        signature.push_back(ambient_->conj(ambient_->inv[conj_g], k_amb));
    RepRingElement out = zero_element(*ht, v.tag);
    for (int i = 0; i < kt->irr_count(v.tag); ++i) {
        if (v.coeffs[i] == 0) continue;
        IndKey key{kt.get(), ht.get(), signature, static_cast<int>(v.tag), i};
        auto it = induction_memo_.find(key);
        if (it == induction_memo_.end()) {
            RepRingElement basis = zero_element(*kt, v.tag);
            basis.coeffs[i] = 1;
            it = induction_memo_
                     .emplace(key, induce_along(*ambient_, *kt, *ht, conj_g, basis))
                     .first;
        }
        out += it->second * v.coeffs[i];
    }
    return out;
}

const RepTheoryPtr& RepUniverse::theory_of(const Subgroup& h) const {
    auto it = cache_.find(h.members);
    if (it != cache_.end()) return it->second;
    Subgroup on_owned{ambient_.get(), h.members};
    return cache_.emplace(h.members, rep_theory_subgroup(on_owned, policy_))
        .first->second;
}

bool RepRingElement::is_zero() const {
    for (const Int& c : coeffs)
        if (c != 0) return false;
    return true;
}

RepRingElement& RepRingElement::operator+=(const RepRingElement& o) {
    icheck(tag == o.tag && coeffs.size() == o.coeffs.size(), "rep element mismatch");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

RepRingElement RepRingElement::operator-(const RepRingElement& o) const {
    icheck(tag == o.tag && coeffs.size() == o.coeffs.size(), "rep element mismatch");
    RepRingElement out = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= o.coeffs[i];
    return out;
}

RepRingElement RepRingElement::operator*(const Int& s) const {
    RepRingElement out = *this;
    for (Int& c : out.coeffs) c *= s;
    return out;
}

RepRingElement zero_element(const RepTheory& t, FieldTag f) {
    return RepRingElement{f, IntVec(t.irr_count(f), Int(0))};
}

RepRingElement trivial_element(const RepTheory& t, FieldTag f) {
    RepRingElement v = zero_element(t, f);
    v.coeffs[t.trivial_irr(f)] = 1;
    return v;
}

std::vector<Cyclotomic> character_of(const RepTheory& t, const RepRingElement& v) {
    int r = t.table.classes.count();
    std::vector<Cyclotomic> out(r, Cyclotomic(t.table.conductor));
    for (int i = 0; i < t.irr_count(v.tag); ++i) {
        if (v.coeffs[i] == 0) continue;
        for (int c = 0; c < r; ++c)
            out[c] += t.irr_value(v.tag, i, c) * Rat(v.coeffs[i]);
    }
    return out;
}

Cyclotomic inner_product(const RepTheory& t, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b) {
    int r = t.table.classes.count();
    icheck(static_cast<int>(a.size()) == r && static_cast<int>(b.size()) == r,
           "class-function length mismatch");
    int m = std::lcm(a[0].conductor(), b[0].conductor());
    Cyclotomic acc(m);
    for (int c = 0; c < r; ++c) {
        Rat sz(static_cast<long long>(t.table.classes.classes[c].size()));
        acc += (a[c].to_conductor(m) * b[c].to_conductor(m).conj()) * sz;
    }
    return acc * Rat(1, t.order());
}

namespace {

Int require_integer(const Cyclotomic& v, bool require_nonneg) {
    check(v.is_rational(), err::DecompositionNotIntegral, "multiplicity is not rational");
    Rat r = v.rational_value();
    check(denominator(r) == 1, err::DecompositionNotIntegral,
          "multiplicity " + rat_to_string(r) + " is not an integer");
    check(!require_nonneg || r >= 0, err::DecompositionNotIntegral,
          "multiplicity " + rat_to_string(r) + " is negative");
    return numerator(r);
}

// Class function as rows of Q[x]/(x^m - 1) in the power basis: inner products
// against the integer digit vectors of the irreducibles need no reduction
// until the very end.
using PowerRows = std::vector<std::vector<Rat>>;

// (1/|H|) sum_c |c| theta(c) chi(c^{-1}) with chi given by digit vectors at
// the table conductor and theta given by per-class support lists.
Cyclotomic pairing_power(const RepTheory& t, const PowerRows& theta,
                         const std::vector<std::vector<int>>& support, int m,
                         const std::vector<std::vector<int32_t>>& digits) {
    int r = t.table.classes.count();
    int scale = m / t.table.conductor;
    std::vector<Rat> acc(m, Rat(0));
    for (int c = 0; c < r; ++c) {
        if (support[c].empty()) continue;
        const std::vector<int32_t>& dj = digits[t.table.inverse_class[c]];
        long long w = static_cast<long long>(t.table.classes.classes[c].size());
        const std::vector<Rat>& row = theta[c];
        for (size_t j = 0; j < dj.size(); ++j) {
            if (!dj[j]) continue;
            Rat factor(w * dj[j]);
            size_t shift = j * scale % m;
            for (int a : support[c]) acc[(a + shift) % m] += row[a] * factor;
        }
    }
    return cyclo_from_powers(m, acc) * Rat(1, t.order());
}

RepRingElement decompose_power(const RepTheory& t, FieldTag f, int m,
                               const PowerRows& theta, bool require_nonneg) {
    int r = t.table.classes.count();
    std::vector<std::vector<int>> support(r);
    for (int c = 0; c < r; ++c)
        for (int a = 0; a < m; ++a)
            if (theta[c][a] != 0) support[c].push_back(a);

    RepRingElement out = zero_element(t, f);
    for (int i = 0; i < t.irr_count(f); ++i) {
        Cyclotomic p;
        Rat divisor(1);
        switch (f) {
            case FieldTag::C:
                p = pairing_power(t, theta, support, m, t.table.digits[i]);
                break;
            case FieldTag::R: {
                // Pair against the real character; <psi,psi> = 1, 2, 4.
                p = pairing_power(t, theta, support, m, t.digits_r[i]);
                char ty = t.real_irr[i].type;
                divisor = ty == 'R' ? 1 : (ty == 'C' ? 2 : 4);
                break;
            }
            case FieldTag::Q: {
                // Pair against one complex constituent; divide by the Schur index.
                p = pairing_power(t, theta, support, m,
                                  t.table.digits[t.rat_irr[i].orbit[0]]);
                divisor = t.rat_irr[i].schur_index;
                break;
            }
        }
        out.coeffs[i] = require_integer(p * (Rat(1) / divisor), require_nonneg);
    }
    // The combination must reproduce the input exactly; check that the
    // difference reduces to zero class by class.
    int scale = m / t.table.conductor;
    for (int c = 0; c < r; ++c) {
        std::vector<Rat> diff(m, Rat(0));
        for (int i = 0; i < t.irr_count(f); ++i) {
            if (out.coeffs[i] == 0) continue;
            Rat coef(out.coeffs[i]);
            const std::vector<int32_t>& d = t.irr_digits(f, i)[c];
            for (size_t j = 0; j < d.size(); ++j)
                if (d[j]) diff[j * scale % m] += coef * d[j];
        }
        for (int a : support[c]) diff[a] -= theta[c][a];
        check(cyclo_from_powers(m, diff).is_zero(), err::DecompositionNotIntegral,
              "class function is not an integral combination of irreducibles");
    }
    return out;
}

}  // namespace

RepRingElement decompose(const RepTheory& t, FieldTag f,
                         const std::vector<Cyclotomic>& values, bool require_nonneg) {
    int m = std::lcm(values[0].conductor(), t.table.conductor);
    // Canonical coefficients are already power coordinates: scale indices.
    PowerRows theta(values.size(), std::vector<Rat>(m, Rat(0)));
    for (size_t c = 0; c < values.size(); ++c) {
        int scale = m / values[c].conductor();
        const std::vector<Rat>& cf = values[c].coeffs();
        for (size_t j = 0; j < cf.size(); ++j)
            if (cf[j] != 0) theta[c][j * scale] = cf[j];
    }
    return decompose_power(t, f, m, theta, require_nonneg);
}

namespace {

// Character of ind_{K'}^{H} of irreducible `irr` transported along
// x -> conj_g x conj_g^{-1} from K' = conj_g^{-1} K conj_g, as power rows in
// Q[x]/(x^m - 1), m = lcm of the conductors.
PowerRows induced_irr_power(const FiniteGroup& amb, const RepTheory& kt,
                            const RepTheory& ht, int conj_g, FieldTag f, int irr,
                            int m) {
    int hr = ht.table.classes.count();
    int kr = kt.table.classes.count();
    int scale = m / kt.table.conductor;
    Rat unit(1, kt.order());
    const auto& kdigits = kt.irr_digits(f, irr);
    PowerRows out(hr, std::vector<Rat>(m, Rat(0)));
    std::vector<long long> hits(kr);
    for (int c = 0; c < hr; ++c) {
        int h_amb = ht.to_ambient[ht.table.classes.rep[c]];
        std::fill(hits.begin(), hits.end(), 0);
        for (int u_local = 0; u_local < ht.order(); ++u_local) {
            int u = ht.to_ambient[u_local];
            int x = amb.mult[amb.mult[u][h_amb]][amb.inv[u]];  // u h u^{-1}
            int y = amb.conj(conj_g, x);                       // g' x g'^{-1}
            if (!kt.contains_ambient(y)) continue;
            ++hits[kt.table.class_of(kt.index_of_ambient(y))];
        }
        for (int c2 = 0; c2 < kr; ++c2) {
            if (!hits[c2]) continue;
            const std::vector<int32_t>& d = kdigits[c2];
            Rat factor = unit * Rat(hits[c2]);
            for (size_t j = 0; j < d.size(); ++j)
                if (d[j]) out[c][j * scale % m] += factor * d[j];
        }
    }
    return out;
}

}  // namespace

RepRingElement induce_along(const FiniteGroup& ambient, const RepTheory& kt,
                            const RepTheory& ht, int conj_g, const RepRingElement& v) {
    // Validate that conj_g^{-1} K conj_g lies in H.
    for (int k_amb : kt.to_ambient)
        icheck(ht.contains_ambient(ambient.conj(ambient.inv[conj_g], k_amb)),
               "conjugated subgroup not contained in induction target");
    int m = std::lcm(kt.table.conductor, ht.table.conductor);
    RepRingElement out = zero_element(ht, v.tag);
    for (int i = 0; i < kt.irr_count(v.tag); ++i) {
        if (v.coeffs[i] == 0) continue;
        PowerRows theta = induced_irr_power(ambient, kt, ht, conj_g, v.tag, i, m);
        RepRingElement part =
            decompose_power(ht, v.tag, m, theta, /*require_nonneg=*/true);
        out += part * v.coeffs[i];
    }
    return out;
}

RepRingElement induce(const FiniteGroup& ambient, const RepTheory& kt,
                      const RepTheory& ht, const RepRingElement& v) {
    return induce_along(ambient, kt, ht, 0, v);
}

RepRingElement restrict_to(const FiniteGroup& ambient, const RepTheory& ht,
                           const RepTheory& kt, const RepRingElement& v) {
    (void)ambient;
    int kr = kt.table.classes.count();
    int m = std::lcm(kt.table.conductor, ht.table.conductor);
    std::vector<Cyclotomic> theta(kr, Cyclotomic(m));
    std::vector<Cyclotomic> hchar = character_of(ht, v);
    for (int c = 0; c < kr; ++c) {
        int amb_elem = kt.to_ambient[kt.table.classes.rep[c]];
        int hcls = ht.table.class_of(ht.index_of_ambient(amb_elem));
        theta[c] = hchar[hcls].to_conductor(m);
    }
    return decompose(kt, v.tag, theta);
}

RepRingElement change_fields_q_to_r(const RepTheory& t, const RepRingElement& v) {
    icheck(v.tag == FieldTag::Q, "change_fields_q_to_r expects a rational class");
    RepRingElement out = zero_element(t, FieldTag::R);
    int r = t.table.classes.count();
    for (int i = 0; i < t.irr_count(FieldTag::Q); ++i) {
        if (v.coeffs[i] == 0) continue;
        std::vector<Cyclotomic> vals;
        vals.reserve(r);
        for (int c = 0; c < r; ++c) vals.push_back(t.irr_value(FieldTag::Q, i, c));
        out += decompose(t, FieldTag::R, vals, /*require_nonneg=*/true) * v.coeffs[i];
    }
    return out;
}

RepRingElement perm_character(const FiniteGroup& ambient, const RepTheory& gt,
                              const Subgroup& h, FieldTag f) {
    // Cosets xH; chi(g) = #fixed cosets.
    std::vector<int> coset_of(ambient.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < ambient.order(); ++x) {
        if (coset_of[x] != -1) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : h.members) coset_of[ambient.mult[x][m]] = id;
    }
    int r = gt.table.classes.count();
    std::vector<Cyclotomic> theta(r, Cyclotomic(gt.table.conductor));
    for (int c = 0; c < r; ++c) {
        int g_amb = gt.to_ambient[gt.table.classes.rep[c]];
        long long fixed = 0;
        for (int rep : reps)
            if (coset_of[ambient.mult[g_amb][rep]] == coset_of[rep]) ++fixed;
        theta[c] = Cyclotomic(gt.table.conductor, Rat(fixed));
    }
    return decompose(gt, f, theta, /*require_nonneg=*/true);
}

ClassFunction hs_rank(const RepTheory& t, const RepRingElement& v) {
    const FClassPartition& part = t.fclasses(v.tag);
    std::vector<Cyclotomic> chi = character_of(t, v);
    ClassFunction out;
    out.tag = v.tag;
    out.values.reserve(part.count());
    for (int fc = 0; fc < part.count(); ++fc) {
        // tr_F(l_h) must be constant across the F-class.
        const Cyclotomic& first = chi[t.table.class_of(part.classes[fc][0])];
        for (int x : part.classes[fc])
            icheck(chi[t.table.class_of(x)] == first,
                   "character not constant on F-conjugacy class");
        Rat weight(static_cast<long long>(part.classes[fc].size()),
                   static_cast<long long>(t.order()));
        out.values.push_back(first * weight);
    }
    if (v.tag == FieldTag::Q)
        for (const Cyclotomic& c : out.values)
            icheck(c.is_rational(), "rational HS rank has irrational entry");
    return out;
}

std::vector<std::vector<Cyclotomic>> hs_matrix(const RepTheory& t, FieldTag f) {
    std::vector<std::vector<Cyclotomic>> m;
    for (int i = 0; i < t.irr_count(f); ++i) {
        RepRingElement v = zero_element(t, f);
        v.coeffs[i] = 1;
        m.push_back(hs_rank(t, v).values);
    }
    icheck(m.empty() || m.size() == m[0].size(), "HS matrix is not square");
    return m;
}

bool hs_matrix_invertible(const RepTheory& t, FieldTag f) {
    auto m = hs_matrix(t, f);
    size_t n = m.size();
    // Gaussian elimination over the cyclotomic field.
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < n; ++c) {
        size_t piv = rank;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(m[rank], m[piv]);
        Cyclotomic ip = m[rank][c].inverse();
        for (size_t j = 0; j < n; ++j) m[rank][j] = m[rank][j] * ip;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            Cyclotomic factor = m[i][c];
            for (size_t j = 0; j < n; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank == n;
}

RatMat hs_matrix_q_inverse(const RepTheory& t) {
    auto m = hs_matrix(t, FieldTag::Q);
    RatMat rm(m.size(), RatVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) rm[i][j] = m[i][j].rational_value();
    return inverse_rat(rm);
}

}  // namespace eqeuler
