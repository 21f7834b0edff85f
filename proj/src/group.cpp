#include "eqeuler/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "eqeuler/errors.hpp"

namespace eqeuler {

const char* field_name(FieldTag f) {
    switch (f) {
        case FieldTag::Q: return "Q";
        case FieldTag::R: return "R";
        case FieldTag::C: return "C";
    }
    return "?";
}

FieldTag field_from_string(const std::string& s) {
    if (s == "Q" || s == "q") return FieldTag::Q;
    if (s == "R" || s == "r") return FieldTag::R;
    if (s == "C" || s == "c") return FieldTag::C;
    fail(err::InvalidInput, "unknown field tag '" + s + "' (expected Q, R or C)");
}

int FiniteGroup::power(int g, long long k) const {
    int n = element_order(g);
    long long r = k % n;
    if (r < 0) r += n;
    int acc = 0;
    for (long long i = 0; i < r; ++i) acc = mult[acc][g];
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int n = 1, cur = g;
    while (cur != 0) {
        cur = mult[cur][g];
        ++n;
    }
    return n;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int g = 0; g < order(); ++g) e = std::lcm(e, (long long)element_order(g));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mult[a][b] != mult[b][a]) return false;
    return true;
}

namespace {

void build_tables(FiniteGroup& g) {
    int n = g.order();
    std::map<Perm, int> index;
    for (int i = 0; i < n; ++i) index[g.elements[i]] = i;
    g.mult.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto it = index.find(g.elements[a].compose(g.elements[b]));
            icheck(it != index.end(), "element set not closed under composition");
            g.mult[a][b] = it->second;
            if (it->second == 0) g.inv[a] = b;  // a*b = e, so b = a^{-1}
        }
    }
    // a*b=e gives b as right inverse; confirm two-sidedness via table lookup
    for (int a = 0; a < n; ++a)
        icheck(g.mult[g.inv[a]][a] == 0, "inverse table inconsistent");
}

}  // namespace

FiniteGroup generate_group(int degree, const std::vector<Perm>& gens, int cap) {
    check(degree >= 1, err::InvalidPermutation, "degree must be at least 1");
    for (const Perm& p : gens) {
        check(p.degree() == degree, err::InvalidPermutation,
              "generator degree does not match group degree");
        check(p.is_valid(), err::InvalidPermutation, "generator is not a bijection");
    }

    FiniteGroup g;
    g.degree = degree;
    g.elements.push_back(Perm::identity(degree));
    g.word.emplace_back(-1, -1);
    std::map<Perm, int> index;
    index[g.elements[0]] = 0;

    // BFS over generator words; elements appear ordered by (word length,
    // lexicographic word), which pins the numbering downstream.
    for (size_t cur = 0; cur < g.elements.size(); ++cur) {
        for (size_t s = 0; s < gens.size(); ++s) {
            Perm cand = g.elements[cur].compose(gens[s]);
            if (index.emplace(cand, g.elements.size()).second) {
                g.elements.push_back(std::move(cand));
                g.word.emplace_back(static_cast<int>(cur), static_cast<int>(s));
                check(static_cast<int>(g.elements.size()) <= cap, err::OrderCapExceeded,
                      "group order exceeds cap " + std::to_string(cap));
            }
        }
    }

    for (const Perm& p : gens) g.generators.push_back(index.at(p));
    build_tables(g);
    return g;
}

FiniteGroup group_from_elements(int degree, std::vector<Perm> elems,
                                std::vector<int> generator_indices) {
    icheck(!elems.empty() && elems[0].is_identity(),
           "group_from_elements requires identity at index 0");
    FiniteGroup g;
    g.degree = degree;
    g.elements = std::move(elems);
    g.generators = std::move(generator_indices);
    g.word.assign(g.elements.size(), {-1, -1});
    build_tables(g);
    return g;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

Subgroup whole_group(const FiniteGroup& g) {
    Subgroup h;
    h.parent = &g;
    h.members.resize(g.order());
    std::iota(h.members.begin(), h.members.end(), 0);
    return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
    return Subgroup{&g, {0}};
}

Subgroup cyclic_subgroup(const FiniteGroup& g, int elem) {
    std::vector<int> mem{0};
    int cur = elem;
    while (cur != 0) {
        mem.push_back(cur);
        cur = g.mult[cur][elem];
    }
    std::sort(mem.begin(), mem.end());
    return Subgroup{&g, std::move(mem)};
}

Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> stack;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            stack.push_back(x);
        }
    };
    add(0);
    for (int s : seed) add(s);
    std::vector<int> mem = stack;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (size_t i = 0; i < mem.size(); ++i) {
            int a = g.mult[x][mem[i]], b = g.mult[mem[i]][x];
            if (!in[a]) { in[a] = 1; stack.push_back(a); mem.push_back(a); }
            if (!in[b]) { in[b] = 1; stack.push_back(b); mem.push_back(b); }
        }
        if (!in[g.inv[x]]) { in[g.inv[x]] = 1; stack.push_back(g.inv[x]); mem.push_back(g.inv[x]); }
    }
    std::sort(mem.begin(), mem.end());
    return Subgroup{&g, std::move(mem)};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const FiniteGroup& G = *h.parent;
    std::vector<int> mem;
    mem.reserve(h.members.size());
    for (int x : h.members) mem.push_back(G.conj(g, x));
    std::sort(mem.begin(), mem.end());
    return Subgroup{&G, std::move(mem)};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    // Layer-by-layer joins starting from the cyclic subgroups.
    std::set<std::vector<int>> cyclic;
    for (int e = 0; e < g.order(); ++e) cyclic.insert(cyclic_subgroup(g, e).members);

    std::set<std::vector<int>> known = cyclic;
    std::vector<std::vector<int>> frontier(known.begin(), known.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& a : frontier) {
            for (const auto& c : cyclic) {
                if (std::includes(a.begin(), a.end(), c.begin(), c.end())) continue;
                std::vector<int> seed = a;
                seed.insert(seed.end(), c.begin(), c.end());
                auto t = subgroup_closure(g, std::move(seed));
                if (known.insert(t.members).second) next.push_back(std::move(t.members));
            }
        }
        frontier = std::move(next);
    }

    std::vector<Subgroup> out;
    out.reserve(known.size());
    for (const auto& m : known) out.push_back(Subgroup{&g, m});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return out;
}

int SubgroupClassTable::class_of_subgroup(const Subgroup& h) const {
    auto it = std::lower_bound(
        subgroups.begin(), subgroups.end(), h, [](const Subgroup& a, const Subgroup& b) {
            if (a.order() != b.order()) return a.order() < b.order();
            return a.members < b.members;
        });
    icheck(it != subgroups.end() && it->members == h.members,
           "subgroup not found in class table");
    return class_of[it - subgroups.begin()];
}

SubgroupClassTable subgroup_classes(const FiniteGroup& g) {
    SubgroupClassTable t;
    t.subgroups = all_subgroups(g);
    int n = static_cast<int>(t.subgroups.size());
    t.class_of.assign(n, -1);

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[t.subgroups[i].members] = i;

    for (int i = 0; i < n; ++i) {
        if (t.class_of[i] != -1) continue;
        std::set<int> orbit;
        for (int x = 0; x < g.order(); ++x)
            orbit.insert(index.at(conjugate_subgroup(t.subgroups[i], x).members));
        int cls = static_cast<int>(t.classes.size());
        SubgroupClassTable::ConjClass c;
        c.subgroup_idxs.assign(orbit.begin(), orbit.end());
        c.rep = t.subgroups[*orbit.begin()];  // minimal under (order, lex) global sort
        t.classes.push_back(std::move(c));
        for (int j : orbit) t.class_of[j] = cls;
    }
    return t;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> mem;
    for (int x = 0; x < g.order(); ++x)
        if (conjugate_subgroup(h, x).members == h.members) mem.push_back(x);
    return Subgroup{&g, std::move(mem)};
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& num,
                             const Subgroup& den) {
    for (int d : den.members)
        icheck(num.contains(d), "quotient denominator not contained in numerator");
    for (int x : num.members)
        for (int d : den.members)
            icheck(den.contains(g.conj(x, d)), "quotient denominator not normal");

    QuotientGroup q;
    q.coset_of.assign(g.order(), -1);
    // Cosets x*den, keyed and ordered by minimal member.
    std::map<int, std::vector<int>> cosets;
    for (int x : num.members) {
        if (q.coset_of[x] != -1) continue;
        std::vector<int> coset;
        for (int d : den.members) coset.push_back(g.mult[x][d]);
        std::sort(coset.begin(), coset.end());
        cosets[coset[0]] = coset;
        for (int y : coset) q.coset_of[y] = 0;  // mark; renumber below
    }
    int k = 0;
    for (auto& [minm, coset] : cosets) {
        q.coset_rep.push_back(minm);
        for (int y : coset) q.coset_of[y] = k;
        ++k;
    }
    icheck(q.coset_rep[0] == 0, "identity coset must come first");

    std::vector<Perm> elems;
    for (int i = 0; i < k; ++i) {
        Perm p;
        p.img.resize(k);
        for (int j = 0; j < k; ++j)
            p.img[j] = q.coset_of[g.mult[q.coset_rep[i]][q.coset_rep[j]]];
        elems.push_back(std::move(p));
    }
    q.group = group_from_elements(k, std::move(elems));
    return q;
}

QuotientGroup weyl_group(const FiniteGroup& g, const Subgroup& h) {
    return quotient_group(g, normalizer(g, h), h);
}

FClassPartition f_conjugacy_classes(const FiniteGroup& g, FieldTag f) {
    int n = g.order();
    // Union-find over elements.
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

    if (f == FieldTag::Q) {
        // <g1>, <g2> conjugate in G.
        std::map<std::vector<int>, int> seen;  // canonical conjugate of <g> -> first element
        for (int x = 0; x < n; ++x) {
            Subgroup c = cyclic_subgroup(g, x);
            std::vector<int> canon = c.members;
            for (int y = 0; y < n; ++y)
                canon = std::min(canon, conjugate_subgroup(c, y).members);
            auto [it, fresh] = seen.emplace(std::move(canon), x);
            if (!fresh) unite(x, it->second);
        }
    } else {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) unite(x, g.conj(y, x));
        if (f == FieldTag::R)
            for (int x = 0; x < n; ++x) unite(x, g.inv[x]);
    }

    FClassPartition p;
    p.tag = f;
    p.class_of.assign(n, -1);
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
    std::vector<std::vector<int>> classes;
    for (auto& [root, mem] : groups) classes.push_back(std::move(mem));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    for (size_t c = 0; c < classes.size(); ++c) {
        p.rep.push_back(classes[c][0]);
        for (int x : classes[c]) p.class_of[x] = static_cast<int>(c);
    }
    p.classes = std::move(classes);
    return p;
}

Subgroup centralizer_f(const FiniteGroup& g, int elem, FieldTag f) {
    Subgroup cyc = cyclic_subgroup(g, elem);
    std::vector<int> mem;
    for (int x = 0; x < g.order(); ++x) {
        int c = g.conj(g.inv[x], elem);  // x^{-1} elem x
        bool in = false;
        switch (f) {
            case FieldTag::Q: in = cyc.contains(c); break;
            case FieldTag::R: in = (c == elem || c == g.inv[elem]); break;
            case FieldTag::C: in = (c == elem); break;
        }
        if (in) mem.push_back(x);
    }
    return Subgroup{&g, std::move(mem)};
}

QuotientGroup z_f(const FiniteGroup& g, int elem, FieldTag f) {
    return quotient_group(g, centralizer_f(g, elem, f), cyclic_subgroup(g, elem));
}

SubgroupGroup as_group(const Subgroup& h) {
    const FiniteGroup& G = *h.parent;
    SubgroupGroup s;
    s.to_parent = h.members;  // sorted, so identity (parent index 0) comes first
    std::vector<Perm> elems;
    elems.reserve(h.members.size());
    for (int m : h.members) elems.push_back(G.elements[m]);
    s.group = group_from_elements(G.degree, std::move(elems));
    return s;
}

}  // namespace eqeuler
