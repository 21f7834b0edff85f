#include "eqeuler/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "eqeuler/errors.hpp"

namespace eqeuler {

long long GComplex::total_simplices() const {
    long long t = 0;
    for (int d = 0; d <= top_dim(); ++d) t += count(d);
    return t;
}

long long GComplex::find(int d, std::span<const int32_t> t) const {
    if (d < 0 || d > top_dim()) return -1;
    int stride = d + 1;
    long long lo = 0, hi = count(d);
    while (lo < hi) {
        long long mid = (lo + hi) / 2;
        const int32_t* m = tuple(d, mid);
        int cmp = 0;
        for (int i = 0; i < stride; ++i) {
            if (m[i] != t[i]) {
                cmp = m[i] < t[i] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0)
            lo = mid + 1;
        else if (cmp > 0)
            hi = mid;
        else
            return mid;
    }
    return -1;
}

void GComplex::apply(int g, int d, long long idx, int32_t* out) const {
    const int32_t* t = tuple(d, idx);
    const Perm& p = action[g];
    for (int i = 0; i <= d; ++i) out[i] = p.img[t[i]];
    std::sort(out, out + d + 1);
}

Int GComplex::euler_char() const {
    Int chi = 0;
    for (int d = 0; d <= top_dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * Int(count(d));
    return chi;
}

Int euler_char_masked(const GComplex& x, const SimplexMask& mask) {
    Int chi = 0;
    for (int d = 0; d <= x.top_dim(); ++d) {
        long long c = 0;
        for (char b : mask[d]) c += b ? 1 : 0;
        chi += (d % 2 == 0 ? 1 : -1) * Int(c);
    }
    return chi;
}

namespace {

void sort_dimension(std::vector<int32_t>& flat, int stride) {
    long long n = static_cast<long long>(flat.size()) / stride;
    std::vector<long long> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](long long a, long long b) {
        const int32_t* pa = &flat[a * stride];
        const int32_t* pb = &flat[b * stride];
        for (int i = 0; i < stride; ++i)
            if (pa[i] != pb[i]) return pa[i] < pb[i];
        return false;
    });
    std::vector<int32_t> out(flat.size());
    for (long long i = 0; i < n; ++i)
        std::copy_n(&flat[idx[i] * stride], stride, &out[i * stride]);
    flat = std::move(out);
}

// Extend generator vertex images to the whole group along the BFS word data
// and verify the result is an action.
std::vector<Perm> extend_action(const FiniteGroup& g, int nverts,
                                const std::vector<Perm>& gen_images) {
    check(gen_images.size() == g.generators.size(), err::InvalidActionData,
          "need one vertex permutation per group generator");
    for (const Perm& p : gen_images) {
        check(p.degree() == nverts, err::InvalidActionData,
              "vertex permutation degree mismatch");
        check(p.is_valid(), err::InvalidActionData, "vertex image is not a permutation");
    }
    std::vector<Perm> act(g.order());
    act[0] = Perm::identity(nverts);
    for (int i = 1; i < g.order(); ++i) {
        auto [parent, slot] = g.word[i];
        icheck(parent >= 0, "group lacks generator word data");
        act[i] = act[parent].compose(gen_images[slot]);
    }
    for (int a = 0; a < g.order(); ++a)
        for (size_t s = 0; s < g.generators.size(); ++s)
            check(act[g.mult[a][g.generators[s]]] == act[a].compose(gen_images[s]),
                  err::InvalidActionData,
                  "generator images do not extend to a group action");
    return act;
}

void check_action_simplicial(const GComplex& x) {
    std::vector<int32_t> buf;
    for (int g : x.group->generators)
        for (int d = 0; d <= x.top_dim(); ++d) {
            buf.resize(d + 1);
            for (long long i = 0; i < x.count(d); ++i) {
                x.apply(g, d, i, buf.data());
                check(x.find(d, buf) >= 0, err::NotSimplicialAction,
                      "a generator image of a simplex is not a simplex");
            }
        }
}

}  // namespace

GComplex build_complex(const FiniteGroup& g, int nverts,
                       const std::vector<std::vector<int32_t>>& faces,
                       const std::vector<Perm>& generator_images) {
    check(nverts >= 1, err::InvalidInput, "complex needs at least one vertex");
    std::vector<std::set<std::vector<int32_t>>> closure;
    for (const auto& face : faces) {
        std::vector<int32_t> f = face;
        std::sort(f.begin(), f.end());
        check(!f.empty() && f.front() >= 0 && f.back() < nverts,
              err::InvalidInput, "face vertex out of range");
        check(std::adjacent_find(f.begin(), f.end()) == f.end(), err::InvalidInput,
              "face has a repeated vertex");
        int k = static_cast<int>(f.size());
        if (static_cast<int>(closure.size()) < k) closure.resize(k);
        for (unsigned m = 1; m < (1u << k); ++m) {
            std::vector<int32_t> sub;
            for (int i = 0; i < k; ++i)
                if (m & (1u << i)) sub.push_back(f[i]);
            closure[sub.size() - 1].insert(std::move(sub));
        }
    }
    GComplex x;
    x.group = std::make_shared<FiniteGroup>(g);
    x.nverts = nverts;
    x.simp.resize(closure.size());
    for (size_t d = 0; d < closure.size(); ++d) {
        x.simp[d].reserve(closure[d].size() * (d + 1));
        for (const auto& t : closure[d])
            x.simp[d].insert(x.simp[d].end(), t.begin(), t.end());
    }
    // Every vertex must carry a 0-simplex, or fixed-point data would see
    // phantom components.
    check(!x.simp.empty() && x.count(0) == nverts, err::InvalidInput,
          "every vertex must appear in some simplex");
    x.action = extend_action(*x.group, nverts, generator_images);
    check_action_simplicial(x);
    return x;
}

bool is_admissible(const GComplex& x) {
    std::vector<int32_t> buf;
    for (int g = 1; g < x.group->order(); ++g) {
        const Perm& p = x.action[g];
        for (int d = 1; d <= x.top_dim(); ++d) {
            buf.resize(d + 1);
            for (long long i = 0; i < x.count(d); ++i) {
                x.apply(g, d, i, buf.data());
                const int32_t* t = x.tuple(d, i);
                if (!std::equal(buf.begin(), buf.end(), t)) continue;
                for (int v = 0; v <= d; ++v)
                    if (p.img[t[v]] != t[v]) return false;  // setwise but not vertexwise
            }
        }
    }
    return true;
}

GComplex barycentric_subdivide(const GComplex& x) {
    int xd = x.top_dim();
    std::vector<long long> offset(xd + 2, 0);
    for (int d = 0; d <= xd; ++d) offset[d + 1] = offset[d] + x.count(d);
    long long nv = offset[xd + 1];

    GComplex sd;
    sd.group = x.group;
    sd.nverts = static_cast<int>(nv);
    sd.simp.resize(xd + 1);

    // Chains tau_0 < tau_1 < ... in the face poset, one DFS branch per chain,
    // rooted at each simplex (the chain maximum).
    std::vector<int32_t> chain;  // vertex ids, decreasing dimension
    std::vector<int32_t> sub;
    std::function<void(int, long long)> extend = [&](int d, long long idx) {
        chain.push_back(static_cast<int32_t>(offset[d] + idx));
        int len = static_cast<int>(chain.size());
        auto& bucket = sd.simp[len - 1];
        for (int i = len - 1; i >= 0; --i) bucket.push_back(chain[i]);
        const int32_t* t = x.tuple(d, idx);
        for (unsigned m = 1; m + 1 < (1u << (d + 1)); ++m) {
            sub.clear();
            for (int i = 0; i <= d; ++i)
                if (m & (1u << i)) sub.push_back(t[i]);
            int fd = static_cast<int>(sub.size()) - 1;
            long long fidx = x.find(fd, sub);
            icheck(fidx >= 0, "complex not downward closed");
            extend(fd, fidx);
        }
        chain.pop_back();
    };
    for (int d = 0; d <= xd; ++d)
        for (long long i = 0; i < x.count(d); ++i) extend(d, i);
    for (int d = 0; d <= xd; ++d) sort_dimension(sd.simp[d], d + 1);

    // The action permutes chains through the original action on simplices.
    sd.action.reserve(x.group->order());
    std::vector<int32_t> buf;
    for (int g = 0; g < x.group->order(); ++g) {
        Perm p;
        p.img.resize(nv);
        for (int d = 0; d <= xd; ++d) {
            buf.resize(d + 1);
            for (long long i = 0; i < x.count(d); ++i) {
                x.apply(g, d, i, buf.data());
                long long j = x.find(d, buf);
                icheck(j >= 0, "action does not map simplices to simplices");
                p.img[offset[d] + i] = static_cast<int32_t>(offset[d] + j);
            }
        }
        sd.action.push_back(std::move(p));
    }
    return sd;
}

GComplex validate_and_subdivide(GComplex x) {
    if (is_admissible(x)) return x;
    GComplex sd = barycentric_subdivide(x);
    icheck(is_admissible(sd), "barycentric subdivision failed to be admissible");
    return sd;
}

GComplex join_complexes(const GComplex& a, const GComplex& b) {
    icheck(a.group->elements == b.group->elements && a.group->degree == b.group->degree,
           "join requires complexes over the same group");
    GComplex j;
    j.group = a.group;
    j.nverts = a.nverts + b.nverts;
    int jd = a.top_dim() + b.top_dim() + 1;
    j.simp.resize(jd + 1);

    for (int d = 0; d <= jd; ++d) {
        auto& bucket = j.simp[d];
        for (int p = -1; p <= std::min(d, a.top_dim()); ++p) {
            int q = d - 1 - p;
            if (q < -1 || q > b.top_dim()) continue;
            long long ca = p < 0 ? 1 : a.count(p);
            long long cb = q < 0 ? 1 : b.count(q);
            if (p < 0 && q < 0) continue;
            for (long long i = 0; i < ca; ++i)
                for (long long k = 0; k < cb; ++k) {
                    if (p >= 0) {
                        const int32_t* t = a.tuple(p, i);
                        bucket.insert(bucket.end(), t, t + p + 1);
                    }
                    if (q >= 0) {
                        const int32_t* t = b.tuple(q, k);
                        for (int v = 0; v <= q; ++v)
                            bucket.push_back(t[v] + a.nverts);
                    }
                }
        }
        sort_dimension(bucket, d + 1);
    }
    j.action.reserve(j.group->order());
    for (int g = 0; g < j.group->order(); ++g) {
        Perm p;
        p.img.resize(j.nverts);
        for (int v = 0; v < a.nverts; ++v) p.img[v] = a.action[g].img[v];
        for (int v = 0; v < b.nverts; ++v) p.img[a.nverts + v] = b.action[g].img[v] + a.nverts;
        j.action.push_back(std::move(p));
    }
    return j;
}

namespace {

GComplex piece_complex(const FiniteGroup& g, const RepPiece& piece) {
    size_t ngens = g.generators.size();
    switch (piece.kind) {
        case RepPiece::Kind::TrivialLine: {
            std::vector<Perm> imgs(ngens, Perm::identity(2));
            return build_complex(g, 2, {{0}, {1}}, imgs);
        }
        case RepPiece::Kind::SignLine: {
            check(piece.signs.size() == ngens, err::InvalidActionData,
                  "sign_line needs one sign per generator");
            std::vector<Perm> imgs;
            for (int s : piece.signs) {
                check(s == 1 || s == -1, err::InvalidActionData, "signs must be +1 or -1");
                imgs.push_back(s == 1 ? Perm::identity(2) : Perm({1, 0}));
            }
            return build_complex(g, 2, {{0}, {1}}, imgs);
        }
        case RepPiece::Kind::RotationPlane: {
            int m = piece.modulus;
            check(m >= 1, err::InvalidActionData, "rotation modulus must be positive");
            check(piece.amounts.size() == ngens, err::InvalidActionData,
                  "rotation_plane needs one amount per generator");
            int k = m >= 3 ? m : (m == 2 ? 4 : 3);
            int scale = k / m;
            std::vector<Perm> imgs;
            for (int a : piece.amounts) {
                check(a >= 0 && a < m, err::InvalidActionData,
                      "rotation amount out of range");
                Perm p;
                p.img.resize(k);
                for (int i = 0; i < k; ++i) p.img[i] = (i + a * scale) % k;
                imgs.push_back(std::move(p));
            }
            std::vector<std::vector<int32_t>> faces;
            for (int i = 0; i < k; ++i) faces.push_back({i, (i + 1) % k});
            return build_complex(g, k, faces, imgs);
        }
        case RepPiece::Kind::DihedralPlane: {
            int k = piece.ngon;
            check(k >= 3, err::InvalidActionData, "polygon needs at least 3 vertices");
            check(piece.vertex_images.size() == ngens, err::InvalidActionData,
                  "dihedral_plane needs one vertex permutation per generator");
            for (const Perm& p : piece.vertex_images)
                check(p.degree() == k && p.is_valid(), err::InvalidActionData,
                      "polygon vertex image is not a permutation of the polygon");
            std::vector<std::vector<int32_t>> faces;
            for (int i = 0; i < k; ++i) faces.push_back({i, (i + 1) % k});
            return build_complex(g, k, faces, piece.vertex_images);
        }
    }
    fail(err::InvalidActionData, "unknown representation piece");
}

}  // namespace

GComplex rep_sphere(const FiniteGroup& g, const std::vector<RepPiece>& pieces) {
    check(!pieces.empty(), err::InvalidActionData, "rep_sphere needs at least one piece");
    GComplex acc = piece_complex(g, pieces[0]);
    for (size_t i = 1; i < pieces.size(); ++i)
        acc = join_complexes(acc, piece_complex(g, pieces[i]));
    return validate_and_subdivide(std::move(acc));
}

namespace {

Components components_of_mask(const GComplex& x, const std::vector<char>& vfixed,
                              const SimplexMask& in_fixed) {
    int n = x.nverts;
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    if (x.top_dim() >= 1) {
        for (long long i = 0; i < x.count(1); ++i) {
            if (!in_fixed[1][i]) continue;
            const int32_t* t = x.tuple(1, i);
            uf[find(t[0])] = find(t[1]);
        }
    }
    Components c;
    c.comp_of_vertex.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!vfixed[v]) continue;
        int r = find(v);
        if (c.comp_of_vertex[r] == -1) c.comp_of_vertex[r] = c.count++;
        c.comp_of_vertex[v] = c.comp_of_vertex[r];
    }
    return c;
}

std::vector<char> fixed_vertices(const GComplex& x, const Subgroup& h) {
    std::vector<char> vf(x.nverts, 1);
    for (int m : h.members) {
        if (m == 0) continue;
        const Perm& p = x.action[m];
        for (int v = 0; v < x.nverts; ++v)
            if (p.img[v] != v) vf[v] = 0;
    }
    return vf;
}

SimplexMask fixed_mask(const GComplex& x, const std::vector<char>& vfixed) {
    SimplexMask mask(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d) {
        mask[d].assign(x.count(d), 0);
        for (long long i = 0; i < x.count(d); ++i) {
            const int32_t* t = x.tuple(d, i);
            bool all = true;
            for (int v = 0; v <= d && all; ++v) all = vfixed[t[v]];
            mask[d][i] = all;
        }
    }
    return mask;
}

}  // namespace

SubgroupFixed fixed_of_subgroup(const GComplex& x, const Subgroup& h) {
    SubgroupFixed f;
    f.vfixed = fixed_vertices(x, h);
    f.in_fixed = fixed_mask(x, f.vfixed);
    f.comps = components_of_mask(x, f.vfixed, f.in_fixed);
    return f;
}

FixedData fixed_data(const GComplex& x) {
    FixedData fd;
    fd.classes = subgroup_classes(*x.group);
    const FiniteGroup& g = *x.group;

    for (const auto& cls : fd.classes.classes) {
        FixedData::ClassData cd;
        cd.vfixed = fixed_vertices(x, cls.rep);
        cd.in_fixed = fixed_mask(x, cd.vfixed);
        cd.comps = components_of_mask(x, cd.vfixed, cd.in_fixed);

        // X^{>H}: closed simplices whose pointwise stabilizer strictly
        // contains H (the stabilizer contains H automatically inside X^H).
        int horder = cls.rep.order();
        cd.in_bigger.resize(x.top_dim() + 1);
        for (int d = 0; d <= x.top_dim(); ++d) {
            cd.in_bigger[d].assign(x.count(d), 0);
            for (long long i = 0; i < x.count(d); ++i) {
                if (!cd.in_fixed[d][i]) continue;
                const int32_t* t = x.tuple(d, i);
                int stab = 0;
                for (int e = 0; e < g.order(); ++e) {
                    bool fixes = true;
                    for (int v = 0; v <= d && fixes; ++v)
                        fixes = x.action[e].img[t[v]] == t[v];
                    if (fixes) ++stab;
                }
                cd.in_bigger[d][i] = stab > horder;
            }
        }

        cd.weyl = weyl_group(g, cls.rep);
        int wn = cd.weyl.group.order();
        // Representative vertex per component (minimal).
        std::vector<int> comp_vertex(cd.comps.count, -1);
        for (int v = 0; v < x.nverts; ++v) {
            int c = cd.comps.comp_of_vertex[v];
            if (c >= 0 && comp_vertex[c] == -1) comp_vertex[c] = v;
        }
        cd.comp_image.assign(static_cast<size_t>(wn) * cd.comps.count, -1);
        for (int w = 0; w < wn; ++w) {
            int amb = cd.weyl.coset_rep[w];
            for (int c = 0; c < cd.comps.count; ++c) {
                int img = cd.comps.comp_of_vertex[x.action[amb].img[comp_vertex[c]]];
                icheck(img >= 0, "Weyl action leaves the fixed subcomplex");
                cd.comp_image[static_cast<size_t>(w) * cd.comps.count + c] = img;
            }
        }
        cd.orbit_of_comp.assign(cd.comps.count, -1);
        for (int c = 0; c < cd.comps.count; ++c) {
            if (cd.orbit_of_comp[c] != -1) continue;
            int orbit = static_cast<int>(cd.orbits.size());
            std::set<int> members;
            for (int w = 0; w < wn; ++w) members.insert(cd.comp_img(w, c));
            cd.orbits.emplace_back(members.begin(), members.end());
            for (int m : cd.orbits.back()) cd.orbit_of_comp[m] = orbit;
        }
        cd.comp_isotropy.resize(cd.comps.count);
        for (int c = 0; c < cd.comps.count; ++c)
            for (int w = 0; w < wn; ++w)
                if (cd.comp_img(w, c) == c) cd.comp_isotropy[c].push_back(w);

        fd.per_class.push_back(std::move(cd));
    }
    return fd;
}

UGBasis ug_basis(const FixedData& fd) {
    UGBasis b;
    for (size_t ci = 0; ci < fd.per_class.size(); ++ci)
        for (size_t o = 0; o < fd.per_class[ci].orbits.size(); ++o)
            b.items.push_back({static_cast<int>(ci), static_cast<int>(o),
                               fd.per_class[ci].orbits[o][0]});
    return b;
}

bool UGElement::is_zero() const {
    for (const Int& c : coeffs)
        if (c != 0) return false;
    return true;
}

SimplexMask component_mask(const GComplex& x, const SimplexMask& in_fixed,
                           const Components& comps, int comp) {
    SimplexMask m(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d) {
        m[d].assign(x.count(d), 0);
        for (long long i = 0; i < x.count(d); ++i)
            if (in_fixed[d][i] && comps.comp_of_vertex[x.tuple(d, i)[0]] == comp)
                m[d][i] = 1;
    }
    return m;
}

SimplexMask mask_minus(const SimplexMask& a, const SimplexMask& b) {
    SimplexMask out = a;
    for (size_t d = 0; d < out.size(); ++d)
        for (size_t i = 0; i < out[d].size(); ++i)
            if (b[d][i]) out[d][i] = 0;
    return out;
}

namespace {

// Orbit scan of `acting` (vertex permutations of the elements of a finite
// group) over the masked simplices of dimension d. Returns per-orbit
// stabilizer sizes.
std::vector<int> orbit_stabilizers(const GComplex& x, int d,
                                   const std::vector<char>& mask,
                                   const std::vector<Perm>& acting) {
    std::vector<int> stabs;
    long long n = x.count(d);
    std::vector<char> visited(n, 0);
    std::vector<int32_t> buf(d + 1);
    for (long long i = 0; i < n; ++i) {
        if (!mask[i] || visited[i]) continue;
        int stab = 0;
        for (const Perm& p : acting) {
            const int32_t* t = x.tuple(d, i);
            for (int v = 0; v <= d; ++v) buf[v] = p.img[t[v]];
            std::sort(buf.begin(), buf.end());
            long long j = x.find(d, buf);
            icheck(j >= 0 && mask[j], "acting permutations leave the masked set");
            if (j == i) ++stab;
            visited[j] = 1;
        }
        stabs.push_back(stab);
    }
    return stabs;
}

}  // namespace

UGElement universal_euler_char(const GComplex& x, const FixedData& fd,
                               const UGBasis& basis) {
    UGElement u;
    u.coeffs.reserve(basis.items.size());
    for (const auto& item : basis.items) {
        const auto& cd = fd.per_class[item.class_idx];
        int comp = item.rep_component;
        std::vector<Perm> acting;
        for (int w : cd.comp_isotropy[comp])
            acting.push_back(x.action[cd.weyl.coset_rep[w]]);
        SimplexMask cm = mask_minus(
            component_mask(x, cd.in_fixed, cd.comps, comp), cd.in_bigger);
        Int coeff = 0;
        for (int d = 0; d <= x.top_dim(); ++d) {
            auto stabs = orbit_stabilizers(x, d, cm[d], acting);
            Int orbits(static_cast<long long>(stabs.size()));
            coeff += (d % 2 == 0) ? orbits : -orbits;
        }
        u.coeffs.push_back(coeff);
    }
    return u;
}

Rat orbifold_euler_char_masked(const GComplex& x, const SimplexMask& mask,
                               const std::vector<Perm>& acting) {
    icheck(!acting.empty(), "orbifold characteristic needs a group action");
    Rat chi(0);
    for (int d = 0; d <= x.top_dim(); ++d) {
        Rat level(0);
        for (int stab : orbit_stabilizers(x, d, mask[d], acting))
            level += Rat(1, stab);
        chi += (d % 2 == 0) ? level : -level;
    }
    // For a finite acting group this must equal chi(mask)/|A|.
    Rat flat(euler_char_masked(x, mask), Int(static_cast<long long>(acting.size())));
    icheck(chi == flat, "orbifold Euler characteristic mismatch with chi/|A|");
    return chi;
}

Rat orbifold_euler_char(const GComplex& x) {
    SimplexMask all(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d) all[d].assign(x.count(d), 1);
    return orbifold_euler_char_masked(x, all, x.action);
}

BurnsideElement pushforward_to_point(const FixedData& fd, const UGBasis& basis,
                                     const UGElement& u) {
    BurnsideElement b;
    b.coeffs.assign(fd.classes.classes.size(), Int(0));
    for (size_t i = 0; i < basis.items.size(); ++i)
        b.coeffs[basis.items[i].class_idx] += u.coeffs[i];
    return b;
}

}  // namespace eqeuler
