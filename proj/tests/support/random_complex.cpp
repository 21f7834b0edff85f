#include "random_complex.hpp"

#include <algorithm>
#include <set>

namespace eqeuler::testsupport {

GComplex random_complex(const FiniteGroup& g, std::mt19937& rng) {
    std::vector<Subgroup> subs = all_subgroups(g);

    // Vertex parts: coset spaces of randomly chosen subgroups.
    int nparts = 1 + static_cast<int>(rng() % 2);
    std::vector<std::vector<int>> vertex_of_coset;  // per part: coset id -> vertex
    std::vector<std::vector<int>> coset_of;         // per part: element -> coset id
    int nverts = 0;
    for (int part = 0; part < nparts; ++part) {
        const Subgroup& h = subs[rng() % subs.size()];
        std::vector<int> cos(g.order(), -1);
        std::vector<int> verts;
        for (int x = 0; x < g.order(); ++x) {
            if (cos[x] != -1) continue;
            int id = static_cast<int>(verts.size());
            verts.push_back(nverts++);
            for (int m : h.members) cos[g.mult[x][m]] = id;
        }
        vertex_of_coset.push_back(std::move(verts));
        coset_of.push_back(std::move(cos));
    }

    // Vertex permutation of a group element: left translation on each part.
    auto vertex_perm = [&](int e) {
        Perm p;
        p.img.resize(nverts);
        for (int part = 0; part < nparts; ++part)
            for (int x = 0; x < g.order(); ++x) {
                int from = vertex_of_coset[part][coset_of[part][x]];
                int to = vertex_of_coset[part][coset_of[part][g.mult[e][x]]];
                p.img[from] = to;
            }
        return p;
    };
    std::vector<Perm> all_perms;
    for (int e = 0; e < g.order(); ++e) all_perms.push_back(vertex_perm(e));

    std::vector<std::vector<int32_t>> faces;
    for (int v = 0; v < nverts; ++v) faces.push_back({v});
    int nseeds = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < nseeds; ++s) {
        int size = std::min(nverts, 2 + static_cast<int>(rng() % 3));
        if (size < 2) break;
        std::set<int32_t> seed;
        while (static_cast<int>(seed.size()) < size)
            seed.insert(static_cast<int32_t>(rng() % nverts));
        // The whole G-orbit keeps the face family action-stable.
        for (int e = 0; e < g.order(); ++e) {
            std::vector<int32_t> img;
            for (int32_t v : seed) img.push_back(all_perms[e].img[v]);
            std::sort(img.begin(), img.end());
            faces.push_back(std::move(img));
        }
    }

    std::vector<Perm> gen_images;
    for (int gi : g.generators) gen_images.push_back(all_perms[gi]);
    return validate_and_subdivide(build_complex(g, nverts, faces, gen_images));
}

}  // namespace eqeuler::testsupport
