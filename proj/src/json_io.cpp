#include "eqeuler/json_io.hpp"

#include <algorithm>

#include "eqeuler/errors.hpp"

namespace eqeuler {

namespace {

std::vector<int32_t> parse_int_array(const Json& j, const char* what) {
    check(j.is_array(), err::InvalidInput, std::string(what) + " must be an array");
    std::vector<int32_t> out;
    for (const auto& v : j) {
        check(v.is_number_integer(), err::InvalidInput,
              std::string(what) + " must hold integers");
        out.push_back(v.get<int32_t>());
    }
    return out;
}

}  // namespace

FiniteGroup parse_group(const Json& j, int cap) {
    check(j.is_object() && j.contains("degree") && j.contains("generators"),
          err::InvalidInput, "group JSON needs 'degree' and 'generators'");
    check(j["degree"].is_number_integer(), err::InvalidInput, "degree must be an integer");
    int degree = j["degree"].get<int>();
    std::vector<Perm> gens;
    for (const auto& a : j["generators"]) gens.emplace_back(parse_int_array(a, "generator"));
    return generate_group(degree, gens, cap);
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["degree"] = g.degree;
    Json gens = Json::array();
    for (int gi : g.generators) {
        Json img = Json::array();
        for (int32_t v : g.elements[gi].img) img.push_back(v);
        gens.push_back(std::move(img));
    }
    j["generators"] = std::move(gens);
    return j;
}

GComplex parse_complex(const Json& j, const FiniteGroup& g) {
    check(j.is_object() && j.contains("vertices") && j.contains("simplices"),
          err::InvalidInput, "complex JSON needs 'vertices' and 'simplices'");
    int nverts = j["vertices"].get<int>();
    std::vector<std::vector<int32_t>> faces;
    for (const auto& f : j["simplices"]) faces.push_back(parse_int_array(f, "simplex"));
    std::vector<Perm> images;
    if (j.contains("action")) {
        check(j["action"].contains("generator_images"), err::InvalidInput,
              "complex action needs 'generator_images'");
        for (const auto& a : j["action"]["generator_images"])
            images.emplace_back(parse_int_array(a, "generator image"));
    } else {
        images.assign(g.generators.size(), Perm::identity(nverts));
    }
    return build_complex(g, nverts, faces, images);
}

Json complex_to_json(const GComplex& x) {
    Json j;
    j["vertices"] = x.nverts;
    // Maximal faces: simplices that are facets of no higher simplex.
    Json faces = Json::array();
    for (int d = x.top_dim(); d >= 0; --d) {
        std::vector<char> is_face(x.count(d), 0);
        if (d < x.top_dim()) {
            std::vector<int32_t> sub(d + 1);
            for (long long i = 0; i < x.count(d + 1); ++i) {
                const int32_t* t = x.tuple(d + 1, i);
                for (int drop = 0; drop <= d + 1; ++drop) {
                    int k = 0;
                    for (int v = 0; v <= d + 1; ++v)
                        if (v != drop) sub[k++] = t[v];
                    long long f = x.find(d, sub);
                    icheck(f >= 0, "complex not downward closed");
                    is_face[f] = 1;
                }
            }
        }
        for (long long i = 0; i < x.count(d); ++i) {
            if (is_face[i]) continue;
            Json t = Json::array();
            for (int v = 0; v <= d; ++v) t.push_back(x.tuple(d, i)[v]);
            faces.push_back(std::move(t));
        }
    }
    // Deterministic face order: by dimension, then lexicographic.
    std::sort(faces.begin(), faces.end(), [](const Json& a, const Json& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    j["simplices"] = std::move(faces);
    Json imgs = Json::array();
    for (int gi : x.group->generators) {
        Json img = Json::array();
        for (int32_t v : x.action[gi].img) img.push_back(v);
        imgs.push_back(std::move(img));
    }
    j["action"] = Json{{"generator_images", std::move(imgs)}};
    return j;
}

Json cyclotomic_to_json(const Cyclotomic& c) {
    Json j;
    j["e"] = c.conductor();
    Json coeffs = Json::array();
    for (const Rat& r : c.coeffs()) coeffs.push_back(rat_to_string(r));
    for (int i = static_cast<int>(c.coeffs().size()); i < c.conductor(); ++i)
        coeffs.push_back("0/1");
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json rat_vec_to_json(const RatVec& v) {
    Json j = Json::array();
    for (const Rat& r : v) j.push_back(rat_to_string(r));
    return j;
}

Json int_vec_to_json(const IntVec& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(int_to_ll(x));
    return j;
}

Json int_mat_to_json(const IntMat& m) {
    Json j = Json::array();
    for (const IntVec& row : m) j.push_back(int_vec_to_json(row));
    return j;
}

std::string fingerprint(const Json& j) {
    std::string s = j.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace eqeuler
