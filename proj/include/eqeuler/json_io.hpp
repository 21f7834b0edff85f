#ifndef EQEULER_JSON_IO_HPP
#define EQEULER_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "eqeuler/complex.hpp"
#include "eqeuler/cyclotomic.hpp"

namespace eqeuler {

using Json = nlohmann::json;

// Group JSON: {"degree": n, "generators": [[imageArray], ...]}.
FiniteGroup parse_group(const Json& j, int cap = kDefaultOrderCap);
Json group_to_json(const FiniteGroup& g);

// Complex JSON: {"vertices": v, "simplices": [[v...], ...] (maximal faces
// suffice), "action": {"generator_images": [[...], ...]}}.
GComplex parse_complex(const Json& j, const FiniteGroup& g);
Json complex_to_json(const GComplex& x);  // emits maximal faces

// {"e": e, "coeffs": ["a/b", ...]} with one entry per power of zeta_e
// (entries above the minimal-polynomial degree are zero).
Json cyclotomic_to_json(const Cyclotomic& c);

Json rat_vec_to_json(const RatVec& v);
Json int_vec_to_json(const IntVec& v);
Json int_mat_to_json(const IntMat& m);

// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string fingerprint(const Json& j);

}  // namespace eqeuler

#endif
