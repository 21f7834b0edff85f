#ifndef EQEULER_RATIONAL_HPP
#define EQEULER_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "eqeuler/errors.hpp"

namespace eqeuler {

// Exact arithmetic everywhere; no floating point in any mathematical path.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Serialized form is always "a/b" with gcd(a,b)=1 and b>0 (boost keeps
// rationals canonical, so numerator/denominator can be used directly).
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

long long int_to_ll(const Int& v);

inline Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

// Dense exact linear algebra on the small matrices this project produces.
int rank_rat(RatMat m);
RatMat inverse_rat(const RatMat& m);  // throws SingularMatrix
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& a, const RatVec& v);

}  // namespace eqeuler

#endif
