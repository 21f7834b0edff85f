#ifndef EQEULER_TESTS_RANDOM_COMPLEX_HPP
#define EQEULER_TESTS_RANDOM_COMPLEX_HPP

#include <random>

#include "eqeuler/complex.hpp"

namespace eqeuler::testsupport {

// Random admissible G-complex: vertices form a disjoint union of coset
// spaces G/H for randomly chosen subgroups, simplices are G-orbits of random
// small vertex sets (closed up and validated; subdivided when the raw
// complex is inadmissible).
GComplex random_complex(const FiniteGroup& g, std::mt19937& rng);

}  // namespace eqeuler::testsupport

#endif
