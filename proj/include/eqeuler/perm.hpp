#ifndef EQEULER_PERM_HPP
#define EQEULER_PERM_HPP

#include <cstdint>
#include <vector>

namespace eqeuler {

// Permutation of {0,...,degree-1}, stored as the image array.
// Composition is function composition: (a*b)(x) = a(b(x)).
struct Perm {
    std::vector<int32_t> img;

    Perm() = default;
    explicit Perm(std::vector<int32_t> images) : img(std::move(images)) {}

    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img.size()); }
    int32_t operator()(int32_t x) const { return img[x]; }

    bool is_identity() const;
    bool is_valid() const;  // bijection check

    Perm compose(const Perm& rhs) const;  // this after rhs
    Perm inverse() const;

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

}  // namespace eqeuler

#endif
