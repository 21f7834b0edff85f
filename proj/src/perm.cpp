#include "eqeuler/perm.hpp"

#include <numeric>

namespace eqeuler {

Perm Perm::identity(int degree) {
    Perm p;
    p.img.resize(degree);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img[i] != i) return false;
    return true;
}

bool Perm::is_valid() const {
    std::vector<char> seen(img.size(), 0);
    for (int32_t v : img) {
        if (v < 0 || v >= static_cast<int32_t>(img.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm Perm::compose(const Perm& rhs) const {
    Perm out;
    out.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) out.img[i] = img[rhs.img[i]];
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) out.img[img[i]] = static_cast<int32_t>(i);
    return out;
}

}  // namespace eqeuler
