#include "eqeuler/rational.hpp"

namespace eqeuler {

std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        check(den != 0, err::InvalidInput, "rational with zero denominator: " + s);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rat(num, den);
    } catch (const std::exception& e) {
        fail(err::InvalidInput, "malformed rational '" + s + "': " + e.what());
    }
}

long long int_to_ll(const Int& v) {
    icheck(v >= std::numeric_limits<long long>::min() &&
               v <= std::numeric_limits<long long>::max(),
           "integer out of 64-bit range");
    return v.convert_to<long long>();
}

int rank_rat(RatMat m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

RatMat inverse_rat(const RatMat& m) {
    size_t n = m.size();
    icheck(n > 0 && m[0].size() == n, "inverse_rat requires a square matrix");
    RatMat a = m;
    RatMat inv(n, RatVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) fail(err::SingularMatrix, "matrix is singular");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        Rat d = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat out(n, RatVec(m, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        icheck(a[i].size() == k, "mat_mul shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

RatVec mat_apply(const RatMat& a, const RatVec& v) {
    RatVec out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        icheck(a[i].size() == v.size(), "mat_apply shape mismatch");
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0) out[i] += a[i][j] * v[j];
    }
    return out;
}

}  // namespace eqeuler
