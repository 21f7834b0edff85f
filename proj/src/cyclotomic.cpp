#include "eqeuler/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "eqeuler/errors.hpp"

namespace eqeuler {

namespace {

// Phi_n by repeated exact division of x^n - 1 by Phi_d for proper divisors d.
std::vector<Int> compute_min_poly(int n, const std::map<int, std::vector<Int>>& cache) {
    std::vector<Int> poly(n + 1, Int(0));
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<Int>& div = cache.at(d);
        // poly /= div (exact division of monic-led polynomials)
        std::vector<Int> quo(poly.size() - div.size() + 1, Int(0));
        std::vector<Int> rem = poly;
        for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
            Int q = rem[i + div.size() - 1] / div.back();
            quo[i] = q;
            if (q == 0) continue;
            for (size_t j = 0; j < div.size(); ++j) rem[i + j] -= q * div[j];
        }
        for (const Int& r : rem) icheck(r == 0, "cyclotomic polynomial division not exact");
        poly = std::move(quo);
    }
    return poly;
}

std::map<int, std::vector<Int>>& poly_cache() {
    static std::map<int, std::vector<Int>> cache;
    return cache;
}
std::mutex& poly_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const std::vector<Int>& Cyclotomic::minimal_poly(int n) {
    std::lock_guard<std::mutex> lock(poly_mutex());
    auto& cache = poly_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0 && !cache.count(d)) cache[d] = compute_min_poly(d, cache);
    return cache.at(n);
}

int Cyclotomic::phi(int n) {
    return static_cast<int>(minimal_poly(n).size()) - 1;
}

Cyclotomic::Cyclotomic(int n, Rat constant) : n_(n), c_(phi(n), Rat(0)) {
    icheck(n >= 1, "conductor must be positive");
    if (phi(n) > 0) c_[0] = std::move(constant);
}

Cyclotomic Cyclotomic::from_dense(int n, std::vector<Rat> dense) {
    const std::vector<Int>& mp = minimal_poly(n);
    int deg = static_cast<int>(mp.size()) - 1;
    // Remainder mod Phi_n (monic).
    for (int i = static_cast<int>(dense.size()) - 1; i >= deg; --i) {
        Rat q = dense[i];
        if (q == 0) continue;
        for (int j = 0; j <= deg; ++j) dense[i - deg + j] -= q * Rat(mp[j]);
    }
    dense.resize(deg, Rat(0));
    Cyclotomic out(n);
    out.c_ = std::move(dense);
    return out;
}

Cyclotomic cyclo_from_powers(int n, const std::vector<Rat>& power_coeffs) {
    std::vector<Rat> dense(n, Rat(0));
    for (size_t k = 0; k < power_coeffs.size(); ++k)
        dense[k % n] += power_coeffs[k];
    return Cyclotomic::from_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::zeta_pow(int n, long long k) {
    long long r = k % n;
    if (r < 0) r += n;
    std::vector<Rat> dense(n, Rat(0));
    dense[static_cast<size_t>(r)] = 1;
    return from_dense(n, std::move(dense));
}

bool Cyclotomic::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    icheck(is_rational(), "cyclotomic value is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic out = *this;
    out += o;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    icheck(n_ == o.n_, "conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    icheck(n_ == o.n_, "conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic out = *this;
    out -= o;
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (Rat& x : out.c_) x = -x;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    icheck(n_ == o.n_, "conductor mismatch");
    // Scalar fast paths; rational factors need no polynomial reduction.
    if (is_rational()) return o * (c_.empty() ? Rat(0) : c_[0]);
    if (o.is_rational()) return *this * (o.c_.empty() ? Rat(0) : o.c_[0]);
    std::vector<Rat> dense(2 * c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            dense[i + j] += c_[i] * o.c_[j];
        }
    }
    return from_dense(n_, std::move(dense));
}

Cyclotomic Cyclotomic::operator*(const Rat& s) const {
    Cyclotomic out = *this;
    if (s == 0) {
        for (Rat& x : out.c_) x = 0;
        return out;
    }
    if (s == 1) return out;
    for (Rat& x : out.c_)
        if (x != 0) x *= s;
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return n_ == o.n_ && c_ == o.c_;
}

Cyclotomic Cyclotomic::galois(long long k) const {
    long long r = k % n_;
    if (r < 0) r += n_;
    icheck(std::gcd(static_cast<long long>(n_), r) == 1, "galois exponent not coprime");
    std::vector<Rat> dense(n_, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        dense[(i * static_cast<size_t>(r)) % n_] += c_[i];
    }
    return from_dense(n_, std::move(dense));
}

Cyclotomic Cyclotomic::conj() const { return galois(n_ - 1); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) fail(err::SingularMatrix, "inverse of zero cyclotomic");
    // Extended Euclid in Q[x] against Phi_n.
    const std::vector<Int>& mpint = minimal_poly(n_);
    std::vector<Rat> r0(mpint.begin(), mpint.end());
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients on *this

    auto deg = [](const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; };
    while (deg(r1) > 0) {
        std::vector<Rat> q(deg(r0) - deg(r1) + 1, Rat(0));
        std::vector<Rat> rem = r0;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            Rat f = rem[i + r1.size() - 1] / r1.back();
            q[i] = f;
            if (f == 0) continue;
            for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= f * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s_new = s0 - q * s1
        std::vector<Rat> snew(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    icheck(!r1.empty() && r1[0] != 0, "element not invertible mod Phi_n");
    for (Rat& x : s1) x /= r1[0];
    s1.resize(n_ == 1 ? 1 : static_cast<size_t>(phi(n_)) * 2, Rat(0));
    Cyclotomic out = from_dense(n_, std::move(s1));
    icheck((out * *this) == Cyclotomic(n_, Rat(1)), "inverse verification failed");
    return out;
}

Cyclotomic Cyclotomic::to_conductor(int m) const {
    icheck(m % n_ == 0, "target conductor must be a multiple");
    if (m == n_) return *this;
    int f = m / n_;
    std::vector<Rat> dense(m, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) dense[i * f] = c_[i];
    return from_dense(m, std::move(dense));
}

int Cyclotomic::compare(const Cyclotomic& o) const {
    if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace eqeuler
