#ifndef EQEULER_CYCLOTOMIC_HPP
#define EQEULER_CYCLOTOMIC_HPP

#include <vector>

#include "eqeuler/rational.hpp"

namespace eqeuler {

// Element of Q(zeta_n). Stored as a polynomial in zeta_n of degree < phi(n),
// i.e. the canonical remainder mod the n-th cyclotomic polynomial. The
// reduction is fixed and idempotent, so equality is coefficient equality.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(int n, Rat constant = Rat(0));

    static Cyclotomic zeta_pow(int n, long long k);
    // Integer coefficients of Phi_n, cached.
    static const std::vector<Int>& minimal_poly(int n);
    static int phi(int n);

    int conductor() const { return n_; }
    // Coefficients over the basis 1, zeta, ..., zeta^{phi(n)-1}.
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic operator*(const Rat& s) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Galois action zeta -> zeta^k, gcd(k, n) = 1. conj() is k = -1.
    Cyclotomic galois(long long k) const;
    Cyclotomic conj() const;

    Cyclotomic inverse() const;  // throws SingularMatrix on zero

    // Reinterpret in Q(zeta_m) for n | m.
    Cyclotomic to_conductor(int m) const;

    // Total order (conductor, then coefficient lex); used only to fix
    // deterministic basis orderings.
    int compare(const Cyclotomic& o) const;

private:
    int n_;
    std::vector<Rat> c_;

    static Cyclotomic from_dense(int n, std::vector<Rat> dense);  // reduces mod Phi_n
    friend Cyclotomic cyclo_from_powers(int n, const std::vector<Rat>& power_coeffs);
};

// Sum of power_coeffs[k] * zeta_n^k for k = 0..n-1, reduced to canonical form.
Cyclotomic cyclo_from_powers(int n, const std::vector<Rat>& power_coeffs);

}  // namespace eqeuler

#endif
