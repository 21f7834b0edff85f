#include "eqeuler/char_table.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "eqeuler/errors.hpp"

namespace eqeuler {

namespace {

// ---- F_p arithmetic (p < 2^31, products fit in uint64) ----

struct Fp {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

using FpVec = std::vector<uint64_t>;
using FpMat = std::vector<FpVec>;

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p = 1 mod e with p > lower.
long long find_prime(int e, long long lower) {
    long long p = ((lower / e) + 1) * e + 1;
    while (!is_prime(p) || p <= lower) p += e;
    return p;
}

// Multiplicative generator of F_p^*.
uint64_t primitive_root(const Fp& f) {
    long long n = static_cast<long long>(f.p) - 1;
    std::vector<long long> prime_factors;
    long long m = n;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (uint64_t g = 2; g < f.p; ++g) {
        bool ok = true;
        for (long long q : prime_factors)
            if (f.pow(g, n / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    icheck(false, "no primitive root found");
    return 0;
}

// Characteristic polynomial mod p via Hessenberg reduction; returns
// coefficients of det(xI - A), lowest degree first.
FpVec char_poly(const Fp& f, FpMat a) {
    int n = static_cast<int>(a.size());
    for (int k = 1; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k - 1] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[k]);
        for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k]);
        uint64_t ipiv = f.inv(a[k][k - 1]);
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k - 1] == 0) continue;
            uint64_t m = f.mul(a[i][k - 1], ipiv);
            for (int j = 0; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[k][j]));
            for (int j = 0; j < n; ++j) a[j][k] = f.add(a[j][k], f.mul(m, a[j][i]));
        }
    }
    // p_k(x) = charpoly of leading k x k block.
    std::vector<FpVec> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        p[k].assign(k + 1, 0);
        // x * p_{k-1}
        for (int i = 0; i < k; ++i) p[k][i + 1] = p[k - 1][i];
        // - a[k-1][k-1] * p_{ k-1 }
        for (int i = 0; i < k; ++i)
            p[k][i] = f.sub(p[k][i], f.mul(a[k - 1][k - 1] % f.p, p[k - 1][i]));
        uint64_t beta = 1;
        for (int m = 1; m < k; ++m) {
            beta = f.mul(beta, a[k - m][k - m - 1]);
            uint64_t coef = f.mul(beta, a[k - m - 1][k - 1]);
            for (int i = 0; i < k - m; ++i)
                p[k][i] = f.sub(p[k][i], f.mul(coef, p[k - m - 1][i]));
        }
    }
    return p[n];
}

uint64_t eval_poly(const Fp& f, const FpVec& poly, uint64_t x) {
    uint64_t acc = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
        acc = f.add(f.mul(acc, x), poly[i]);
    return acc;
}

// Kernel basis of a (square) matrix mod p, as column vectors.
std::vector<FpVec> kernel_basis(const Fp& f, FpMat a) {
    int n = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        uint64_t ip = f.inv(a[r][c]);
        for (int j = 0; j < n; ++j) a[r][j] = f.mul(a[r][j], ip);
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            uint64_t m = a[i][c];
            for (int j = 0; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<FpVec> out;
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        FpVec v(n, 0);
        v[c] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = f.sub(0, a[i][c]);
        out.push_back(std::move(v));
    }
    return out;
}

struct Subspace {
    // Columns of `basis` span the space inside F_p^r.
    std::vector<FpVec> basis;
};

// Express M*b in the given basis. Columns are reduced on the fly;
// the joint eigenspace structure guarantees solvability.
FpMat restriction_matrix(const Fp& f, const FpMat& m, const std::vector<FpVec>& basis) {
    int r = static_cast<int>(m.size());
    int k = static_cast<int>(basis.size());
    // Row-echelon data for the basis matrix (r x k).
    FpMat ech(k, FpVec(r, 0));  // store transposed copies, reduced
    std::vector<int> pivots(k, -1);
    std::vector<FpMat> ops;  // record solve steps: apply to rhs too
    // Precompute an LU-like elimination of basis columns.
    FpMat cols(k, FpVec(r));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < r; ++i) cols[j][i] = basis[j][i];
    // Reduce columns to echelon over rows, remembering the operations via a
    // coefficient matrix: ech_coeff[j] expresses reduced col j in original cols.
    FpMat coeff(k, FpVec(k, 0));
    for (int j = 0; j < k; ++j) coeff[j][j] = 1;
    for (int j = 0; j < k; ++j) {
        FpVec v = cols[j];
        FpVec cf = coeff[j];
        for (int t = 0; t < j; ++t) {
            if (pivots[t] < 0 || v[pivots[t]] == 0) continue;
            uint64_t mfac = v[pivots[t]];
            for (int i = 0; i < r; ++i) v[i] = f.sub(v[i], f.mul(mfac, ech[t][i]));
            for (int i = 0; i < k; ++i) cf[i] = f.sub(cf[i], f.mul(mfac, coeff[t][i]));
        }
        int piv = -1;
        for (int i = 0; i < r; ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        icheck(piv >= 0, "subspace basis is degenerate");
        uint64_t ip = f.inv(v[piv]);
        for (int i = 0; i < r; ++i) v[i] = f.mul(v[i], ip);
        for (int i = 0; i < k; ++i) cf[i] = f.mul(cf[i], ip);
        ech[j] = std::move(v);
        coeff[j] = std::move(cf);
        pivots[j] = piv;
    }

    FpMat a(k, FpVec(k, 0));
    for (int j = 0; j < k; ++j) {
        FpVec img(r, 0);
        for (int i = 0; i < r; ++i) {
            uint64_t acc = 0;
            for (int t = 0; t < r; ++t)
                if (m[i][t] && basis[j][t]) acc = f.add(acc, f.mul(m[i][t], basis[j][t]));
            img[i] = acc;
        }
        FpVec sol(k, 0);
        for (int t = 0; t < k; ++t) {
            uint64_t c = img[pivots[t]];
            if (c == 0) continue;
            for (int i = 0; i < r; ++i) img[i] = f.sub(img[i], f.mul(c, ech[t][i]));
            for (int i = 0; i < k; ++i) sol[i] = f.add(sol[i], f.mul(c, coeff[t][i]));
        }
        for (int i = 0; i < r; ++i) icheck(img[i] == 0, "class matrix does not preserve subspace");
        for (int i = 0; i < k; ++i) a[i][j] = sol[i];
    }
    return a;
}

}  // namespace

CharTableC char_table_complex(const FiniteGroup& g) {
    CharTableC t;
    t.group = &g;
    t.classes = f_conjugacy_classes(g, FieldTag::C);
    t.conductor = g.exponent();
    int r = t.classes.count();
    int n = g.order();
    int e = t.conductor;

    t.inverse_class.resize(r);
    for (int c = 0; c < r; ++c) t.inverse_class[c] = t.classes.class_of[g.inv[t.classes.rep[c]]];

    // Structure constants a[i][j][k]: coefficient of class k in (class sum i)(class sum j).
    std::vector<std::vector<std::vector<int>>> sc(
        r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    for (int i = 0; i < r; ++i)
        for (int x : t.classes.classes[i])
            for (int k = 0; k < r; ++k) {
                int j = t.classes.class_of[g.mult[g.inv[x]][t.classes.rep[k]]];
                sc[i][j][k] += 1;
            }

    Fp f{static_cast<uint64_t>(find_prime(e, std::max(2LL * n, 64LL)))};
    uint64_t zroot = f.pow(primitive_root(f), (f.p - 1) / e);

    // Split F_p^r by the commuting class matrices into joint eigenlines.
    std::vector<Subspace> spaces;
    {
        Subspace full;
        for (int i = 0; i < r; ++i) {
            FpVec v(r, 0);
            v[i] = 1;
            full.basis.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        FpMat m(r, FpVec(r, 0));
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) m[j][k] = sc[i][j][k] % f.p;
        std::vector<Subspace> next;
        for (Subspace& sp : spaces) {
            if (sp.basis.size() == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            FpMat a = restriction_matrix(f, m, sp.basis);
            FpVec poly = char_poly(f, a);
            int found_dim = 0;
            for (uint64_t lam = 0; lam < f.p; ++lam) {
                if (eval_poly(f, poly, lam) != 0) continue;
                FpMat shifted = a;
                for (size_t d = 0; d < shifted.size(); ++d)
                    shifted[d][d] = f.sub(shifted[d][d], lam);
                std::vector<FpVec> ker = kernel_basis(f, shifted);
                if (ker.empty()) continue;
                Subspace child;
                for (const FpVec& kv : ker) {
                    FpVec v(r, 0);
                    for (size_t d = 0; d < kv.size(); ++d) {
                        if (kv[d] == 0) continue;
                        for (int row = 0; row < r; ++row)
                            v[row] = f.add(v[row], f.mul(kv[d], sp.basis[d][row]));
                    }
                    child.basis.push_back(std::move(v));
                }
                found_dim += static_cast<int>(child.basis.size());
                next.push_back(std::move(child));
            }
            icheck(found_dim == static_cast<int>(sp.basis.size()),
                   "class matrix did not split over F_p");
        }
        spaces = std::move(next);
    }
    icheck(static_cast<int>(spaces.size()) == r, "wrong number of joint eigenlines");

    // Identity class index (class of element 0 is always class 0).
    icheck(t.classes.rep[0] == 0, "identity class must come first");

    std::vector<int> class_size(r);
    for (int c = 0; c < r; ++c) class_size[c] = static_cast<int>(t.classes.classes[c].size());

    struct RawChar {
        std::vector<std::vector<int32_t>> digits;
        std::vector<Cyclotomic> values;
        Int degree;
    };
    std::vector<RawChar> raws;

    int sqrt_n = 1;
    while ((sqrt_n + 1) * (sqrt_n + 1) <= n) ++sqrt_n;

    for (const Subspace& sp : spaces) {
        const FpVec& u0 = sp.basis[0];
        icheck(u0[0] != 0, "eigenline has vanishing identity coordinate");
        uint64_t norm = f.inv(u0[0]);
        FpVec omega(r);
        for (int c = 0; c < r; ++c) omega[c] = f.mul(u0[c], norm);

        // deg^2 = |G| / sum_c omega_c omega_{c*} / n_c  (mod p)
        uint64_t s = 0;
        for (int c = 0; c < r; ++c)
            s = f.add(s, f.mul(f.mul(omega[c], omega[t.inverse_class[c]]),
                               f.inv(class_size[c] % f.p)));
        uint64_t deg_sq = f.mul(n % f.p, f.inv(s));
        int deg = -1;
        for (int d = 1; d <= sqrt_n; ++d)
            if (f.mul(d, d) == deg_sq) {
                deg = d;
                break;
            }
        icheck(deg > 0, "no integral degree matches eigenline");

        // chi(g_c) = deg * omega_c / n_c mod p.
        FpVec chi(r);
        for (int c = 0; c < r; ++c)
            chi[c] = f.mul(f.mul(deg, omega[c]), f.inv(class_size[c] % f.p));

        RawChar rc;
        rc.degree = deg;
        rc.digits.assign(r, std::vector<int32_t>(e, 0));
        for (int c = 0; c < r; ++c) {
            int rep = t.classes.rep[c];
            int m = g.element_order(rep);
            uint64_t zm = f.pow(zroot, e / m);
            uint64_t minv = f.inv(m % f.p);
            for (int tt = 0; tt < m; ++tt) {
                uint64_t acc = 0;
                int cur = 0;  // rep^s
                for (int spow = 0; spow < m; ++spow) {
                    uint64_t w = f.pow(zm, (static_cast<uint64_t>(m) - tt) * spow % m);
                    acc = f.add(acc, f.mul(chi[t.classes.class_of[cur]], w));
                    cur = g.mult[cur][rep];
                }
                acc = f.mul(acc, minv);
                icheck(acc <= static_cast<uint64_t>(deg), "digit lift out of range");
                rc.digits[c][static_cast<size_t>(tt) * (e / m)] += static_cast<int32_t>(acc);
            }
        }
        rc.values.reserve(r);
        for (int c = 0; c < r; ++c) {
            std::vector<Rat> powers(rc.digits[c].begin(), rc.digits[c].end());
            rc.values.push_back(cyclo_from_powers(e, powers));
        }
        icheck(rc.values[0].is_rational() && rc.values[0].rational_value() == Rat(Int(deg)),
               "degree mismatch after lifting");
        raws.push_back(std::move(rc));
    }

    std::sort(raws.begin(), raws.end(), [](const RawChar& a, const RawChar& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t c = 0; c < a.values.size(); ++c) {
            int cmp = a.values[c].compare(b.values[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });

    for (RawChar& rc : raws) {
        t.digits.push_back(std::move(rc.digits));
        t.values.push_back(std::move(rc.values));
        t.degrees.push_back(rc.degree);
    }

    // Exact self-checks: sum of squared degrees, full orthogonality.
    Int degsum = 0;
    for (const Int& d : t.degrees) degsum += d * d;
    icheck(degsum == n, "sum of squared degrees != |G|");

    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            // sum_c n_c chi_i(g_c) chi_j(g_c^{-1}) as a power vector over zeta_e.
            std::vector<long long> conv(e, 0);
            for (int c = 0; c < r; ++c) {
                const auto& di = t.digits[i][c];
                const auto& dj = t.digits[j][t.inverse_class[c]];
                for (int a = 0; a < e; ++a) {
                    if (!di[a]) continue;
                    long long w = static_cast<long long>(class_size[c]) * di[a];
                    for (int b = 0; b < e; ++b)
                        if (dj[b]) conv[(a + b) % e] += w * dj[b];
                }
            }
            std::vector<Rat> powers(e);
            for (int a = 0; a < e; ++a) powers[a] = Rat(conv[a]);
            Cyclotomic total = cyclo_from_powers(e, powers);
            Cyclotomic want(e, i == j ? Rat(n) : Rat(0));
            icheck(total == want, "orthogonality self-check failed");
        }

    for (int i = 0; i < t.num_chars(); ++i) {
        bool triv = true;
        for (int c = 0; c < r; ++c)
            if (t.values[i][c] != Cyclotomic(e, Rat(1))) triv = false;
        if (triv) t.trivial_index = i;
    }
    icheck(t.trivial_index >= 0, "trivial character missing");
    return t;
}

int fs_indicator(const CharTableC& t, int chi) {
    check(chi >= 0 && chi < t.num_chars(), err::NotIrreducible,
          "character index out of range");
    const FiniteGroup& g = *t.group;
    // Accumulate chi(g^2) in the integer power basis; reduce once.
    std::vector<long long> powers(t.conductor, 0);
    for (int x = 0; x < g.order(); ++x) {
        const auto& d = t.digits[chi][t.class_of(g.mult[x][x])];
        for (int j = 0; j < t.conductor; ++j) powers[j] += d[j];
    }
    std::vector<Rat> rp(powers.begin(), powers.end());
    Cyclotomic acc = cyclo_from_powers(t.conductor, rp);
    icheck(acc.is_rational(), "FS indicator sum is not rational");
    Rat v = acc.rational_value() / Rat(g.order());
    icheck(v == Rat(1) || v == Rat(0) || v == Rat(-1), "FS indicator not in {-1,0,1}");
    return static_cast<int>(v.convert_to<long long>());
}

namespace {

// Digit vectors are canonical (eigenvalue multiplicities), so Galois twists
// can be matched without any cyclotomic reduction: zeta^j -> zeta^{jk} is an
// index permutation.
std::vector<std::vector<int32_t>> galois_digits(const CharTableC& t, int chi, long long k) {
    int e = t.conductor;
    std::vector<std::vector<int32_t>> out(t.digits[chi].size(),
                                          std::vector<int32_t>(e, 0));
    for (size_t c = 0; c < t.digits[chi].size(); ++c)
        for (int j = 0; j < e; ++j)
            if (t.digits[chi][c][j])
                out[c][static_cast<size_t>(j) * (k % e) % e] += t.digits[chi][c][j];
    return out;
}

int find_char_by_digits(const CharTableC& t, const std::vector<std::vector<int32_t>>& d) {
    for (int i = 0; i < t.num_chars(); ++i)
        if (t.digits[i] == d) return i;
    icheck(false, "character digits not found in table");
    return -1;
}

}  // namespace

std::vector<RealIrred> real_irreducibles(const CharTableC& t) {
    int r = t.classes.count();
    std::vector<char> used(t.num_chars(), 0);
    std::vector<RealIrred> out;
    for (int i = 0; i < t.num_chars(); ++i) {
        if (used[i]) continue;
        int j = find_char_by_digits(t, galois_digits(t, i, t.conductor - 1));
        RealIrred ri;
        if (j == i) {
            int fs = fs_indicator(t, i);
            icheck(fs != 0, "self-conjugate character with FS 0");
            ri.type = fs == 1 ? 'R' : 'H';
            ri.constituents = {i};
            used[i] = 1;
            ri.values = t.values[i];
            if (fs == -1)
                for (Cyclotomic& v : ri.values) v = v * Rat(2);
        } else {
            ri.type = 'C';
            ri.constituents = {std::min(i, j), std::max(i, j)};
            used[i] = used[j] = 1;
            ri.values.reserve(r);
            for (int c = 0; c < r; ++c) ri.values.push_back(t.values[i][c] + t.values[j][c]);
        }
        for (int c = 0; c < r; ++c)
            icheck(ri.values[c] == ri.values[c].conj(), "real character has non-real value");
        ri.degree = ri.values[0].rational_value().convert_to<Int>();
        out.push_back(std::move(ri));
    }
    std::sort(out.begin(), out.end(), [](const RealIrred& a, const RealIrred& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t c = 0; c < a.values.size(); ++c) {
            int cmp = a.values[c].compare(b.values[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    icheck(static_cast<int>(out.size()) ==
               f_conjugacy_classes(*t.group, FieldTag::R).count(),
           "number of real irreducibles != |con_R(G)|");
    return out;
}

bool schur_rule_certain(const FiniteGroup& g) {
    if (g.order() <= 31 || g.is_abelian()) return true;
    // Dicyclic / generalized quaternion: unique involution with a cyclic
    // subgroup of index 2.
    int involutions = 0;
    bool has_big_cyclic = false;
    for (int x = 0; x < g.order(); ++x) {
        int o = g.element_order(x);
        if (o == 2) ++involutions;
        if (2 * o == g.order()) has_big_cyclic = true;
    }
    return involutions == 1 && has_big_cyclic;
}

std::vector<RatIrred> rational_irreducibles(const CharTableC& t, const SchurPolicy& policy) {
    if (policy.strict)
        check(schur_rule_certain(*t.group), err::SchurIndexUnknown,
              "group outside the built-in Schur index table");
    int r = t.classes.count();
    int e = t.conductor;
    std::vector<char> used(t.num_chars(), 0);
    std::vector<RatIrred> out;
    for (int i = 0; i < t.num_chars(); ++i) {
        if (used[i]) continue;
        std::vector<int> orbit;
        for (int k = 1; k <= e; ++k) {
            if (std::gcd(k, e) != 1) continue;
            int j = find_char_by_digits(t, galois_digits(t, i, k));
            if (!used[j]) {
                used[j] = 1;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        RatIrred ri;
        ri.orbit = orbit;
        int fs = fs_indicator(t, orbit[0]);
        for (int j : orbit)
            icheck(fs_indicator(t, j) == fs, "FS indicator not Galois invariant");
        ri.schur_index = fs == -1 ? 2 : 1;
        ri.values.assign(r, Rat(0));
        for (int c = 0; c < r; ++c) {
            std::vector<Rat> powers(e, Rat(0));
            for (int j : orbit)
                for (int p = 0; p < e; ++p)
                    if (t.digits[j][c][p]) powers[p] += t.digits[j][c][p];
            Cyclotomic sum = cyclo_from_powers(e, powers);
            icheck(sum.is_rational(), "Galois orbit sum is not rational");
            ri.values[c] = sum.rational_value() * Rat(ri.schur_index);
        }
        ri.degree = ri.values[0].convert_to<Int>();
        out.push_back(std::move(ri));
    }
    std::sort(out.begin(), out.end(), [](const RatIrred& a, const RatIrred& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.values < b.values;
    });
    icheck(static_cast<int>(out.size()) ==
               f_conjugacy_classes(*t.group, FieldTag::Q).count(),
           "number of rational irreducibles != |con_Q(G)|");
    return out;
}

}  // namespace eqeuler
