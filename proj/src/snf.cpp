#include "eqeuler/snf.hpp"

#include <algorithm>

#include "eqeuler/errors.hpp"

namespace eqeuler {

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat out(n, IntVec(m, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        icheck(a[i].size() == k, "int_mat_mul shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

IntVec int_vec_mat(const IntVec& v, const IntMat& m) {
    icheck(v.size() == m.size(), "int_vec_mat shape mismatch");
    size_t cols = m.empty() ? 0 : m[0].size();
    IntVec out(cols, Int(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Worker {
    IntMat a;
    IntMat u;
    IntMat v;
    int rows, cols;

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < v.size(); ++r) std::swap(v[r][i], v[r][j]);
    }
    void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
        for (int c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
        for (int c = 0; c < rows; ++c) u[dst][c] += f * u[src][c];
    }
    void add_col(int dst, int src, const Int& f) {
        for (int r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (size_t r = 0; r < v.size(); ++r) v[r][dst] += f * v[r][src];
    }
    void negate_row(int i) {
        for (int c = 0; c < cols; ++c) a[i][c] = -a[i][c];
        for (int c = 0; c < rows; ++c) u[i][c] = -u[i][c];
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a0) {
    int rows = static_cast<int>(a0.size());
    int cols = rows ? static_cast<int>(a0[0].size()) : 0;
    for (const auto& r : a0)
        icheck(static_cast<int>(r.size()) == cols, "ragged matrix");

    Worker w;
    w.rows = rows;
    w.cols = cols;
    w.a = a0;
    w.u.assign(rows, IntVec(rows, Int(0)));
    w.v.assign(cols, IntVec(cols, Int(0)));
    for (int i = 0; i < rows; ++i) w.u[i][i] = 1;
    for (int i = 0; i < cols; ++i) w.v[i][i] = 1;

    int t = 0;
    while (true) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (w.a[i][j] != 0 &&
                    (pr < 0 || iabs(w.a[i][j]) < iabs(w.a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        if (w.a[t][t] < 0) w.negate_row(t);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (w.a[i][t] == 0) continue;
            Int q = w.a[i][t] / w.a[t][t];
            w.add_row(i, t, -q);
            if (w.a[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (w.a[t][j] == 0) continue;
            Int q = w.a[t][j] / w.a[t][t];
            w.add_col(j, t, -q);
            if (w.a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders became new smaller candidates

        // Pivot must divide the rest of the block; if not, fold the offending
        // row in and restart this pivot.
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
            for (int j = t + 1; j < cols && divides; ++j)
                if (w.a[i][j] % w.a[t][t] != 0) {
                    w.add_row(t, i, Int(1));
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }

    SmithForm s;
    s.rows = rows;
    s.cols = cols;
    s.u = std::move(w.u);
    s.v = std::move(w.v);
    for (int i = 0; i < t; ++i) s.factors.push_back(w.a[i][i]);

    for (size_t i = 1; i < s.factors.size(); ++i)
        icheck(s.factors[i] % s.factors[i - 1] == 0, "invariant factor chain broken");

    // Verify D = U*A*V by multiplication.
    IntMat d = int_mat_mul(int_mat_mul(s.u, a0), s.v);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int want = (i == j && i < t) ? s.factors[i] : Int(0);
            icheck(d[i][j] == want, "SNF transform verification failed");
        }
    return s;
}

}  // namespace eqeuler
