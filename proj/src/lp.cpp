#include "ttk/lp.hpp"

namespace ttk {

namespace {

struct Tableau {
    int m, n;                       // constraints, columns (without rhs)
    std::vector<RVec> t;            // m rows of n+1 entries, last is rhs
    RVec obj;                       // reduced costs row, n+1 entries (last = -value)
    std::vector<int> basis;

    void pivot(int r, int col) {
        Rational inv = 1 / t[r][col];
        for (auto& v : t[r]) v *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (int j = 0; j <= n; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
        }
        if (obj[col] != 0) {
            Rational f = obj[col];
            for (int j = 0; j <= n; ++j)
                if (t[r][j] != 0) obj[j] -= f * t[r][j];
        }
        basis[r] = col;
    }

    // maximize: obj holds c_j - z_j; enter while some allowed entry is positive
    bool run(const std::vector<int>& allowed) {
        for (;;) {
            int col = -1;
            for (int j = 0; j < n; ++j)
                if (allowed[j] && obj[j] > 0) { col = j; break; }
            if (col < 0) return true;
            int row = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][col] <= 0) continue;
                Rational ratio = t[i][n] / t[i][col];
                if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
                    row = i;
                    best = ratio;
                }
            }
            if (row < 0) return false;
            pivot(row, col);
        }
    }
};

}  // namespace

std::optional<LPResult> lp_maximize(const std::vector<RVec>& A, const RVec& b, const RVec& c) {
    int m = int(A.size());
    int nv = int(c.size());
    Tableau T;
    T.m = m;
    T.n = nv + m;  // originals + artificials
    T.t.assign(m, RVec(T.n + 1));
    T.basis.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        if (int(A[i].size()) != nv) throw Error("dimension", "LP row length mismatch");
        Rational sgn = b[i] < 0 ? -1 : 1;
        for (int j = 0; j < nv; ++j) T.t[i][j] = sgn * A[i][j];
        T.t[i][nv + i] = 1;
        T.t[i][T.n] = sgn * b[i];
        T.basis[i] = nv + i;
    }
    // phase one: maximize -sum(artificials)
    T.obj.assign(T.n + 1, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= T.n; ++j)
            if (j < nv || j == T.n) T.obj[j] += T.t[i][j];
    std::vector<int> allowed(T.n, 1);
    T.run(allowed);
    if (T.obj[T.n] != 0) return std::nullopt;
    // drive artificials out of the basis where possible
    for (int i = 0; i < m; ++i) {
        if (T.basis[i] < nv) continue;
        for (int j = 0; j < nv; ++j)
            if (T.t[i][j] != 0) { T.pivot(i, j); break; }
    }
    for (int j = nv; j < T.n; ++j) allowed[j] = 0;
    T.obj.assign(T.n + 1, 0);
    for (int j = 0; j < nv; ++j) T.obj[j] = c[j];
    for (int i = 0; i < m; ++i) {
        int bj = T.basis[i];
        if (bj >= nv || T.obj[bj] == 0) continue;
        Rational f = T.obj[bj];
        for (int j = 0; j <= T.n; ++j) T.obj[j] -= f * T.t[i][j];
    }
    if (!T.run(allowed)) throw Error("unbounded", "linear program is unbounded");
    LPResult res;
    res.x.assign(nv, 0);
    for (int i = 0; i < m; ++i)
        if (T.basis[i] < nv) res.x[T.basis[i]] = T.t[i][T.n];
    res.value = 0;
    for (int j = 0; j < nv; ++j) res.value += c[j] * res.x[j];
    return res;
}

}  // namespace ttk
