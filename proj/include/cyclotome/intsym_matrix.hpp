#pragma once

#include <stdexcept>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/intpoly.hpp"

namespace cyclotome {

/// Symmetric n x n matrix of arbitrary-precision integers.
struct IntSymMatrix {
    int n = 0;
    std::vector<Int> a;  // row-major n*n

    IntSymMatrix() = default;
    explicit IntSymMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, Int{0}) {
        if (size < 0) throw std::invalid_argument("IntSymMatrix: negative size");
    }

    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    void set(int i, int j, Int v) {
        a[static_cast<size_t>(i) * n + j] = v;
        a[static_cast<size_t>(j) * n + i] = std::move(v);
    }

    bool is_symmetric() const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool operator==(const IntSymMatrix& o) const { return n == o.n && a == o.a; }

    IntSymMatrix operator+(const IntSymMatrix& o) const {
        IntSymMatrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    IntSymMatrix operator-(const IntSymMatrix& o) const {
        IntSymMatrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    IntSymMatrix operator-() const {
        IntSymMatrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = -a[i];
        return r;
    }
    IntSymMatrix operator*(const Int& k) const {
        IntSymMatrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * k;
        return r;
    }
    // symmetric for commuting symmetric factors (the only use here: polynomials in one matrix)
    IntSymMatrix operator*(const IntSymMatrix& o) const {
        IntSymMatrix r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int s{0};
                for (int k = 0; k < n; ++k) s += at(i, k) * o.at(k, j);
                r.a[static_cast<size_t>(i) * n + j] = std::move(s);
            }
        return r;
    }

    static IntSymMatrix identity(int n) {
        IntSymMatrix r(n);
        for (int i = 0; i < n; ++i) r.set(i, i, Int{1});
        return r;
    }

    IntSymMatrix principal_submatrix(const std::vector<int>& rows) const {
        IntSymMatrix r(static_cast<int>(rows.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows.size(); ++j)
                r.a[i * rows.size() + j] = at(rows[i], rows[j]);
        return r;
    }

    Int trace() const {
        Int s{0};
        for (int i = 0; i < n; ++i) s += at(i, i);
        return s;
    }
};

/// Characteristic polynomial det(xI - A) by the Berkowitz division-free algorithm.
/// Exact over Z for any square integer matrix; O(n^4).
inline IntPoly char_poly(const IntSymMatrix& A) {
    int n = A.n;
    if (n == 0) return IntPoly::constant(1);
    // Berkowitz iterates over leading principal submatrices. V holds the coefficient
    // vector of the char poly of the r x r leading block, highest degree first,
    // with sign convention det(xI - A).
    std::vector<Int> V{Int{1}, -A.at(0, 0)};
    for (int r = 2; r <= n; ++r) {
        int m = r - 1;  // current block is (m+1) x (m+1)
        // row = A[m, 0..m-1], col = A[0..m-1, m], M = leading m x m block
        // Toeplitz column: c[0] = 1, c[1] = -A[m][m], c[k] = -(row * M^{k-2} * col)
        std::vector<Int> c(r + 1);
        c[0] = 1;
        c[1] = -A.at(m, m);
        std::vector<Int> w(m);
        for (int i = 0; i < m; ++i) w[i] = A.at(i, m);
        for (int k = 2; k <= r; ++k) {
            Int dot{0};
            for (int i = 0; i < m; ++i) dot += A.at(m, i) * w[i];
            c[k] = -dot;
            if (k < r) {
                std::vector<Int> w2(m, Int{0});
                for (int i = 0; i < m; ++i) {
                    for (int j = 0; j < m; ++j) w2[i] += A.at(i, j) * w[j];
                }
                w = std::move(w2);
            }
        }
        // V_new = Toeplitz(c) * V  (lower-triangular Toeplitz convolution)
        std::vector<Int> Vn(r + 1, Int{0});
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= std::min<int>(i, r - 1); ++j)
                if (i - j <= r) Vn[i] += c[i - j] * V[j];
        V = std::move(Vn);
    }
    // V is highest-first; IntPoly wants lowest-first
    std::vector<Int> lowfirst(V.rbegin(), V.rend());
    return IntPoly(std::move(lowfirst));
}

/// Reference char poly by cofactor expansion of det(xI - A); exponential, test use only.
inline IntPoly char_poly_cofactor(const IntSymMatrix& A) {
    int n = A.n;
    std::vector<std::vector<IntPoly>> M(n, std::vector<IntPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly e = IntPoly::constant(-A.at(i, j));
            if (i == j) e = e + IntPoly::variable();
            M[i][j] = e;
        }
    std::vector<int> rows(n), cols(n);
    for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
    struct Rec {
        std::vector<std::vector<IntPoly>>& M;
        IntPoly run(std::vector<int> rs, std::vector<int> cs) {
            if (rs.empty()) return IntPoly::constant(1);
            IntPoly det = IntPoly::zero();
            std::vector<int> subr(rs.begin() + 1, rs.end());
            for (size_t k = 0; k < cs.size(); ++k) {
                if (M[rs[0]][cs[k]].is_zero()) continue;
                std::vector<int> subc;
                for (size_t t = 0; t < cs.size(); ++t)
                    if (t != k) subc.push_back(cs[t]);
                IntPoly term = M[rs[0]][cs[k]] * run(subr, subc);
                det = (k % 2 == 0) ? det + term : det - term;
            }
            return det;
        }
    } rec{M};
    return rec.run(rows, cols);
}

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
inline Int determinant(const IntSymMatrix& A) {
    int n = A.n;
    if (n == 0) return Int{1};
    std::vector<Int> m = A.a;
    auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };
    Int denom{1};
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return Int{0};
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = idiv_exact(at(i, j) * at(k, k) - at(i, k) * at(k, j), denom);
        denom = at(k, k);
    }
    Int d = at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

/// Leading principal minors det(A[0..k][0..k]), k = 0..n-1, by Bareiss.
/// Stops early (filling the rest with 0) when a zero minor blocks the recurrence;
/// sufficient for Sylvester positive-definiteness checks.
inline std::vector<Int> leading_principal_minors(const IntSymMatrix& A) {
    int n = A.n;
    std::vector<Int> minors(n, Int{0});
    if (n == 0) return minors;
    std::vector<Int> m = A.a;
    auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };
    Int denom{1};
    for (int k = 0; k < n; ++k) {
        minors[k] = at(k, k);  // Bareiss invariant: pivot equals the leading minor
        if (k == n - 1) break;
        if (at(k, k) == 0) break;  // later minors undetermined by this recurrence
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = idiv_exact(at(i, j) * at(k, k) - at(i, k) * at(k, j), denom);
        denom = at(k, k);
    }
    return minors;
}

/// T_m(A) with the same recurrence as chebyshev_first_kind, in exact matrix arithmetic.
inline IntSymMatrix matrix_chebyshev(const IntSymMatrix& A, long m) {
    if (m < 0) throw std::invalid_argument("matrix_chebyshev: m must be >= 0");
    IntSymMatrix prev = IntSymMatrix::identity(A.n) * Int{2};
    if (m == 0) return prev;
    IntSymMatrix cur = A;
    for (long i = 1; i < m; ++i) {
        IntSymMatrix next = cur * A - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace cyclotome
