#include "tropic/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace tropic {

QMat qmat_zero(std::size_t rows, std::size_t cols) {
    return QMat(rows, QVec(cols, Rat(0)));
}

QMat qmat_identity(std::size_t n) {
    QMat m = qmat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    QMat c = qmat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

QMat qmat_transpose(const QMat& a) {
    std::size_t n = a.size(), m = n ? a[0].size() : 0;
    QMat t = qmat_zero(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

bool qmat_equal(const QMat& a, const QMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Rat qmat_det(QMat a) {
    std::size_t n = a.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

QMat qmat_inverse(const QMat& a) {
    std::size_t n = a.size();
    QMat work = a, inv = qmat_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && work[p][c] == 0) ++p;
        if (p == n) throw validation_error("matrix is singular");
        std::swap(work[p], work[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = work[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            work[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work[i][c] == 0) continue;
            Rat f = work[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

namespace {

// Row-reduce in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(QMat& a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rat piv = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<QVec> qmat_kernel(QMat a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> qmat_solve(QMat a, QVec b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivots = rref(a);
    // Inconsistent when a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

std::size_t qmat_rank(QMat a) {
    return rref(a).size();
}

ZMat zmat_identity(std::size_t n) {
    ZMat m(n, ZVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    ZMat c(n, ZVec(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

ZMat zmat_transpose(const ZMat& a) {
    std::size_t n = a.size(), m = n ? a[0].size() : 0;
    ZMat t(m, ZVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

QMat zmat_to_q(const ZMat& a) {
    QMat q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) q[i].emplace_back(x);
    return q;
}

ZMat qmat_to_z(const QMat& a) {
    ZMat z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) {
            if (x.get_den() != 1) throw validation_error("matrix entry is not integral");
            z[i].push_back(x.get_num());
        }
    return z;
}

ZMat zmat_unimodular_inverse(const ZMat& a) {
    QMat inv = qmat_inverse(zmat_to_q(a));
    return qmat_to_z(inv);
}

SmithResult smith_normal_form(const ZMat& a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    ZMat d = a, u = zmat_identity(rows), v = zmat_identity(cols);

    auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        std::swap(d[x], d[y]);
        std::swap(u[x], u[y]);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(d[i][x], d[i][y]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][x], v[i][y]);
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Locate a minimal-magnitude nonzero pivot in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                Int m = abs(d[i][j]);
                if (!found || m < best) {
                    best = m;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (d[i][t] == 0) continue;
            Int q = d[i][t] / d[t][t]; // truncated division keeps |remainder| < |pivot|
            row_add(i, t, -q);
            if (d[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (d[t][j] == 0) continue;
            Int q = d[t][j] / d[t][t];
            col_add(j, t, -q);
            if (d[t][j] != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders appeared; redo with new pivot

        // Divisibility fix-up: pivot must divide the rest of the block.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    row_add(t, i, Int(1));
                    divides = false;
                }
        if (!divides) continue;

        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
            for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
        }
        ++t;
    }
    return {u, v, d};
}

std::optional<ZMat> complete_rows_to_unimodular(const ZMat& b, std::size_t n) {
    std::size_t k = b.size();
    if (k > n) return std::nullopt;
    if (k == 0) return zmat_identity(n);
    SmithResult s = smith_normal_form(b);
    for (std::size_t i = 0; i < k; ++i)
        if (s.d[i][i] != 1) return std::nullopt;
    // b = u^{-1} [I 0] v^{-1}; stack the complementary rows of v^{-1} on top.
    ZMat vinv = zmat_unimodular_inverse(s.v);
    ZMat uinv = zmat_unimodular_inverse(s.u);
    ZMat full(n, ZVec(n, Int(0)));
    for (std::size_t i = 0; i + k < n; ++i) full[i] = vinv[k + i];
    // Last k rows: u^{-1} * (first k rows of v^{-1}) = b exactly.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int acc(0);
            for (std::size_t t = 0; t < k; ++t) acc += uinv[i][t] * vinv[t][j];
            full[n - k + i][j] = acc;
        }
        if (full[n - k + i] != b[i]) throw validation_error("internal: completion mismatch");
    }
    Rat det = qmat_det(zmat_to_q(full));
    if (det != 1 && det != -1) throw validation_error("internal: completion not unimodular");
    return full;
}

std::optional<std::size_t> psd_rank(QMat a) {
    std::size_t n = a.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = k; i < n; ++i)
            if (a[i][i] < 0) return std::nullopt;
        std::size_t p = k;
        while (p < n && a[p][p] == 0) ++p;
        if (p == n) {
            // Zero diagonal block: PSD forces the whole block to vanish.
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a[i][j] != 0) return std::nullopt;
            return rank;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][p], a[i][k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
            a[i][k] = 0;
            a[k][i] = 0;
        }
        ++rank;
    }
    return rank;
}

LdlResult ldl_positive_definite(const QMat& a) {
    std::size_t n = a.size();
    QMat l = qmat_identity(n), w = a;
    QVec d(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k][k] <= 0) throw validation_error("matrix is not positive definite");
        d[k] = w[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = w[i][k] / w[k][k];
            l[i][k] = f;
            for (std::size_t j = k + 1; j < n; ++j) w[i][j] -= f * w[k][j];
            w[i][k] = 0;
        }
    }
    return {l, d};
}

Rat bilinear(const QMat& a, const ZVec& x, const ZVec& y) {
    Rat acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (x[i] == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (y[j] == 0) continue;
            row += a[i][j] * Rat(y[j]);
        }
        acc += Rat(x[i]) * row;
    }
    return acc;
}

} // namespace tropic
