#include "mbs/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace mbs {

MatZ MatZ::identity(size_t n) {
    MatZ m(n, n);
    for (size_t i = 0; i < n; ++i) m.a_[i][i] = 1;
    return m;
}

MatZ MatZ::from_cols(const std::vector<VecZ>& cols) {
    size_t r = cols.empty() ? 0 : cols[0].size();
    MatZ m(r, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r) throw ValidationError("ragged matrix columns");
        for (size_t i = 0; i < r; ++i) m.a_[i][j] = cols[j][i];
    }
    return m;
}

MatZ MatZ::from_rows(const std::vector<VecZ>& rows) {
    MatZ m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ValidationError("ragged matrix rows");
        m.a_[i] = rows[i];
    }
    return m;
}

VecZ MatZ::col(size_t j) const {
    VecZ c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = a_[i][j];
    return c;
}

MatZ MatZ::operator*(const MatZ& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
    MatZ m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (a_[i][k] == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) m.a_[i][j] += a_[i][k] * o.a_[k][j];
        }
    return m;
}

VecZ MatZ::apply(const VecZ& v) const {
    if (cols_ != v.size()) throw ValidationError("matrix apply shape mismatch");
    VecZ out(rows_, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out[i] += a_[i][j] * v[j];
    return out;
}

VecQ MatZ::apply(const VecQ& v) const {
    if (cols_ != v.size()) throw ValidationError("matrix apply shape mismatch");
    VecQ out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = rat_from_int_vecdot(a_[i], v);
    return out;
}

MatQ MatZ::to_q() const {
    MatQ m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(a_[i][j]);
    return m;
}

void MatZ::swap_cols(size_t i, size_t j) {
    for (size_t k = 0; k < rows_; ++k) std::swap(a_[k][i], a_[k][j]);
}

void MatZ::swap_rows(size_t i, size_t j) { std::swap(a_[i], a_[j]); }

void MatZ::negate_col(size_t j) {
    for (size_t k = 0; k < rows_; ++k) a_[k][j] = -a_[k][j];
}

void MatZ::add_col_multiple(size_t dst, size_t src, const Int& f) {
    for (size_t k = 0; k < rows_; ++k) a_[k][dst] += f * a_[k][src];
}

void MatZ::add_row_multiple(size_t dst, size_t src, const Int& f) {
    for (size_t k = 0; k < cols_; ++k) a_[dst][k] += f * a_[src][k];
}

HnfResult hermite_normal_form(const MatZ& m) {
    MatZ h = m;
    MatZ u = MatZ::identity(m.cols());
    size_t pivot_col = 0;
    for (size_t row = 0; row < m.rows() && pivot_col < m.cols(); ++row) {
        // gcd column reduction in this row among columns >= pivot_col
        while (true) {
            size_t best = m.cols();
            for (size_t j = pivot_col; j < m.cols(); ++j) {
                if (h.at(row, j) == 0) continue;
                if (best == m.cols() || abs(h.at(row, j)) < abs(h.at(row, best))) best = j;
            }
            if (best == m.cols()) break;  // row is zero past pivot_col
            size_t others = 0;
            for (size_t j = pivot_col; j < m.cols(); ++j) {
                if (j == best || h.at(row, j) == 0) continue;
                Int q = h.at(row, j) / h.at(row, best);  // truncated division
                if (q != 0) {
                    h.add_col_multiple(j, best, -q);
                    u.add_col_multiple(j, best, -q);
                }
                if (h.at(row, j) != 0) ++others;
            }
            if (others == 0) {
                if (best != pivot_col) {
                    h.swap_cols(best, pivot_col);
                    u.swap_cols(best, pivot_col);
                }
                if (h.at(row, pivot_col) < 0) {
                    h.negate_col(pivot_col);
                    u.negate_col(pivot_col);
                }
                // reduce earlier columns against this pivot
                for (size_t j = 0; j < pivot_col; ++j) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(),
                               h.at(row, pivot_col).get_mpz_t());
                    if (q != 0) {
                        h.add_col_multiple(j, pivot_col, -q);
                        u.add_col_multiple(j, pivot_col, -q);
                    }
                }
                ++pivot_col;
                break;
            }
        }
    }
    return {h, u};
}

SnfResult smith_normal_form(const MatZ& m) {
    MatZ d = m;
    MatZ u = MatZ::identity(m.rows());
    MatZ v = MatZ::identity(m.cols());
    size_t n = std::min(m.rows(), m.cols());
    for (size_t k = 0; k < n; ++k) {
        while (true) {
            // find the smallest nonzero entry in the remaining block
            size_t pi = m.rows(), pj = m.cols();
            for (size_t i = k; i < m.rows(); ++i)
                for (size_t j = k; j < m.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi == m.rows() || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m.rows()) break;  // block is zero
            if (pi != k) { d.swap_rows(pi, k); u.swap_rows(pi, k); }
            if (pj != k) { d.swap_cols(pj, k); v.swap_cols(pj, k); }
            bool clean = true;
            for (size_t i = k + 1; i < m.rows(); ++i) {
                Int q = d.at(i, k) / d.at(k, k);
                if (q != 0) { d.add_row_multiple(i, k, -q); u.add_row_multiple(i, k, -q); }
                if (d.at(i, k) != 0) clean = false;
            }
            for (size_t j = k + 1; j < m.cols(); ++j) {
                Int q = d.at(k, j) / d.at(k, k);
                if (q != 0) { d.add_col_multiple(j, k, -q); v.add_col_multiple(j, k, -q); }
                if (d.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility sweep: fold a non-divisible entry into the pivot row
            bool redo = false;
            for (size_t i = k + 1; i < m.rows() && !redo; ++i)
                for (size_t j = k + 1; j < m.cols() && !redo; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        d.add_row_multiple(k, i, 1);
                        u.add_row_multiple(k, i, 1);
                        redo = true;
                    }
            if (!redo) break;
        }
        if (d.at(k, k) < 0) {
            d.negate_col(k);
            v.negate_col(k);
        }
    }
    return {u, d, v};
}

std::vector<VecZ> coset_representatives(const std::vector<VecZ>& sub_basis) {
    if (sub_basis.empty()) throw ValidationError("empty sublattice basis");
    size_t r = sub_basis[0].size();
    if (sub_basis.size() != r || rank_of_z(sub_basis) != r)
        throw ValidationError("sublattice basis is rank-deficient");
    MatZ s = MatZ::from_cols(sub_basis);
    auto [u, d, v] = smith_normal_form(s);
    MatQ uinv = u.to_q().inverse();
    MatQ sq = s.to_q();
    MatQ sinv = sq.inverse();

    std::vector<Int> diag(r);
    for (size_t i = 0; i < r; ++i) diag[i] = d.at(i, i);

    std::vector<VecZ> reps;
    VecZ a(r, 0);
    while (true) {
        // x = U^{-1} a
        VecQ aq = to_vecq(a);
        VecQ xq = uinv.apply(aq);
        VecZ x(r);
        for (size_t i = 0; i < r; ++i) x[i] = xq[i].numerator();  // integral by construction
        // reduce into the half-open fundamental parallelepiped of sub_basis
        VecQ t = sinv.apply(to_vecq(x));
        for (size_t i = 0; i < r; ++i) {
            Int fl = t[i].floor();
            if (fl != 0)
                for (size_t k = 0; k < r; ++k) x[k] -= fl * sub_basis[i][k];
        }
        reps.push_back(x);
        // lexicographic increment in Smith coordinates
        size_t pos = r;
        while (pos > 0) {
            --pos;
            a[pos] += 1;
            if (a[pos] < diag[pos]) break;
            a[pos] = 0;
            if (pos == 0) { pos = r + 1; break; }
        }
        if (pos == r + 1 || r == 0) break;
    }
    return reps;
}

VecZ primitive_equation(const std::vector<VecQ>& span, size_t ambient_dim) {
    if (ambient_dim == 0) throw ValidationError("no hyperplanes in dimension zero");
    std::vector<VecQ> rows = span;
    if (rows.empty()) rows.push_back(VecQ(ambient_dim));  // span {0}
    MatQ m = MatQ::from_rows(rows);
    if (m.cols() != ambient_dim) throw ValidationError("span vector dimension mismatch");
    if (m.rank() != ambient_dim - 1)
        throw ValidationError("vectors do not span a hyperplane");
    auto ker = m.kernel();
    if (ker.size() != 1) throw ValidationError("vectors do not span a hyperplane");
    VecZ e = rescale_to_integral(ker[0]).first;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] < 0)
            for (auto& y : e) y = -y;
        break;
    }
    return e;
}

VecZ primitive_equation_z(const std::vector<VecZ>& span, size_t ambient_dim) {
    std::vector<VecQ> q;
    q.reserve(span.size());
    for (const auto& v : span) q.push_back(to_vecq(v));
    return primitive_equation(q, ambient_dim);
}

SubspaceChart subspace_chart(const std::vector<VecQ>& span, size_t ambient_dim) {
    size_t r = ambient_dim;
    // saturated basis of Z^r n s: integer kernel of the equations of s
    std::vector<VecZ> basis;
    if (!span.empty() && rank_of(span) == r) {
        for (size_t i = 0; i < r; ++i) {
            VecZ e(r, 0);
            e[i] = 1;
            basis.push_back(e);
        }
    } else if (!span.empty() && rank_of(span) > 0) {
        MatQ m = MatQ::from_rows(span);
        auto ker = m.kernel();  // covectors vanishing on s
        std::vector<VecZ> eqs;
        for (const auto& k : ker) eqs.push_back(rescale_to_integral(k).first);
        MatZ a = MatZ::from_rows(eqs);
        auto [h, u] = hermite_normal_form(a);
        for (size_t j = 0; j < h.cols(); ++j) {
            bool zero = true;
            for (size_t i = 0; i < h.rows(); ++i)
                if (h.at(i, j) != 0) { zero = false; break; }
            if (zero) basis.push_back(u.col(j));
        }
    }
    SubspaceChart c;
    c.ambient_dim = r;
    c.dim = basis.size();
    c.basis = basis;
    if (c.dim == 0) {
        c.completion = MatZ::identity(r);
        c.chart_rows = MatZ(0, r);
        c.proj_rows = MatZ::identity(r);
        return c;
    }
    auto [u, d, v] = smith_normal_form(MatZ::from_cols(basis));
    for (size_t i = 0; i < c.dim; ++i)
        if (d.at(i, i) != 1)
            throw ValidationError("internal: intersection basis not saturated");
    MatQ uinvq = u.to_q().inverse();
    MatZ uinv(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) uinv.at(i, j) = uinvq.at(i, j).numerator();
    c.completion = uinv;
    c.basis.clear();
    for (size_t j = 0; j < c.dim; ++j) c.basis.push_back(uinv.col(j));
    c.chart_rows = MatZ(c.dim, r);
    c.proj_rows = MatZ(r - c.dim, r);
    for (size_t i = 0; i < c.dim; ++i)
        for (size_t j = 0; j < r; ++j) c.chart_rows.at(i, j) = u.at(i, j);
    for (size_t i = c.dim; i < r; ++i)
        for (size_t j = 0; j < r; ++j) c.proj_rows.at(i - c.dim, j) = u.at(i, j);
    return c;
}

SubspaceChart subspace_chart_z(const std::vector<VecZ>& span, size_t ambient_dim) {
    std::vector<VecQ> q;
    q.reserve(span.size());
    for (const auto& v : span) q.push_back(to_vecq(v));
    return subspace_chart(q, ambient_dim);
}

std::vector<VecZ> lattice_intersect(const std::vector<VecQ>& span, size_t ambient_dim) {
    return subspace_chart(span, ambient_dim).basis;
}

VecZ lattice_preimage(const VecZ& e, const Int& k) {
    // extended gcd over the entries of e
    size_t r = e.size();
    VecZ x(r, 0);
    Int g = 0;
    for (size_t i = 0; i < r; ++i) {
        if (e[i] == 0) continue;
        if (g == 0) {
            g = abs(e[i]);
            x.assign(r, 0);
            x[i] = e[i] > 0 ? 1 : -1;
            continue;
        }
        Int s, t, g2;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   e[i].get_mpz_t());
        for (auto& xi : x) xi *= s;
        x[i] += t;
        g = g2;
    }
    if (g == 0 || k % g != 0) throw ValidationError("no lattice preimage exists");
    Int f = k / g;
    for (auto& xi : x) xi *= f;
    return x;
}

} // namespace mbs
