#include "mbs/linalg.hpp"

#include <algorithm>

namespace mbs {

MatQ MatQ::identity(size_t n) {
    MatQ m(n, n);
    for (size_t i = 0; i < n; ++i) m.a_[i][i] = Rat(1);
    return m;
}

MatQ MatQ::from_rows(const std::vector<VecQ>& rows) {
    MatQ m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ValidationError("ragged matrix rows");
        m.a_[i] = rows[i];
    }
    return m;
}

MatQ MatQ::from_cols(const std::vector<VecQ>& cols) {
    size_t r = cols.empty() ? 0 : cols[0].size();
    MatQ m(r, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r) throw ValidationError("ragged matrix columns");
        for (size_t i = 0; i < r; ++i) m.a_[i][j] = cols[j][i];
    }
    return m;
}

VecQ MatQ::col(size_t j) const {
    VecQ c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = a_[i][j];
    return c;
}

MatQ MatQ::transposed() const {
    MatQ m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.a_[j][i] = a_[i][j];
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
    MatQ m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (a_[i][k].is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) m.a_[i][j] += a_[i][k] * o.a_[k][j];
        }
    return m;
}

VecQ MatQ::apply(const VecQ& v) const {
    if (cols_ != v.size()) throw ValidationError("matrix apply shape mismatch");
    VecQ out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = dot(a_[i], v);
    return out;
}

namespace {

// Gaussian elimination on an augmented copy; returns pivot columns.
std::vector<size_t> eliminate(std::vector<VecQ>& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t sel = pr;
        while (sel < rows && m[sel][pc].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        Rat inv = Rat(1) / m[pr][pc];
        for (size_t j = pc; j < cols; ++j) m[pr][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || m[i][pc].is_zero()) continue;
            Rat f = m[i][pc];
            for (size_t j = pc; j < cols; ++j) m[i][j] -= f * m[pr][j];
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

} // namespace

size_t MatQ::rank() const {
    auto m = a_;
    return eliminate(m).size();
}

Rat MatQ::det() const {
    if (rows_ != cols_) throw ValidationError("determinant of non-square matrix");
    auto m = a_;
    Rat d(1);
    for (size_t c = 0; c < cols_; ++c) {
        size_t sel = c;
        while (sel < rows_ && m[sel][c].is_zero()) ++sel;
        if (sel == rows_) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (size_t i = c + 1; i < rows_; ++i) {
            if (m[i][c].is_zero()) continue;
            Rat f = m[i][c] * inv;
            for (size_t j = c; j < cols_; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

MatQ MatQ::inverse() const {
    if (rows_ != cols_) throw ValidationError("inverse of non-square matrix");
    auto m = a_;
    for (size_t i = 0; i < rows_; ++i) {
        VecQ id(rows_);
        id[i] = Rat(1);
        m[i].insert(m[i].end(), id.begin(), id.end());
    }
    auto pivots = eliminate(m);
    if (pivots.size() != rows_) throw ValidationError("singular matrix");
    MatQ inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.a_[i][j] = m[i][cols_ + j];
    return inv;
}

std::optional<VecQ> MatQ::solve(const VecQ& b) const {
    if (b.size() != rows_) throw ValidationError("solve shape mismatch");
    auto m = a_;
    for (size_t i = 0; i < rows_; ++i) m[i].push_back(b[i]);
    auto pivots = eliminate(m);
    // inconsistent if a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    if (pivots.size() != cols_) return std::nullopt;  // underdetermined
    VecQ x(cols_);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
    return x;
}

std::vector<VecQ> MatQ::kernel() const {
    auto m = a_;
    auto pivots = eliminate(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<VecQ> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        VecQ v(cols_);
        v[free] = Rat(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

MatQ MatQ::rref() const {
    auto m = a_;
    eliminate(m);
    MatQ out(rows_, cols_);
    out.a_ = m;
    return out;
}

Rat dot(const VecQ& a, const VecQ& b) {
    Rat acc;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

VecQ vec_add(const VecQ& a, const VecQ& b) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

VecQ vec_sub(const VecQ& a, const VecQ& b) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

VecQ vec_scale(const Rat& c, const VecQ& a) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

bool is_zero_vec(const VecQ& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

bool is_zero_vec(const VecZ& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

size_t rank_of(const std::vector<VecQ>& vecs) {
    if (vecs.empty()) return 0;
    return MatQ::from_rows(vecs).rank();
}

size_t rank_of_z(const std::vector<VecZ>& vecs) {
    std::vector<VecQ> q;
    q.reserve(vecs.size());
    for (const auto& v : vecs) q.push_back(to_vecq(v));
    return rank_of(q);
}

Rat dot_zq(const VecZ& a, const VecQ& b) { return rat_from_int_vecdot(a, b); }

Int dot_zz(const VecZ& a, const VecZ& b) {
    Int acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

std::pair<VecZ, Rat> rescale_to_integral(const VecQ& v) {
    if (is_zero_vec(v)) throw ValidationError("cannot rescale the zero vector");
    Int lcm = 1;
    for (const auto& x : v) {
        Int d = x.denominator();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    VecZ w(v.size());
    Int gcd = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        w[i] = scaled.numerator();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w[i].get_mpz_t());
    }
    for (auto& x : w) x /= gcd;
    // v = (gcd/lcm) * w
    return {w, Rat(gcd, lcm)};
}

} // namespace mbs
