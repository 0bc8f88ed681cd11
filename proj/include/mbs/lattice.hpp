#pragma once
#include <vector>

#include "mbs/linalg.hpp"

namespace mbs {

/// Dense integer matrix, row-major.
class MatZ {
public:
    MatZ() : rows_(0), cols_(0) {}
    MatZ(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, VecZ(cols, 0)) {}

    static MatZ identity(size_t n);
    static MatZ from_cols(const std::vector<VecZ>& cols);
    static MatZ from_rows(const std::vector<VecZ>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return a_[i][j]; }
    const Int& at(size_t i, size_t j) const { return a_[i][j]; }
    VecZ col(size_t j) const;
    const VecZ& row(size_t i) const { return a_[i]; }

    MatZ operator*(const MatZ& o) const;
    VecZ apply(const VecZ& v) const;
    VecQ apply(const VecQ& v) const;
    MatQ to_q() const;

    void swap_cols(size_t i, size_t j);
    void swap_rows(size_t i, size_t j);
    void negate_col(size_t j);
    void add_col_multiple(size_t dst, size_t src, const Int& f);  // col_dst += f*col_src
    void add_row_multiple(size_t dst, size_t src, const Int& f);

private:
    size_t rows_, cols_;
    std::vector<VecZ> a_;
};

struct HnfResult {
    MatZ h;  // M*U = H, lower triangular, positive pivots, reduced off-pivots
    MatZ u;  // unimodular
};

/// Column-style Hermite normal form.
HnfResult hermite_normal_form(const MatZ& m);

struct SnfResult {
    MatZ u, d, v;  // U*M*V = D diagonal, d_i | d_{i+1}, d_i >= 0
};

/// Smith normal form with unimodular U, V.
SnfResult smith_normal_form(const MatZ& m);

/// Representatives of Z^r / (Z sub_basis), each reduced into the half-open
/// fundamental parallelepiped of the sublattice, ordered lexicographically
/// in Smith coordinates.  Throws ValidationError if sub_basis is not a
/// rank-r family of integer vectors.
std::vector<VecZ> coset_representatives(const std::vector<VecZ>& sub_basis);

/// Primitive integer covector vanishing on a hyperplane given by spanning
/// vectors; sign fixed by first nonzero entry positive.
VecZ primitive_equation(const std::vector<VecQ>& span, size_t ambient_dim);
VecZ primitive_equation_z(const std::vector<VecZ>& span, size_t ambient_dim);

/// Adapted unimodular coordinates for a rational subspace s of Q^r:
/// the columns of `completion` form a Z-basis of Z^r whose first `dim`
/// columns form a saturated basis of Z^r n s.  chart_rows/proj_rows are the
/// first dim / last r-dim rows of completion^{-1} (integer matrices), so a
/// point p decomposes as chart coordinates on s plus quotient coordinates on
/// which the projected lattice is Z^{r-dim}.
struct SubspaceChart {
    size_t ambient_dim = 0;
    size_t dim = 0;
    std::vector<VecZ> basis;  // saturated basis of Z^r n s (dim vectors)
    MatZ completion;          // r x r unimodular
    MatZ chart_rows;          // dim x r
    MatZ proj_rows;           // (r-dim) x r
};

/// Chart for the subspace spanned by the given rational vectors.
SubspaceChart subspace_chart(const std::vector<VecQ>& span, size_t ambient_dim);
SubspaceChart subspace_chart_z(const std::vector<VecZ>& span, size_t ambient_dim);

/// Saturated basis of Z^r n span (convenience wrapper around subspace_chart).
std::vector<VecZ> lattice_intersect(const std::vector<VecQ>& span, size_t ambient_dim);

/// Solves <e, x> = k over x in Z^r for primitive e.
VecZ lattice_preimage(const VecZ& e, const Int& k);

} // namespace mbs
