#pragma once
#include <optional>
#include <vector>

#include "mbs/rat.hpp"

namespace mbs {

/// Dense rational matrix, row-major.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, VecQ(cols)) {}

    static MatQ identity(size_t n);
    static MatQ from_rows(const std::vector<VecQ>& rows);
    static MatQ from_cols(const std::vector<VecQ>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i][j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i][j]; }
    const VecQ& row(size_t i) const { return a_[i]; }
    VecQ col(size_t j) const;

    MatQ transposed() const;
    MatQ operator*(const MatQ& o) const;
    VecQ apply(const VecQ& v) const;

    size_t rank() const;
    Rat det() const;
    /// Inverse; throws ValidationError when singular.
    MatQ inverse() const;
    /// Unique solution x of A x = b; nullopt when there is no unique solution.
    std::optional<VecQ> solve(const VecQ& b) const;
    /// Basis of the right kernel {x : A x = 0}.
    std::vector<VecQ> kernel() const;
    /// Reduced row echelon form (canonical for span comparison).
    MatQ rref() const;

private:
    size_t rows_, cols_;
    std::vector<VecQ> a_;
};

Rat dot(const VecQ& a, const VecQ& b);
VecQ vec_add(const VecQ& a, const VecQ& b);
VecQ vec_sub(const VecQ& a, const VecQ& b);
VecQ vec_scale(const Rat& c, const VecQ& a);
bool is_zero_vec(const VecQ& v);
bool is_zero_vec(const VecZ& v);

/// Rank of a set of rational vectors.
size_t rank_of(const std::vector<VecQ>& vecs);
size_t rank_of_z(const std::vector<VecZ>& vecs);

Rat dot_zq(const VecZ& a, const VecQ& b);
Int dot_zz(const VecZ& a, const VecZ& b);

/// Scales a rational vector to a primitive integer vector; returns the
/// positive factor c such that v = c * primitive.
std::pair<VecZ, Rat> rescale_to_integral(const VecQ& v);

} // namespace mbs
