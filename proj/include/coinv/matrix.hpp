#ifndef COINV_MATRIX_HPP
#define COINV_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "coinv/gf.hpp"

namespace coinv {

// Dense matrix over GF(p).
class MatrixGF {
public:
    MatrixGF(std::uint32_t p, std::size_t rows, std::size_t cols);

    static MatrixGF identity(std::uint32_t p, std::size_t n);
    static MatrixGF from_rows(
        std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

    std::uint32_t p() const { return field_.p(); }
    const Gf& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const
    {
        return a_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint32_t v)
    {
        a_[r * cols_ + c] = v % field_.p();
    }

    MatrixGF operator*(const MatrixGF& m) const;
    MatrixGF pow(std::uint64_t e) const;
    bool operator==(const MatrixGF& m) const;
    bool is_identity() const;

private:
    Gf field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    MatrixGF m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

RrefResult rref(const MatrixGF& m);
std::size_t rank(const MatrixGF& m);
bool invertible(const MatrixGF& m);
MatrixGF inverse(const MatrixGF& m); // throws input_error when singular
MatrixGF transpose(const MatrixGF& m);

// Basis of {v : Mv = 0}, canonicalized to reduced echelon form.
// Deterministic for a fixed input.
std::vector<std::vector<std::uint32_t>> kernel_basis(const MatrixGF& m);

// Same kernel computation with rows supplied sparsely as (col, value)
// lists; empty rows are ignored. Used by the per-degree invariant solver,
// whose matrices are large but sparse. p == 2 runs bit-packed.
std::vector<std::vector<std::uint32_t>> kernel_basis_sparse(
    std::uint32_t p, std::size_t ncols,
    const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>&
        rows);

// Reduced row echelon form of a set of coefficient vectors; returns the
// nonzero rows. Canonical basis of their span.
std::vector<std::vector<std::uint32_t>> row_space_basis(
    std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows);

} // namespace coinv

#endif
