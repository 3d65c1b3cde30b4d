#include "coinv/matrix.hpp"

#include <algorithm>

#include "coinv/error.hpp"

namespace coinv {

MatrixGF::MatrixGF(std::uint32_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), a_(rows * cols, 0)
{
}

MatrixGF MatrixGF::identity(std::uint32_t p, std::size_t n)
{
    MatrixGF m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

MatrixGF MatrixGF::from_rows(
    std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
{
    expect(!rows.empty(), "matrix needs at least one row");
    std::size_t cols = rows.front().size();
    expect(cols > 0, "matrix needs at least one column");
    MatrixGF m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        expect(rows[r].size() == cols, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, m.field_.reduce(rows[r][c]));
    }
    return m;
}

MatrixGF MatrixGF::operator*(const MatrixGF& m) const
{
    expect(p() == m.p(), "matrix moduli differ");
    expect(cols_ == m.rows_, "matrix shapes incompatible");
    MatrixGF r(p(), rows_, m.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t v = at(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < m.cols_; ++j) {
                r.set(i, j,
                      field_.add(r.at(i, j), field_.mul(v, m.at(k, j))));
            }
        }
    }
    return r;
}

MatrixGF MatrixGF::pow(std::uint64_t e) const
{
    expect(rows_ == cols_, "matrix power needs a square matrix");
    MatrixGF r = identity(p(), rows_);
    MatrixGF b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool MatrixGF::operator==(const MatrixGF& m) const
{
    return p() == m.p() && rows_ == m.rows_ && cols_ == m.cols_ &&
           a_ == m.a_;
}

bool MatrixGF::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u))
                return false;
    return true;
}

RrefResult rref(const MatrixGF& in)
{
    MatrixGF m = in;
    const Gf& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0)
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::uint32_t t = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, t);
            }
        std::uint32_t inv = k.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m.set(r, j, k.mul(m.at(r, j), inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r)
                continue;
            std::uint32_t f = m.at(i, c);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.set(i, j, k.sub(m.at(i, j), k.mul(f, m.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

bool invertible(const MatrixGF& m)
{
    return m.rows() == m.cols() && rank(m) == m.rows();
}

MatrixGF inverse(const MatrixGF& m)
{
    expect(m.rows() == m.cols(), "inverse needs a square matrix");
    std::size_t n = m.rows();
    MatrixGF aug(m.p(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    RrefResult r = rref(aug);
    expect(r.rank == n && r.pivot_cols.size() == n &&
               r.pivot_cols.back() == n - 1,
           "matrix is singular");
    MatrixGF out(m.p(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.set(i, j, r.m.at(i, n + j));
    return out;
}

MatrixGF transpose(const MatrixGF& m)
{
    MatrixGF r(m.p(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.set(j, i, m.at(i, j));
    return r;
}

namespace {

// Row-major packed matrix over GF(2).
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          bits_(rows * words_, 0)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c)
    {
        bits_[r * words_ + c / 64] ^= std::uint64_t(1) << (c % 64);
    }
    bool get(std::size_t r, std::size_t c) const
    {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
    }

    void xor_row(std::size_t dst, std::size_t src)
    {
        std::uint64_t* d = &bits_[dst * words_];
        const std::uint64_t* s = &bits_[src * words_];
        for (std::size_t w = 0; w < words_; ++w)
            d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(&bits_[a * words_], &bits_[a * words_ + words_],
                         &bits_[b * words_]);
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref()
    {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pr = r;
            while (pr < rows_ && !get(pr, c))
                ++pr;
            if (pr == rows_)
                continue;
            swap_rows(r, pr);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && get(i, c))
                    xor_row(i, r);
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

using SparseRows =
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>;

std::vector<std::vector<std::uint32_t>> kernel_gf2(std::size_t ncols,
                                                   const SparseRows& rows)
{
    std::size_t nrows = 0;
    for (const auto& row : rows)
        if (!row.empty())
            ++nrows;
    BitMatrix m(std::max<std::size_t>(nrows, 1), ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.empty())
            continue;
        for (auto [c, v] : row)
            if (v % 2)
                m.set(r, c);
        ++r;
    }
    std::vector<std::size_t> pivots = m.rref();

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::size_t dim = ncols - pivots.size();
    BitMatrix ker(std::max<std::size_t>(dim, 1), ncols);
    std::size_t kr = 0;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        ker.set(kr, f);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (m.get(k, f))
                ker.set(kr, pivots[k]);
        ++kr;
    }
    ker.rref();
    std::vector<std::vector<std::uint32_t>> out(
        dim, std::vector<std::uint32_t>(ncols, 0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t c = 0; c < ncols; ++c)
            if (ker.get(i, c))
                out[i][c] = 1;
    return out;
}

std::vector<std::vector<std::uint32_t>> kernel_dense(std::uint32_t p,
                                                     std::size_t ncols,
                                                     const SparseRows& rows)
{
    std::size_t nrows = 0;
    for (const auto& row : rows)
        if (!row.empty())
            ++nrows;
    expect(nrows * ncols <= 200u * 1000 * 1000,
           "dense kernel solve exceeds the size guard");
    MatrixGF m(p, std::max<std::size_t>(nrows, 1), ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.empty())
            continue;
        const Gf& k = m.field();
        for (auto [c, v] : row)
            m.set(r, c, k.add(m.at(r, c), v % p));
        ++r;
    }
    RrefResult rr = rref(m);
    const Gf& k = rr.m.field();

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : rr.pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> ker;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<std::uint32_t> v(ncols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = k.neg(rr.m.at(i, f));
        ker.push_back(std::move(v));
    }
    return row_space_basis(p, std::move(ker));
}

} // namespace

std::vector<std::vector<std::uint32_t>> kernel_basis_sparse(
    std::uint32_t p, std::size_t ncols, const SparseRows& rows)
{
    expect(ncols > 0, "kernel solve needs at least one column");
    if (p == 2)
        return kernel_gf2(ncols, rows);
    return kernel_dense(p, ncols, rows);
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const MatrixGF& m)
{
    SparseRows rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0)
                rows[r].push_back({static_cast<std::uint32_t>(c),
                                   m.at(r, c)});
    return kernel_basis_sparse(m.p(), m.cols(), rows);
}

std::vector<std::vector<std::uint32_t>> row_space_basis(
    std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows)
{
    if (rows.empty())
        return rows;
    std::size_t ncols = rows.front().size();
    MatrixGF m(p, rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        expect(rows[r].size() == ncols, "ragged rows");
        for (std::size_t c = 0; c < ncols; ++c)
            m.set(r, c, rows[r][c]);
    }
    RrefResult rr = rref(m);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::vector<std::uint32_t> v(ncols);
        for (std::size_t c = 0; c < ncols; ++c)
            v[c] = rr.m.at(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace coinv
