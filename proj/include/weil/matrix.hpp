// Dense exact-rational matrices and reduced-echelon subspaces.  Everything the
// category machinery does — equalizers, limits, canonical comparisons — ends
// up as one of the handful of primitives in this file.
#pragma once

#include <cstddef>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

using RatVec = std::vector<Rat>;

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, RatVec(cols, Rat(0))) {}

    static RatMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t r, size_t c) { return a_[r][c]; }
    const Rat& at(size_t r, size_t c) const { return a_[r][c]; }
    RatVec& row(size_t r) { return a_[r]; }
    const RatVec& row(size_t r) const { return a_[r]; }

    void append_row(RatVec v);

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatVec apply(const RatVec& v) const; // matrix * column vector
    RatMatrix transposed() const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // In-place reduced row echelon form; returns the pivot column of each
    // nonzero row, in order.  Zero rows are removed.
    std::vector<size_t> rref();

    size_t rank() const;

    // Basis of {x : A x = 0}, rows of the result, in RREF.
    RatMatrix kernel() const;

    // Solves A x = b; empty optional when inconsistent.  When the solution is
    // not unique an arbitrary representative is returned (free vars = 0).
    std::optional<RatVec> solve(const RatVec& b) const;

    // True iff A x = 0 has only the trivial solution.
    bool injective() const { return rank() == cols_; }

    // Inverse of a square invertible matrix; throws MismatchError otherwise.
    RatMatrix inverse() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<RatVec> a_;
};

bool is_zero_vec(const RatVec& v);
RatVec add_vec(const RatVec& a, const RatVec& b);
RatVec sub_vec(const RatVec& a, const RatVec& b);
RatVec scale_vec(const Rat& c, const RatVec& v);

// A linear subspace of Q^n held as a reduced-echelon row basis; equality of
// subspaces is literal equality of these canonical matrices.
class LinSubspace {
public:
    LinSubspace() = default;
    static LinSubspace full(size_t ambient_dim);
    static LinSubspace span(size_t ambient_dim, const std::vector<RatVec>& vectors);

    size_t ambient_dim() const { return ambient_dim_; }
    size_t dim() const { return rows_.rows(); }
    const RatMatrix& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(const RatVec& v) const;
    // Coordinates of v in the echelon basis; throws MismatchError when v is
    // not in the subspace.
    RatVec coords_of(const RatVec& v) const;

    LinSubspace intersect(const LinSubspace& o) const;
    // Image of this subspace under the linear map given by `m` (rows of the
    // subspace are mapped through m as column vectors).
    LinSubspace image_under(const RatMatrix& m) const;

    bool operator==(const LinSubspace& o) const {
        return ambient_dim_ == o.ambient_dim_ && rows_ == o.rows_;
    }

private:
    size_t ambient_dim_ = 0;
    RatMatrix rows_;               // RREF
    std::vector<size_t> pivots_;
};

} // namespace weil
