#include "weil/matrix.hpp"

#include <algorithm>

#include "weil/errors.hpp"

namespace weil {

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void RatMatrix::append_row(RatVec v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw MismatchError("row length mismatch");
    a_.push_back(std::move(v));
    ++rows_;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw MismatchError("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& v = a_[i][k];
            if (v == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.a_[k][j] == 0) continue;
                r.a_[i][j] += v * o.a_[k][j];
            }
        }
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MismatchError("matrix difference shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[i][j] = a_[i][j] - o.a_[i][j];
    return r;
}

RatVec RatMatrix::apply(const RatVec& v) const {
    if (v.size() != cols_) throw MismatchError("matrix apply shape mismatch");
    RatVec r(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (a_[i][j] == 0 || v[j] == 0) continue;
            r[i] += a_[i][j] * v[j];
        }
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[j][i] = a_[i][j];
    return r;
}

std::vector<size_t> RatMatrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && a_[sel][c] == 0) ++sel;
        if (sel == rows_) continue;
        std::swap(a_[sel], a_[r]);
        Rat inv = 1 / a_[r][c];
        for (size_t j = c; j < cols_; ++j) a_[r][j] *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || a_[i][c] == 0) continue;
            Rat f = a_[i][c];
            for (size_t j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a_.resize(r);
    rows_ = r;
    return pivots;
}

size_t RatMatrix::rank() const {
    RatMatrix copy(*this);
    return copy.rref().size();
}

RatMatrix RatMatrix::kernel() const {
    RatMatrix red(*this);
    std::vector<size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    RatMatrix ker(0, cols_);
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(cols_, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, c);
        ker.append_row(std::move(v));
    }
    ker.rref(); // canonical form
    return ker;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& b) const {
    if (b.size() != rows_) throw MismatchError("solve shape mismatch");
    RatMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = a_[i][j];
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == cols_) return std::nullopt; // 0 = 1 row
    RatVec x(cols_, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw MismatchError("only square matrices can be inverted");
    RatMatrix aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = a_[i][j];
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        throw MismatchError("matrix is singular");
    RatMatrix inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

bool is_zero_vec(const RatVec& v) {
    for (const Rat& q : v)
        if (q != 0) return false;
    return true;
}

RatVec add_vec(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MismatchError("vector length mismatch");
    RatVec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

RatVec sub_vec(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MismatchError("vector length mismatch");
    RatVec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

RatVec scale_vec(const Rat& c, const RatVec& v) {
    RatVec r(v);
    for (Rat& q : r) q *= c;
    return r;
}

LinSubspace LinSubspace::full(size_t ambient_dim) {
    LinSubspace s;
    s.ambient_dim_ = ambient_dim;
    s.rows_ = RatMatrix::identity(ambient_dim);
    for (size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
    return s;
}

LinSubspace LinSubspace::span(size_t ambient_dim, const std::vector<RatVec>& vectors) {
    LinSubspace s;
    s.ambient_dim_ = ambient_dim;
    s.rows_ = RatMatrix(0, ambient_dim);
    for (const RatVec& v : vectors) {
        if (v.size() != ambient_dim) throw MismatchError("span vector length mismatch");
        s.rows_.append_row(v);
    }
    s.pivots_ = s.rows_.rref();
    return s;
}

bool LinSubspace::contains(const RatVec& v) const {
    if (v.size() != ambient_dim_) throw MismatchError("containment length mismatch");
    RatVec rem(v);
    for (size_t i = 0; i < rows_.rows(); ++i) {
        const Rat& c = rem[pivots_[i]];
        if (c == 0) continue;
        Rat f = c;
        for (size_t j = 0; j < ambient_dim_; ++j) rem[j] -= f * rows_.at(i, j);
    }
    return is_zero_vec(rem);
}

RatVec LinSubspace::coords_of(const RatVec& v) const {
    if (v.size() != ambient_dim_) throw MismatchError("coords length mismatch");
    RatVec rem(v);
    RatVec coords(rows_.rows(), Rat(0));
    for (size_t i = 0; i < rows_.rows(); ++i) {
        Rat c = rem[pivots_[i]];
        if (c == 0) continue;
        coords[i] = c;
        for (size_t j = 0; j < ambient_dim_; ++j) rem[j] -= c * rows_.at(i, j);
    }
    if (!is_zero_vec(rem)) throw MismatchError("vector is not inside the subspace");
    return coords;
}

LinSubspace LinSubspace::intersect(const LinSubspace& o) const {
    if (ambient_dim_ != o.ambient_dim_) throw MismatchError("intersect ambient mismatch");
    // x in both spans: stack [A; B], kernel trick on coefficients.
    // Solve a^T * A = b^T * B; equivalently kernel of [A^T | -B^T].
    size_t da = dim(), db = o.dim();
    RatMatrix sys(ambient_dim_, da + db);
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < ambient_dim_; ++j) sys.at(j, i) = rows_.at(i, j);
    for (size_t i = 0; i < db; ++i)
        for (size_t j = 0; j < ambient_dim_; ++j) sys.at(j, da + i) = -o.rows_.at(i, j);
    RatMatrix ker = sys.kernel();
    std::vector<RatVec> vecs;
    for (size_t k = 0; k < ker.rows(); ++k) {
        RatVec v(ambient_dim_, Rat(0));
        for (size_t i = 0; i < da; ++i) {
            if (ker.at(k, i) == 0) continue;
            for (size_t j = 0; j < ambient_dim_; ++j) v[j] += ker.at(k, i) * rows_.at(i, j);
        }
        vecs.push_back(std::move(v));
    }
    return span(ambient_dim_, vecs);
}

LinSubspace LinSubspace::image_under(const RatMatrix& m) const {
    if (m.cols() != ambient_dim_) throw MismatchError("image_under shape mismatch");
    std::vector<RatVec> vecs;
    for (size_t i = 0; i < rows_.rows(); ++i) vecs.push_back(m.apply(rows_.row(i)));
    return span(m.rows(), vecs);
}

} // namespace weil
