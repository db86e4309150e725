// Dense exact matrices and the linear-algebra kernel: solving, kernels,
// images, quotients, Kronecker products and the Hom-coordinate contract.
//
// Conventions, fixed globally and relied on by every other header:
//   * a linear map f : k^n -> k^m is the m x n matrix whose column j is
//     f(e_j); composition is matrix multiplication.
//   * the basis of V (x) W is ordered lexicographically, (i,j) |-> i*dim(W)+j,
//     and kron() follows that ordering.
//   * Hom(k^n, k^m) is identified with k^(m*n) by flattening row-major
//     (flatten/unflatten below). With these choices
//     flatten(A*X*B) = kron(A, transpose(B)) * flatten(X).

#pragma once

#include "scalar.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopflab {

template <field_scalar K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(Field<K> f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

    static Mat identity(Field<K> f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }
    static Mat zero(Field<K> f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }

    static Mat from_rows(Field<K> f, std::vector<std::vector<K>> rows) {
        std::size_t r = rows.size(), c = r == 0 ? 0 : rows[0].size();
        Mat m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    // column vector from entries
    static Mat col_vec(Field<K> f, std::vector<K> v) {
        Mat m(f, v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }
    static Mat basis_vec(Field<K> f, std::size_t n, std::size_t i) {
        Mat m(f, n, 1);
        m(i, 0) = f.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field<K>& field() const { return field_; }

    K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (const K& x : e_)
            if (!(x == field_.zero())) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == (i == j ? field_.one() : field_.zero()))) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (!(a.e_[i] == b.e_[i])) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.same_shape(b, "+");
        Mat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        a.same_shape(b, "-");
        Mat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (K& x : r.e_) x = -x;
        return r;
    }
    friend Mat operator*(const K& s, const Mat& a) {
        Mat r = a;
        for (K& x : r.e_) x = s * x;
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Mat r(a.field_, a.rows_, b.cols_);
        const K z = a.field_.zero();
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik == z) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (bkj == z) continue;
                    r(i, j) = r(i, j) + aik * bkj;
                }
            }
        return r;
    }

    Mat transpose() const {
        Mat r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat col(std::size_t j) const {
        Mat r(field_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }
    void set_col(std::size_t j, const Mat& v) {
        if (v.rows_ != rows_ || v.cols_ != 1) throw std::invalid_argument("set_col: bad shape");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
    }

    friend Mat hstack(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
        Mat r(a.field_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }
    friend Mat vstack(const Mat& a, const Mat& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
        Mat r(a.field_, a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    // block diagonal; realizes direct sums of maps
    friend Mat dsum(const Mat& a, const Mat& b) {
        Mat r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << field_.str((*this)(i, j));
        }
        os << "]";
        return os.str();
    }

private:
    void same_shape(const Mat& b, const char* op) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument(std::string("matrix ") + op + ": shape mismatch");
    }
    Field<K> field_;
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

// Kronecker product in the fixed lexicographic basis order.
template <field_scalar K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    const K z = a.field().zero();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const K& aij = a(i, j);
            if (aij == z) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const K& bkl = b(k, l);
                    if (bkl == z) continue;
                    r(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return r;
}

// Hom-coordinate contract: row-major flattening of an m x n matrix into k^(m*n).
template <field_scalar K>
Mat<K> flatten(const Mat<K>& f) {
    Mat<K> v(f.field(), f.rows() * f.cols(), 1);
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) v(i * f.cols() + j, 0) = f(i, j);
    return v;
}

template <field_scalar K>
Mat<K> unflatten(const Mat<K>& v, std::size_t rows, std::size_t cols) {
    if (v.rows() != rows * cols || v.cols() != 1) throw std::invalid_argument("unflatten: bad shape");
    Mat<K> f(v.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) f(i, j) = v(i * cols + j, 0);
    return f;
}

// Matrix of a linear operator on Hom-coordinates, built column by column from
// its action on basis matrices. Keeps the large structured operators sparse
// work instead of forming giant Kronecker intermediates.
template <field_scalar K>
Mat<K> operator_matrix(Field<K> f, std::size_t dom_rows, std::size_t dom_cols,
                       const std::function<Mat<K>(const Mat<K>&)>& op) {
    Mat<K> probe(f, dom_rows, dom_cols);
    Mat<K> first = op(probe);
    Mat<K> result(f, first.rows() * first.cols(), dom_rows * dom_cols);
    for (std::size_t i = 0; i < dom_rows; ++i)
        for (std::size_t j = 0; j < dom_cols; ++j) {
            probe(i, j) = f.one();
            result.set_col(i * dom_cols + j, flatten(op(probe)));
            probe(i, j) = f.zero();
        }
    return result;
}

// Permutation of tensor factors: perm[i] is the source factor placed at
// target position i, all bases ordered lexicographically.
template <field_scalar K>
Mat<K> permute_tensor(Field<K> f, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& perm) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    std::vector<std::size_t> tgt_dims(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) tgt_dims[i] = dims[perm[i]];
    Mat<K> p(f, total, total);
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t col = 0; col < total; ++col) {
        // decode col in source dims
        std::size_t rem = col;
        for (std::size_t i = dims.size(); i-- > 0;) {
            idx[i] = rem % dims[i];
            rem /= dims[i];
        }
        std::size_t row = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) row = row * tgt_dims[i] + idx[perm[i]];
        p(row, col) = f.one();
    }
    return p;
}

// the twist V (x) W -> W (x) V
template <field_scalar K>
Mat<K> twist(Field<K> f, std::size_t dv, std::size_t dw) {
    return permute_tensor<K>(f, {dv, dw}, {1, 0});
}

template <field_scalar K>
struct Subspace {
    std::size_t ambient = 0;
    Mat<K> basis;  // ambient x dim, linearly independent columns

    std::size_t dim() const { return basis.cols(); }
};

template <field_scalar K>
struct QuotientSpace {
    Mat<K> projection;  // quotient_dim x ambient
    Mat<K> section;     // ambient x quotient_dim, projection * section = I

    std::size_t ambient() const { return projection.cols(); }
    std::size_t dim() const { return projection.rows(); }
};

// Incremental column-echelon basis. Used for images and quotient
// constructions; keeps columns Gauss-Jordan reduced so membership tests and
// further insertions stay cheap.
template <field_scalar K>
class SpanBuilder {
public:
    explicit SpanBuilder(Field<K> f, std::size_t ambient)
        : field_(f), ambient_(ambient) {}

    // reduces v against the current basis; inserts if independent
    bool push(Mat<K> v) {
        reduce(v);
        std::size_t piv = ambient_;
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!(v(i, 0) == field_.zero())) { piv = i; break; }
        if (piv == ambient_) return false;
        const K z = field_.zero();
        K inv = field_.one() / v(piv, 0);
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!(v(i, 0) == z)) v(i, 0) = inv * v(i, 0);
        // back-substitute into existing columns
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            K factor = cols_[c](piv, 0);
            if (factor == z) continue;
            for (std::size_t i = 0; i < ambient_; ++i)
                if (!(v(i, 0) == z)) cols_[c](i, 0) = cols_[c](i, 0) - factor * v(i, 0);
        }
        cols_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    bool contains(Mat<K> v) const {
        reduce(v);
        return v.is_zero();
    }

    std::size_t dim() const { return cols_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Subspace<K> to_subspace() const {
        Subspace<K> s;
        s.ambient = ambient_;
        s.basis = Mat<K>(field_, ambient_, cols_.size());
        for (std::size_t c = 0; c < cols_.size(); ++c) s.basis.set_col(c, cols_[c]);
        return s;
    }

private:
    void reduce(Mat<K>& v) const {
        const K z = field_.zero();
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            K factor = v(pivots_[c], 0);
            if (factor == z) continue;
            const Mat<K>& col = cols_[c];
            for (std::size_t i = 0; i < ambient_; ++i)
                if (!(col(i, 0) == z)) v(i, 0) = v(i, 0) - factor * col(i, 0);
        }
    }
    Field<K> field_;
    std::size_t ambient_;
    std::vector<Mat<K>> cols_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

// reduced row echelon form, in place; returns pivot columns
template <field_scalar K>
std::vector<std::size_t> rref(Mat<K>& a) {
    const Field<K>& f = a.field();
    const K z = f.zero();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i)
            if (!(a(i, col) == z)) { sel = i; break; }
        if (sel == a.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(sel, j));
        K inv = f.one() / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            if (!(a(row, j) == z)) a(row, j) = inv * a(row, j);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            K factor = a(i, col);
            if (factor == z) continue;
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!(a(row, j) == z)) a(i, j) = a(i, j) - factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <field_scalar K>
std::size_t rank(const Mat<K>& a) {
    Mat<K> r = a;
    return detail::rref(r).size();
}

template <field_scalar K>
Subspace<K> kernel(const Mat<K>& a) {
    Mat<K> r = a;
    std::vector<std::size_t> pivots = detail::rref(r);
    const Field<K>& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    Subspace<K> ker;
    ker.ambient = a.cols();
    ker.basis = Mat<K>(f, a.cols(), a.cols() - pivots.size());
    std::size_t kcol = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        ker.basis(free, kcol) = f.one();
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            ker.basis(pivots[pi], kcol) = -r(pi, free);
        ++kcol;
    }
    return ker;
}

template <field_scalar K>
Subspace<K> image(const Mat<K>& a) {
    SpanBuilder<K> span(a.field(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) span.push(a.col(j));
    return span.to_subspace();
}

template <field_scalar K>
struct SolveResult {
    std::optional<Mat<K>> particular;  // one solution of A x = b, when consistent
    Subspace<K> kernel;                // basis of ker(A)

    bool consistent() const { return particular.has_value(); }
};

template <field_scalar K>
SolveResult<K> solve(const Mat<K>& a, const Mat<K>& b) {
    if (b.rows() != a.rows() || b.cols() != 1)
        throw std::invalid_argument("solve: right-hand side shape mismatch");
    Mat<K> aug = hstack(a, b);
    std::vector<std::size_t> pivots = detail::rref(aug);
    SolveResult<K> res;
    res.kernel = kernel(a);
    if (!pivots.empty() && pivots.back() == a.cols()) return res;  // inconsistent
    Mat<K> x(a.field(), a.cols(), 1);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x(pivots[pi], 0) = aug(pi, a.cols());
    res.particular = std::move(x);
    return res;
}

// Solve A X = B column by column; nullopt if any column is inconsistent.
template <field_scalar K>
std::optional<Mat<K>> solve_matrix(const Mat<K>& a, const Mat<K>& b) {
    if (b.rows() != a.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    Mat<K> aug = hstack(a, b);
    std::vector<std::size_t> pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
    Mat<K> x(a.field(), a.cols(), b.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[pi], j) = aug(pi, a.cols() + j);
    // rref may leave unsolved rows only if rank(aug) > rank(a), handled above
    return x;
}

template <field_scalar K>
std::optional<Mat<K>> inverse(const Mat<K>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    std::optional<Mat<K>> inv = solve_matrix(a, Mat<K>::identity(a.field(), a.rows()));
    if (!inv) return std::nullopt;
    if (!((*inv) * a).is_identity()) return std::nullopt;  // rank-deficient square case
    return inv;
}

template <field_scalar K>
bool is_bijective(const Mat<K>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

// Quotient of k^ambient by a subspace: projection annihilating exactly the
// subspace plus a chosen section, so composites through the quotient are
// literal matrix products. The Gauss-Jordan form of the subspace basis gives
// the projection directly: reduce against the basis, then read off the
// non-pivot coordinates.
template <field_scalar K>
QuotientSpace<K> quotient_by(Field<K> f, std::size_t ambient, const Subspace<K>& s) {
    if (s.ambient != ambient) throw std::invalid_argument("quotient_by: ambient mismatch");
    SpanBuilder<K> span(f, ambient);
    for (std::size_t j = 0; j < s.basis.cols(); ++j) span.push(s.basis.col(j));
    Subspace<K> sub = span.to_subspace();  // Gauss-Jordan reduced
    std::size_t d = sub.dim();
    std::vector<bool> is_pivot(ambient, false);
    for (std::size_t piv : span.pivots()) is_pivot[piv] = true;
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < ambient; ++i)
        if (!is_pivot[i]) complement.push_back(i);
    std::size_t q = complement.size();
    QuotientSpace<K> quo;
    // projection row r: e_{complement[r]} - sum_c basis_c(complement[r]) e_{pivot_c}
    quo.projection = Mat<K>(f, q, ambient);
    for (std::size_t r = 0; r < q; ++r) {
        quo.projection(r, complement[r]) = f.one();
        for (std::size_t c = 0; c < d; ++c)
            quo.projection(r, span.pivots()[c]) = -sub.basis(complement[r], c);
    }
    quo.section = Mat<K>(f, ambient, q);
    for (std::size_t j = 0; j < q; ++j) quo.section(complement[j], j) = f.one();
    return quo;
}

// coordinates of v in the column span of basis; nullopt if outside
template <field_scalar K>
std::optional<Mat<K>> coords_in(const Subspace<K>& s, const Mat<K>& v) {
    SolveResult<K> r = solve(s.basis, v);
    if (!r.consistent()) return std::nullopt;
    return r.particular;
}

template <field_scalar K>
std::optional<Mat<K>> coords_in_matrix(const Subspace<K>& s, const Mat<K>& vs) {
    return solve_matrix(s.basis, vs);
}

}  // namespace hopflab
