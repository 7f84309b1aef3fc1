#ifndef SYMCRIT_LINALG_HPP
#define SYMCRIT_LINALG_HPP

#include <Eigen/Core>
#include <unsupported/Eigen/KroneckerProduct>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symcrit/bigrational.hpp"
#include "symcrit/cyclotomic.hpp"
#include "symcrit/errors.hpp"

namespace symcrit {

// Dense exact linear algebra, templated on the scalar field. Everything here
// works for any exact field type T with T(0), T(1), + - * / and ==, plus a
// free `is_zero(const T&)` found by ADL (BigRational and CycNum provide one).

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
using RowMat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ExactMatrix = Mat<CycNum>;
using RationalMatrix = Mat<BigRational>;

template <typename T>
Mat<T> identity(Eigen::Index n) {
    return Mat<T>::Identity(n, n);
}

template <typename T>
Mat<T> diag(std::initializer_list<T> entries) {
    Mat<T> m = Mat<T>::Zero(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto& e : entries) {
        m(i, i) = e;
        ++i;
    }
    return m;
}

template <typename T>
bool is_zero_matrix(const Mat<T>& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <typename T>
bool equal(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    // Skips structural zeros, which dominate representation matrices.
    Mat<T> out = Mat<T>::Zero(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (is_zero(b(k, j))) continue;
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                if (!is_zero(a(i, k))) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <typename T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

template <typename T>
Mat<T> direct_sum(std::span<const Mat<T>> blocks) {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw DimensionMismatch("direct_sum: blocks must be square");
        rows += b.rows();
        cols += b.cols();
    }
    Mat<T> out = Mat<T>::Zero(rows, cols);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return out;
}

template <typename T>
Mat<T> direct_sum(std::initializer_list<Mat<T>> blocks) {
    std::vector<Mat<T>> v(blocks);
    return direct_sum<T>(std::span<const Mat<T>>(v));
}

/// Determinant: closed form up to 3x3, Bareiss fraction-free elimination above.
template <typename T>
T det(const Mat<T>& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("det: matrix is not square");
    const Eigen::Index n = a.rows();
    if (n == 0) return T(1);
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (n == 3)
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    RowMat<T> m = a;
    bool negate = false;
    T prev_inv(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index p = k;
        while (p < n && is_zero(m(p, k))) ++p;
        if (p == n) return T(0);
        if (p != k) {
            m.row(p).swap(m.row(k));
            negate = !negate;
        }
        const T pivot = m(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const T lead = m(i, k);
            for (Eigen::Index j = k + 1; j < n; ++j) {
                T v = pivot * m(i, j);
                if (!is_zero(lead) && !is_zero(m(k, j))) v -= lead * m(k, j);
                m(i, j) = v * prev_inv;
            }
            m(i, k) = T(0);
        }
        prev_inv = T(1) / pivot;
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Reduced row echelon form with the first non-zero entry of each column
/// (in row order) as pivot.
template <typename T>
struct Echelon {
    RowMat<T> reduced;
    std::vector<Eigen::Index> pivots;
};

template <typename T, typename Derived>
Echelon<T> rref(const Eigen::MatrixBase<Derived>& a) {
    Echelon<T> e;
    e.reduced = a;
    RowMat<T>& m = e.reduced;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const T inv = T(1) / m(r, c);
        m(r, c) = T(1);
        std::vector<Eigen::Index> support;
        for (Eigen::Index j = c + 1; j < cols; ++j)
            if (!is_zero(m(r, j))) {
                m(r, j) = m(r, j) * inv;
                support.push_back(j);
            }
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (Eigen::Index j : support) m(i, j) -= f * m(r, j);
            m(i, c) = T(0);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

template <typename T>
Eigen::Index rank(const Mat<T>& a) {
    return static_cast<Eigen::Index>(rref<T>(a).pivots.size());
}

/// Basis of ker(A) as column vectors. The basis is canonical: stacked as rows
/// it is in reduced echelon form, so every vector has leading coefficient 1.
template <typename T>
std::vector<Mat<T>> nullspace(const Mat<T>& a) {
    const Eigen::Index cols = a.cols();
    const Echelon<T> e = rref<T>(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    if (free_cols.empty()) return {};
    RowMat<T> basis = RowMat<T>::Zero(static_cast<Eigen::Index>(free_cols.size()), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const Eigen::Index f = free_cols[k];
        basis(static_cast<Eigen::Index>(k), f) = T(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            const T& v = e.reduced(static_cast<Eigen::Index>(i), f);
            if (!is_zero(v)) basis(static_cast<Eigen::Index>(k), e.pivots[i]) = -v;
        }
    }
    const Echelon<T> canon = rref<T>(basis);
    std::vector<Mat<T>> out;
    out.reserve(free_cols.size());
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(free_cols.size()); ++k)
        out.emplace_back(canon.reduced.row(k).transpose());
    return out;
}

template <typename T>
Mat<T> inverse(const Mat<T>& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix is not square");
    const Eigen::Index n = a.rows();
    RowMat<T> aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = Mat<T>::Identity(n, n);
    const Echelon<T> e = rref<T>(aug);
    if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw NotInvertible("inverse: matrix is singular");
    return e.reduced.rightCols(n);
}

template <typename T>
Mat<T> transpose(const Mat<T>& a) {
    return a.transpose();
}

/// Column-major vectorization, matching vec(A X B) = (B^T kron A) vec(X).
template <typename T>
Mat<T> vec(const Mat<T>& a) {
    Mat<T> v(a.rows() * a.cols(), 1);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) v(j * a.rows() + i, 0) = a(i, j);
    return v;
}

template <typename T>
Mat<T> unvec(const Mat<T>& v, Eigen::Index rows, Eigen::Index cols) {
    Mat<T> a(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = v(j * rows + i, 0);
    return a;
}

/// Lifts every entry to the lcm of the entry conductors.
ExactMatrix unify_conductor(const ExactMatrix& a);
ExactMatrix lift(const ExactMatrix& a, int conductor);
int common_conductor(const ExactMatrix& a);
ExactMatrix to_exact(const RationalMatrix& a);
/// Entrywise Galois action zeta -> zeta^k.
ExactMatrix galois_map(const ExactMatrix& a, long k);
ExactMatrix scale(const ExactMatrix& a, const CycNum& s);

/// Hash over raw coefficients; only meaningful among matrices of one conductor.
struct ExactMatrixHash {
    std::size_t operator()(const ExactMatrix& a) const;
};
struct ExactMatrixEqual {
    bool operator()(const ExactMatrix& a, const ExactMatrix& b) const { return equal(a, b); }
};

std::string to_string(const ExactMatrix& a);
std::string to_string(const RationalMatrix& a);

}  // namespace symcrit

#endif  // SYMCRIT_LINALG_HPP
