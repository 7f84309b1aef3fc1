#ifndef SYMCRIT_REPS_HPP
#define SYMCRIT_REPS_HPP

#include <span>
#include <string>
#include <vector>

#include "symcrit/groups.hpp"
#include "symcrit/linalg.hpp"

namespace symcrit {

/// Matrix of Sym^n(g) on the monomial basis x^(n-k) y^k, k = 0..n: column k
/// holds the coefficients of (a x + c y)^(n-k) (b x + d y)^k for
/// g = [[a, b], [c, d]]. Sym^3(diag(a, b)) = diag(a^3, a^2 b, a b^2, b^3).
template <typename T>
Mat<T> sym_power_matrix(const Mat<T>& g, int n) {
    if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("sym_power needs a 2x2 matrix");
    if (n < 0) throw PreconditionFailed("sym_power needs n >= 0");
    const T& a = g(0, 0);
    const T& b = g(0, 1);
    const T& c = g(1, 0);
    const T& d = g(1, 1);
    // Index = power of y.
    auto powers = [n](const T& x_coeff, const T& y_coeff) {
        std::vector<std::vector<T>> p{{T(1)}};
        for (int j = 1; j <= n; ++j) {
            const auto& prev = p.back();
            std::vector<T> next(static_cast<std::size_t>(j) + 1, T(0));
            for (std::size_t i = 0; i < prev.size(); ++i) {
                if (is_zero(prev[i])) continue;
                if (!is_zero(x_coeff)) next[i] += prev[i] * x_coeff;
                if (!is_zero(y_coeff)) next[i + 1] += prev[i] * y_coeff;
            }
            p.push_back(std::move(next));
        }
        return p;
    };
    const auto first = powers(a, c);
    const auto second = powers(b, d);
    Mat<T> out = Mat<T>::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        const auto& u = first[static_cast<std::size_t>(n - k)];
        const auto& v = second[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (is_zero(u[i])) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!is_zero(v[j])) out(static_cast<Eigen::Index>(i + j), k) += u[i] * v[j];
        }
    }
    return out;
}

/// Basis of {X : X sources[k] = targets[k] X for every k}, each X of size
/// targets[k].rows() x sources[k].rows(), echelon-normalized via vec(X).
/// The constraint blocks are applied one at a time, each restricted to the
/// kernel of the blocks before it.
template <typename T>
std::vector<Mat<T>> intertwiner_basis(std::span<const Mat<T>> sources, std::span<const Mat<T>> targets) {
    if (sources.size() != targets.size() || sources.empty())
        throw DimensionMismatch("intertwiner_basis: need matching, non-empty source and target lists");
    const Eigen::Index s = sources.front().rows();
    const Eigen::Index t = targets.front().rows();
    const Eigen::Index unknowns = t * s;
    // Unknown X(i, j) sits at i + t*j; block k holds X A_k - B_k X = 0.
    auto block = [&](std::size_t k) {
        const Mat<T>& a = sources[k];
        const Mat<T>& b = targets[k];
        if (a.rows() != s || a.cols() != s || b.rows() != t || b.cols() != t)
            throw DimensionMismatch("intertwiner_basis: inconsistent matrix sizes");
        Mat<T> eq = Mat<T>::Zero(unknowns, unknowns);
        for (Eigen::Index j = 0; j < s; ++j)
            for (Eigen::Index i = 0; i < t; ++i) {
                const Eigen::Index row = i + t * j;
                for (Eigen::Index l = 0; l < s; ++l)
                    if (!is_zero(a(l, j))) eq(row, i + t * l) += a(l, j);
                for (Eigen::Index l = 0; l < t; ++l)
                    if (!is_zero(b(i, l))) eq(row, l + t * j) -= b(i, l);
            }
        return eq;
    };
    std::vector<Mat<T>> kernel = nullspace(block(0));
    for (std::size_t k = 1; k < sources.size() && !kernel.empty(); ++k) {
        Mat<T> span(unknowns, static_cast<Eigen::Index>(kernel.size()));
        for (std::size_t c = 0; c < kernel.size(); ++c) span.col(static_cast<Eigen::Index>(c)) = kernel[c];
        std::vector<Mat<T>> next;
        for (const auto& y : nullspace(mat_mul(block(k), span))) next.push_back(mat_mul(span, y));
        kernel = std::move(next);
    }
    std::vector<Mat<T>> out;
    if (kernel.empty()) return out;
    RowMat<T> stacked(static_cast<Eigen::Index>(kernel.size()), unknowns);
    for (std::size_t r = 0; r < kernel.size(); ++r) stacked.row(static_cast<Eigen::Index>(r)) = kernel[r].transpose();
    const Echelon<T> canon = rref<T>(stacked);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        out.push_back(unvec(Mat<T>(canon.reduced.row(static_cast<Eigen::Index>(r)).transpose()), t, s));
    return out;
}

/// A representation of a finite matrix group, stored as one image per element.
struct Representation {
    GroupPtr group;
    Eigen::Index degree = 0;
    std::vector<ExactMatrix> images;
    std::string name;

    const ExactMatrix& operator()(int g) const { return images[static_cast<std::size_t>(g)]; }
    /// lcm of the conductors of all image entries.
    int conductor() const;
    /// Identity maps to I and images[g] * images[s] == images[gs] for every
    /// element g and generator s.
    bool is_homomorphism() const;

    /// The inclusion of the group into GL_dim.
    static Representation defining(const GroupPtr& g, std::string name = "sigma");
    static Representation trivial(const GroupPtr& g, Eigen::Index degree = 1);
    static Representation from_character(const LinearCharacter& chi, std::string name = "chi");
    /// Extends generator images along the word tree; throws if the result is
    /// not a homomorphism.
    static Representation from_generator_images(const GroupPtr& g, const std::vector<ExactMatrix>& generator_images,
                                                std::string name = "rho");
};

/// Per-element trace values.
struct CharacterVector {
    GroupPtr group;
    std::vector<CycNum> values;

    const CycNum& operator()(int g) const { return values[static_cast<std::size_t>(g)]; }
    CharacterVector conj() const;
    bool is_class_function() const;

    friend CharacterVector operator+(const CharacterVector& a, const CharacterVector& b);
    friend CharacterVector operator*(const CharacterVector& a, const CharacterVector& b);
    friend CharacterVector operator*(const CharacterVector& a, const LinearCharacter& chi);
    friend bool operator==(const CharacterVector& a, const CharacterVector& b);
    friend bool operator!=(const CharacterVector& a, const CharacterVector& b) { return !(a == b); }
};

/// Basis of Hom_G(source, target): matrices X (target.degree x source.degree)
/// with X source(g) = target(g) X.
struct HomSpace {
    Eigen::Index source_degree = 0;
    Eigen::Index target_degree = 0;
    std::vector<ExactMatrix> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

Representation sym_power(const Representation& rho, int n);
Representation tensor(const Representation& rho, const Representation& tau);
Representation dual(const Representation& rho);
Representation twist(const Representation& rho, const LinearCharacter& chi);
LinearCharacter det_character(const Representation& rho);
/// A^n(rho) = Sym^n(rho) twisted by the inverse determinant.
Representation a_power(const Representation& rho, int n);
inline Representation adjoint(const Representation& rho) { return a_power(rho, 2); }
Representation direct_sum(const Representation& rho, const Representation& tau);
/// Restriction to H, as a representation of h.group.
Representation restrict(const Representation& rho, const Subgroup& h);
/// Ind_H^G mu for [G:H] = 2 with coset representative c, on the basis
/// {e, c^-1 e}: g in H maps to diag(mu(g), mu(c g c^-1)); g outside H maps to
/// the antidiagonal matrix with mu(g c^-1) in the top row and mu(c g) in the
/// bottom row.
Representation induce_index2(const LinearCharacter& mu, const Subgroup& h);
/// Applies zeta -> zeta^k entrywise to every image.
Representation galois_conjugate(const Representation& rho, long k);
/// Group generated by the images of the group generators.
GroupPtr image_group(const Representation& rho, std::size_t cap = kDefaultClosureCap);

CharacterVector character(const Representation& rho);
CharacterVector character(const LinearCharacter& chi);
/// (1/|G|) sum_g a(g) conj(b(g)), summed over conjugacy classes.
CycNum inner_product(const CharacterVector& a, const CharacterVector& b);
/// inner_product as a non-negative integer; throws if it is not one.
int multiplicity(const CharacterVector& a, const CharacterVector& b);

HomSpace hom_space(const Representation& rho, const Representation& tau);
int hom_dim(const Representation& rho, const Representation& tau);

bool isomorphic(const Representation& rho, const Representation& tau);
/// <chi, chi> == 1; with cross_check the intertwiner dimension must agree.
bool is_irreducible(const Representation& rho, bool cross_check = false);

}  // namespace symcrit

#endif  // SYMCRIT_REPS_HPP
