#ifndef SYMCRIT_CRITERIA_HPP
#define SYMCRIT_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcrit/groups.hpp"
#include "symcrit/linalg.hpp"
#include "symcrit/reps.hpp"

namespace symcrit {

inline constexpr int kDefaultNMax = 8;
inline constexpr int kMaxNMax = 12;

/// A claimed isomorphism lhs = summand_1 + ... + summand_r, certified by
/// character equality plus a nonzero intertwiner from each summand into lhs.
/// Isomorphism here means isomorphism as representations of the finite group.
struct Decomposition {
    std::string lhs;
    int lhs_degree = 0;
    std::vector<std::string> summands;
    std::vector<int> summand_degrees;
    std::vector<bool> summand_irreducible;
    std::vector<int> hom_dims;  ///< hom_dim(summand, lhs)
    bool character_equal = false;

    bool holds() const;
    std::string str() const;
};

Decomposition certify_decomposition(const Representation& lhs, const std::vector<Representation>& summands);

/// A linear character together with its position in linear_characters().
struct IndexedCharacter {
    int index = 0;
    LinearCharacter character;

    std::string describe() const;
};

struct Witness {
    std::string name;
    std::string detail;
};

struct ClassificationReport {
    std::string input;
    int group_order = 0;
    int n_max = kDefaultNMax;
    std::optional<int> M;  ///< nullopt: every Sym^n with n <= n_max is irreducible
    PolyhedralType polyhedral_type = PolyhedralType::cyclic;
    int projective_order = 1;
    std::vector<bool> reducible;  ///< reducible[n - 2] for 2 <= n <= n_max
    std::vector<Witness> witnesses;
    bool consistent = false;  ///< M agrees with the projective type

    bool reducible_at(int n) const { return reducible[static_cast<std::size_t>(n - 2)]; }
};

struct Sym2Report {
    bool sym2_reducible = false;  ///< condition (i)
    bool induced = false;         ///< condition (ii): sigma = Ind_H mu for some index-2 H
    bool self_twist = false;      ///< condition (iii): sigma = sigma (x) chi, chi nontrivial
    bool dihedral = false;
    int characters_tested = 0;
    std::vector<IndexedCharacter> self_twists;
    std::optional<IndexedCharacter> chi;
    std::optional<Subgroup> h;
    std::optional<IndexedCharacter> mu;  ///< character of h->group
    bool sigma_is_induced = false;       ///< character(sigma) == character(Ind mu)
    std::optional<Decomposition> decomposition;
    PolyhedralType projective_type = PolyhedralType::cyclic;
    bool consistent = false;
};

struct Sym3Report {
    std::vector<IndexedCharacter> mus;  ///< every nontrivial mu with Sym^2 = Sym^2 (x) mu
    bool all_cubic = true;
    bool found = false;
    bool sym3_reducible = false;
    std::vector<Decomposition> decompositions;  ///< A^3 = sigma mu + sigma mu^2, one per mu
    bool same_unordered = true;  ///< every mu yields the same pair of constituents
    PolyhedralType projective_type = PolyhedralType::cyclic;
    bool consistent = false;
};

struct Sym4Report {
    std::vector<IndexedCharacter> chis;  ///< every nontrivial chi with Sym^3 = Sym^3 (x) chi
    bool found = false;
    bool chi_unique = false;
    bool sym4_reducible = false;
    std::optional<Subgroup> h;
    PolyhedralType restriction_type = PolyhedralType::cyclic;
    bool restriction_irreducible = false;
    bool restriction_dihedral = false;
    std::vector<IndexedCharacter> mus;  ///< cubic characters of H for which the decomposition holds
    std::optional<Decomposition> decomposition;
    PolyhedralType projective_type = PolyhedralType::cyclic;
    bool consistent = false;
};

struct Sym6Report {
    bool applicable = false;
    std::string reason;
    int pool_size = 0;  ///< candidates up to isomorphism
    int matches = 0;    ///< candidates with Sym^5 = Ad(sigma) (x) candidate
    std::optional<Representation> sigma_prime;
    long galois_k = 1;
    int twist_index = 0;
    bool sigma_prime_irreducible = false;
    std::optional<IndexedCharacter> chi;
    int chi_matches = 0;
    std::optional<LinearCharacter> mu;  ///< omega_{sigma'} omega_sigma^-1 chi
    std::vector<IndexedCharacter> etas;  ///< eta with eta^2 = 1 and mu = (eta omega^2)^3
    std::optional<Decomposition> sym5_ad_sigma;        ///< Sym^5 = Ad(sigma) (x) sigma'
    std::optional<Decomposition> sym5_ad_sigma_prime;  ///< Sym^5 = Ad(sigma') (x) sigma (x) chi
    std::optional<Decomposition> sym6;                 ///< Sym^6 = sigma sigma' + Ad(sigma') chi omega
    bool sym3_relation = false;  ///< Sym^3(sigma') = Sym^3(sigma) (x) mu
    bool sym3_equal = false;     ///< Sym^3(sigma') = Sym^3(sigma)
    bool not_a_twist = false;    ///< sigma' is not sigma (x) lambda for any lambda
    bool consistent = false;
};

struct HigherReport {
    int n_hi = 7;
    bool sym6_reducible = false;
    std::vector<bool> reducible;  ///< reducible[n - 7] for 7 <= n <= n_hi
    bool consistent = false;
};

struct MonotonicityReport {
    int n_max = kDefaultNMax;
    std::vector<bool> reducible;  ///< reducible[n - 2]
    std::optional<int> first_reducible;
    std::optional<int> M;
    bool upward_closed = false;
    bool m_allowed = false;  ///< M is nullopt or in {1, 2, 3, 5}
    bool sym45_agree = false;
    bool passed = false;
};

/// Throws ReducibleInput when sigma is reducible and PreconditionFailed when
/// sigma is not 2-dimensional or n_max lies outside [8, 12].
ClassificationReport classify(const Representation& sigma, int n_max = kDefaultNMax);
Sym2Report verify_sym2(const Representation& sigma);
/// Throws PreconditionFailed for dihedral sigma.
Sym3Report verify_sym3(const Representation& sigma);
/// Throws PreconditionFailed when Sym^3(sigma) is reducible.
Sym4Report verify_sym4(const Representation& sigma);
/// Reports not-applicable unless Sym^4 is irreducible and Sym^6 reducible;
/// throws PoolExhausted when no companion is found.
Sym6Report verify_sym6(const Representation& sigma);
/// Throws PreconditionFailed unless 7 <= n_hi <= 12.
HigherReport verify_higher(const Representation& sigma, int n_hi);
MonotonicityReport monotonicity_check(const Representation& sigma, int n_max = kDefaultNMax);

/// The direct sum of det(g)^j Sym^(m-2j)(g), j = 0..i.
template <typename T>
Mat<T> cg_target(const Mat<T>& g, int i, int m) {
    const T d = det(g);
    std::vector<Mat<T>> blocks;
    T dj(1);
    for (int j = 0; j <= i; ++j) {
        Mat<T> b = sym_power_matrix(g, m - 2 * j);
        for (Eigen::Index c = 0; c < b.cols(); ++c)
            for (Eigen::Index r = 0; r < b.rows(); ++r)
                if (!is_zero(b(r, c))) b(r, c) *= dj;
        blocks.push_back(std::move(b));
        dj *= d;
    }
    return direct_sum<T>(std::span<const Mat<T>>(blocks));
}

template <typename T>
Mat<T> cg_source(const Mat<T>& g, int i, int m) {
    return kron(sym_power_matrix(g, i), sym_power_matrix(g, m - i));
}

/// `count` seeded random invertible 2x2 matrices; entries are integers in
/// [-3, 3] when `integral`, otherwise fractions p/q with |p| <= 9, 1 <= q <= 9.
std::vector<RationalMatrix> random_invertible_samples(std::uint64_t seed, int count, bool integral = false);

/// Block sizes m-2j+1, j = 0..i.
std::vector<int> cg_block_dims(int i, int m);

/// Rational C with C (Sym^i(g) (x) Sym^(m-i)(g)) C^-1 = cg_target(g, i, m) for
/// every invertible g. Solved per block on three seeded integer samples and
/// validated on ten fresh rational samples; throws ConstructionFailure when
/// every retry fails. Requires 0 <= i <= m/2 and m <= 8.
RationalMatrix cg_intertwiner(int i, int m, std::uint64_t seed = 0);

/// Checks C source(g) == target(g) C for every element of `g` (C is
/// invertible, so this is the conjugation identity).
bool cg_validates(const RationalMatrix& c, int i, int m, const MatrixGroup& g);
/// Same check on `samples` seeded random invertible rational matrices.
bool cg_validates_random(const RationalMatrix& c, int i, int m, std::uint64_t seed, int samples);

/// S = cube_scalar * Sym^3(projective_matrix), projective_matrix normalized so
/// its first nonzero entry (row-major) is 1.
template <typename T>
struct Sym3RootCertificate {
    Mat<T> projective_matrix;
    T cube_scalar;
    bool diagonal = false;
    bool t1t4_eq_t2t3 = false;  ///< only set on the diagonal branch
    bool t1t3_eq_t2sq = false;  ///< only set on the diagonal branch
};

template <typename T>
bool certificate_reproduces(const Sym3RootCertificate<T>& cert, const Mat<T>& s) {
    const Mat<T> cube = sym_power_matrix(cert.projective_matrix, 3);
    for (Eigen::Index j = 0; j < 4; ++j)
        for (Eigen::Index i = 0; i < 4; ++i)
            if (!(cert.cube_scalar * cube(i, j) == s(i, j))) return false;
    return true;
}

/// Recovers S = lambda^3 Sym^3(v). Throws NotInvertible for singular S and
/// NotACube when no such v exists.
template <typename T>
Sym3RootCertificate<T> sym3_root(const Mat<T>& s) {
    if (s.rows() != 4 || s.cols() != 4) throw DimensionMismatch("sym3_root needs a 4x4 matrix");
    if (is_zero(det(s))) throw NotInvertible("sym3_root: input is singular");
    Sym3RootCertificate<T> cert;
    cert.projective_matrix = Mat<T>::Zero(2, 2);
    Mat<T>& v = cert.projective_matrix;

    bool diagonal = true;
    for (Eigen::Index j = 0; j < 4; ++j)
        for (Eigen::Index i = 0; i < 4; ++i)
            if (i != j && !is_zero(s(i, j))) diagonal = false;

    if (diagonal) {
        const T &t1 = s(0, 0), &t2 = s(1, 1), &t3 = s(2, 2), &t4 = s(3, 3);
        cert.diagonal = true;
        cert.t1t4_eq_t2t3 = t1 * t4 == t2 * t3;
        cert.t1t3_eq_t2sq = t1 * t3 == t2 * t2;
        if (!cert.t1t4_eq_t2t3 || !cert.t1t3_eq_t2sq) throw NotACube();
        v(0, 0) = T(1);
        v(1, 1) = t2 / t1;
        cert.cube_scalar = t1;
    } else if (!is_zero(s(0, 0))) {
        // a = 1: column 0 is lambda^3 (1, 3c, 3c^2, c^3), S01 = lambda^3 b,
        // S11 = lambda^3 (2bc + d).
        const T lam3 = s(0, 0);
        const T c = s(1, 0) / (T(3) * lam3);
        const T b = s(0, 1) / lam3;
        v(0, 0) = T(1);
        v(0, 1) = b;
        v(1, 0) = c;
        v(1, 1) = s(1, 1) / lam3 - T(2) * b * c;
        cert.cube_scalar = lam3;
    } else {
        // a = 0, b = 1: column 3 is lambda^3 (1, 3d, 3d^2, d^3), S12 = lambda^3 c.
        const T lam3 = s(0, 3);
        if (is_zero(lam3)) throw NotACube();
        v(0, 1) = T(1);
        v(1, 0) = s(1, 2) / lam3;
        v(1, 1) = s(1, 3) / (T(3) * lam3);
        cert.cube_scalar = lam3;
    }
    if (!certificate_reproduces(cert, s)) throw NotACube();
    return cert;
}

}  // namespace symcrit

#endif  // SYMCRIT_CRITERIA_HPP
