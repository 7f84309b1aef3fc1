#ifndef SYMCRIT_TESTS_SUPPORT_HPP
#define SYMCRIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symcrit/bigrational.hpp"
#include "symcrit/cyclotomic.hpp"
#include "symcrit/groups.hpp"
#include "symcrit/linalg.hpp"

namespace testing {

using namespace symcrit;

/// Seeded sample source for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    BigRational rational(long bound = 9) {
        return BigRational(integer(-bound, bound), integer(1, bound));
    }

    BigRational nonzero_rational(long bound = 9) {
        BigRational q;
        do q = rational(bound);
        while (q.is_zero());
        return q;
    }

    /// Random element of Q(zeta_n) with small rational coefficients.
    CycNum cyc(int n, int terms = 3) {
        CycNum out(0);
        for (int t = 0; t < terms; ++t) out += CycNum(rational()) * root_of_unity(n, integer(0, n - 1));
        return out;
    }

    CycNum nonzero_cyc(int n) {
        CycNum c;
        do c = cyc(n);
        while (c.is_zero());
        return c;
    }

    RationalMatrix rational_matrix(Eigen::Index rows, Eigen::Index cols, long bound = 5) {
        RationalMatrix m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = BigRational(integer(-bound, bound));
        return m;
    }

    RationalMatrix invertible_matrix(Eigen::Index n, long bound = 5) {
        RationalMatrix m;
        do m = rational_matrix(n, n, bound);
        while (det(m).is_zero());
        return m;
    }

    ExactMatrix cyc_matrix(Eigen::Index rows, Eigen::Index cols, int conductor) {
        ExactMatrix m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cyc(conductor, 2);
        return m;
    }

    std::size_t index(std::size_t size) { return static_cast<std::size_t>(integer(0, static_cast<long>(size) - 1)); }

private:
    std::mt19937_64 rng_;
};

struct Family {
    std::string label;
    GroupPtr group;
    int expected_order;
    PolyhedralType type;
    int expected_m;
};

inline std::vector<Family> polyhedral_families(int dihedral_lo = 2, int dihedral_hi = 6) {
    std::vector<Family> out;
    for (int n = dihedral_lo; n <= dihedral_hi; ++n)
        out.push_back({"2D" + std::to_string(n), binary_dihedral(n), 4 * n, PolyhedralType::dihedral, 1});
    out.push_back({"2T", binary_tetrahedral(), 24, PolyhedralType::tetrahedral, 2});
    out.push_back({"2O", binary_octahedral(), 48, PolyhedralType::octahedral, 3});
    out.push_back({"2I", binary_icosahedral(), 120, PolyhedralType::icosahedral, 5});
    return out;
}

inline ExactMatrix mat2(CycNum a, CycNum b, CycNum c, CycNum d) {
    ExactMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline RationalMatrix qmat2(BigRational a, BigRational b, BigRational c, BigRational d) {
    RationalMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace testing

#endif  // SYMCRIT_TESTS_SUPPORT_HPP
