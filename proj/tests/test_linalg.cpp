#include <doctest.h>

#include "support.hpp"
#include "symcrit/errors.hpp"

using namespace symcrit;
using testing::Gen;
using testing::mat2;

namespace {

// Cofactor expansion along the first row.
BigRational det_by_cofactors(const RationalMatrix& a) {
    const Eigen::Index n = a.rows();
    if (n == 1) return a(0, 0);
    BigRational out(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        RationalMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        const BigRational term = a(0, j) * det_by_cofactors(minor);
        out += (j % 2 == 0) ? term : -term;
    }
    return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("mat_mul examples") {
    Gen gen(201);
    const RationalMatrix b = gen.rational_matrix(2, 3);
    CHECK(equal(mat_mul(identity<BigRational>(2), b), b));
    const CycNum a = root_of_unity(5, 1), bb = sqrt2(), c = CycNum(3), d = root_of_unity(3, 2);
    CHECK(equal(mat_mul(diag<CycNum>({a, bb}), diag<CycNum>({c, d})), diag<CycNum>({a * c, bb * d})));
    const ExactMatrix j = mat2(0, 1, -1, 0);
    CHECK(equal(mat_mul(j, j), ExactMatrix(scale(identity<CycNum>(2), CycNum(-1)))));
    CHECK_THROWS_AS(mat_mul(identity<BigRational>(2), identity<BigRational>(3)), DimensionMismatch);
}

TEST_CASE("kron examples") {
    CHECK(equal(kron(identity<CycNum>(2), identity<CycNum>(2)), identity<CycNum>(4)));
    const CycNum a = root_of_unity(4, 1), b = CycNum(2), c = sqrt5(), d = CycNum(-1);
    CHECK(equal(kron(diag<CycNum>({a, b}), diag<CycNum>({c, d})), diag<CycNum>({a * c, a * d, b * c, b * d})));
    const ExactMatrix swap = kron(ExactMatrix(mat2(0, 1, 1, 0)), identity<CycNum>(2));
    // Direct product oracle: the square of this permutation is computed entrywise.
    ExactMatrix sq = ExactMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) sq(i, j) += swap(i, k) * swap(k, j);
    CHECK(equal(sq, identity<CycNum>(4)));
    CHECK(equal(mat_mul(swap, swap), identity<CycNum>(4)));
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(identity<BigRational>(3)).empty());
    CHECK(nullspace(RationalMatrix(RationalMatrix::Zero(2, 2))).size() == 2);
    RationalMatrix ones(2, 2);
    ones << 1, 1, 1, 1;
    const auto ns = nullspace(ones);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0](0, 0) == BigRational(1));
    CHECK(ns[0](1, 0) == BigRational(-1));
}

TEST_CASE("det examples") {
    for (int n = 0; n <= 6; ++n) CHECK(det(identity<CycNum>(n)) == CycNum(1));
    const CycNum a = root_of_unity(7, 2), b = sqrt2(), c = CycNum(BigRational(1, 3)), d = root_of_unity(4, 1);
    CHECK(det(mat2(a, b, c, d)) == a * d - b * c);
    CHECK_THROWS_AS(det(RationalMatrix(RationalMatrix::Zero(2, 3))), DimensionMismatch);
}

TEST_CASE("det agrees with cofactor expansion") {
    Gen gen(202);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            RationalMatrix a = gen.rational_matrix(n, n, 4);
            if (trial == 3 && n > 1) a.row(n - 1) = a.row(0) * BigRational(2, 3);
            CHECK(det(a) == det_by_cofactors(a));
        }
}

TEST_CASE("direct_sum examples") {
    CHECK(equal(direct_sum<CycNum>({identity<CycNum>(1), identity<CycNum>(2)}), identity<CycNum>(3)));
    const CycNum a = root_of_unity(3, 1), b = CycNum(5), c = sqrt5();
    CHECK(equal(direct_sum<CycNum>({diag<CycNum>({a}), diag<CycNum>({b, c})}), diag<CycNum>({a, b, c})));
    const ExactMatrix x = mat2(1, 2, 3, 4), y = mat2(a, b, c, a);
    const ExactMatrix s = direct_sum<CycNum>({x, y});
    CHECK(s.rows() == 4);
    CHECK(equal(ExactMatrix(s.topLeftCorner(2, 2)), x));
    CHECK(equal(ExactMatrix(s.bottomRightCorner(2, 2)), y));
    CHECK(is_zero_matrix(ExactMatrix(s.topRightCorner(2, 2))));
    CHECK(is_zero_matrix(ExactMatrix(s.bottomLeftCorner(2, 2))));
}

TEST_CASE("inverse and singular input") {
    RationalMatrix s(2, 2);
    s << 1, 2, 2, 4;
    CHECK_THROWS_AS(inverse(s), NotInvertible);
    const ExactMatrix g = mat2(root_of_unity(5, 1), 1, sqrt5(), 2);
    CHECK(equal(mat_mul(g, inverse(g)), identity<CycNum>(2)));
}

TEST_CASE("vec and unvec are inverse and satisfy the Kronecker identity") {
    Gen gen(203);
    const RationalMatrix a = gen.rational_matrix(2, 3), x = gen.rational_matrix(3, 4), b = gen.rational_matrix(4, 2);
    CHECK(equal(unvec(vec(x), 3, 4), x));
    CHECK(equal(vec(RationalMatrix(mat_mul(mat_mul(a, x), b))), RationalMatrix(mat_mul(kron(transpose(b), a), vec(x)))));
}

TEST_CASE("associativity, inverse contract, mixed product, rank-nullity, det multiplicativity") {
    Gen gen(204);
    for (int trial = 0; trial < 25; ++trial) {
        const Eigen::Index n = gen.integer(1, 5);
        const RationalMatrix a = gen.invertible_matrix(n), b = gen.rational_matrix(n, n), c = gen.rational_matrix(n, n);
        CHECK(equal(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))));
        CHECK(equal(mat_mul(a, inverse(a)), identity<BigRational>(n)));
        CHECK(equal(mat_mul(inverse(a), a), identity<BigRational>(n)));
        CHECK(det(mat_mul(a, b)) == det(a) * det(b));

        const RationalMatrix d = gen.rational_matrix(2, 3), e = gen.rational_matrix(3, 2);
        const RationalMatrix f = gen.rational_matrix(2, 2), g = gen.rational_matrix(2, 3);
        CHECK(equal(mat_mul(kron(d, f), kron(e, g)), kron(mat_mul(d, e), mat_mul(f, g))));

        RationalMatrix m = gen.rational_matrix(gen.integer(1, 5), gen.integer(1, 6), 2);
        if (m.rows() > 1 && gen.integer(0, 1)) m.row(0) = m.row(1) * BigRational(-3);
        const auto ns = nullspace(m);
        CHECK(rank(m) + static_cast<Eigen::Index>(ns.size()) == m.cols());
        for (const auto& v : ns) CHECK(is_zero_matrix(RationalMatrix(mat_mul(m, v))));
    }
}

TEST_CASE("exact matrices over cyclotomic fields") {
    Gen gen(205);
    for (int trial = 0; trial < 10; ++trial) {
        const ExactMatrix a = gen.cyc_matrix(3, 3, 12), b = gen.cyc_matrix(3, 3, 5);
        CHECK(det(mat_mul(a, b)) == det(a) * det(b));
        if (!det(a).is_zero()) CHECK(equal(mat_mul(a, inverse(a)), identity<CycNum>(3)));
        CHECK(equal(galois_map(ExactMatrix(mat_mul(a, b)), 7), mat_mul(galois_map(a, 7), galois_map(b, 7))));
    }
}

TEST_CASE("conductor helpers") {
    const ExactMatrix a = mat2(root_of_unity(4, 1), 1, root_of_unity(6, 1), 0);
    CHECK(common_conductor(a) == 12);
    const ExactMatrix u = unify_conductor(a);
    for (Eigen::Index j = 0; j < 2; ++j)
        for (Eigen::Index i = 0; i < 2; ++i) CHECK(u(i, j).conductor() == 12);
    CHECK(equal(u, a));
    CHECK(equal(lift(a, 24), a));
    CHECK(equal(to_exact(testing::qmat2(1, BigRational(1, 2), 0, -3)), mat2(1, CycNum(BigRational(1, 2)), 0, -3)));
}

}  // TEST_SUITE
