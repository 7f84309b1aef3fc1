#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "symcrit/criteria.hpp"
#include "symcrit/errors.hpp"

using namespace symcrit;
using testing::Gen;
using testing::mat2;

namespace {

Representation defining(const testing::Family& f) { return Representation::defining(f.group); }

int count_true(const std::vector<bool>& v) {
    int n = 0;
    for (bool b : v) n += b ? 1 : 0;
    return n;
}

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("classify reproduces the classification list") {
    for (const auto& f : testing::polyhedral_families(2, 8)) {
        CAPTURE(f.label);
        const ClassificationReport r = classify(defining(f), 8);
        REQUIRE(r.M.has_value());
        CHECK(*r.M == f.expected_m);
        CHECK(r.polyhedral_type == f.type);
        CHECK(r.group_order == f.expected_order);
        CHECK(r.consistent);
        CHECK(r.reducible.size() == 7);
        CHECK_FALSE(r.witnesses.empty());
    }
}

TEST_CASE("reducibility vectors follow from the oracle norms") {
    // Irreducible exactly when the frozen norm is 1 (see test_reps.cpp).
    const std::vector<bool> tet{false, true, true, true, true, true, true};
    const std::vector<bool> oct{false, false, true, true, true, true, true};
    const std::vector<bool> ico{false, false, false, false, true, true, true};
    CHECK(classify(Representation::defining(binary_tetrahedral())).reducible == tet);
    CHECK(classify(Representation::defining(binary_octahedral())).reducible == oct);
    CHECK(classify(Representation::defining(binary_icosahedral())).reducible == ico);
}

TEST_CASE("classify with n_max = 12 keeps M and extends the vector") {
    for (const auto& f : testing::polyhedral_families(3, 3)) {
        const ClassificationReport r = classify(defining(f), 12);
        CHECK(r.M == f.expected_m);
        CHECK(r.reducible.size() == 11);
        CHECK(count_true(r.reducible) == 11 - (f.expected_m - 1));
    }
    CHECK_THROWS_AS(classify(Representation::defining(binary_tetrahedral()), 7), PreconditionFailed);
    CHECK_THROWS_AS(classify(Representation::defining(binary_tetrahedral()), 13), PreconditionFailed);
}

TEST_CASE("classify rejects reducible input") {
    const GroupPtr t = binary_tetrahedral();
    CHECK_THROWS_AS(classify(direct_sum(Representation::trivial(t), Representation::trivial(t))), ReducibleInput);
}

TEST_CASE("classify is twist invariant and Galois equivariant") {
    for (const auto& f : testing::polyhedral_families(3, 4)) {
        const Representation s = defining(f);
        const ClassificationReport base = classify(s);
        for (const auto& lambda : linear_characters(f.group)) {
            const ClassificationReport t = classify(twist(s, lambda));
            CHECK(t.M == base.M);
            CHECK(t.polyhedral_type == base.polyhedral_type);
        }
        const int n = s.conductor();
        for (long k = 1; k < n; ++k) {
            if (std::gcd(k, static_cast<long>(n)) != 1) continue;
            const ClassificationReport g = classify(galois_conjugate(s, k));
            CHECK(g.M == base.M);
            CHECK(g.polyhedral_type == base.polyhedral_type);
        }
    }
}

TEST_CASE("verify_sym2: the three conditions agree with the projective type") {
    for (const auto& f : testing::polyhedral_families(2, 8)) {
        CAPTURE(f.label);
        const Sym2Report r = verify_sym2(defining(f));
        const bool dihedral = f.type == PolyhedralType::dihedral;
        CHECK(r.dihedral == dihedral);
        CHECK(r.sym2_reducible == dihedral);
        CHECK(r.induced == dihedral);
        CHECK(r.self_twist == dihedral);
        CHECK(r.consistent);
        CHECK(r.characters_tested == static_cast<int>(linear_characters(f.group).size()));
        if (dihedral) {
            REQUIRE(r.chi.has_value());
            REQUIRE(r.h.has_value());
            REQUIRE(r.mu.has_value());
            REQUIRE(r.decomposition.has_value());
            CHECK(r.chi->character.order() == 2);
            CHECK(r.h->index() == 2);
            CHECK(r.h->members == kernel_subgroup(r.chi->character).members);
            CHECK(r.sigma_is_induced);
            CHECK(r.decomposition->holds());
            CHECK(r.decomposition->summand_degrees == std::vector<int>{1, 2});
            // Independent check of Sym^2 = omega chi + Ind mu^2 through characters.
            const Representation s = defining(f);
            const CharacterVector rhs = character(det_character(s) * r.chi->character) +
                                        character(induce_index2(r.mu->character.pow(2), *r.h));
            CHECK(rhs == character(sym_power(s, 2)));
        } else {
            CHECK(r.self_twists.empty());
            CHECK_FALSE(r.decomposition.has_value());
        }
    }
    CHECK(verify_sym2(Representation::defining(binary_tetrahedral())).characters_tested == 3);
    CHECK(verify_sym2(Representation::defining(binary_icosahedral())).characters_tested == 1);
}

TEST_CASE("verify_sym3") {
    const Representation t = Representation::defining(binary_tetrahedral());
    const Sym3Report r = verify_sym3(t);
    CHECK(r.found);
    CHECK(r.all_cubic);
    CHECK(r.sym3_reducible);
    CHECK(r.consistent);
    CHECK(r.mus.size() == 2);
    CHECK(r.same_unordered);
    for (const auto& d : r.decompositions) {
        CHECK(d.holds());
        CHECK(d.summand_degrees == std::vector<int>{2, 2});
    }
    const LinearCharacter mu = r.mus.front().character;
    CHECK(mu.order() == 3);
    CHECK(character(sym_power(t, 2)) == character(sym_power(t, 2)) * mu);
    const CharacterVector a3 = character(a_power(t, 3));
    CHECK(a3 == character(twist(t, mu)) + character(twist(t, mu.pow(2))));

    for (const GroupPtr& g : {binary_octahedral(), binary_icosahedral()}) {
        const Sym3Report n = verify_sym3(Representation::defining(g));
        CHECK_FALSE(n.found);
        CHECK_FALSE(n.sym3_reducible);
        CHECK(n.consistent);
    }
    CHECK_THROWS_AS(verify_sym3(Representation::defining(binary_dihedral(3))), PreconditionFailed);
}

TEST_CASE("verify_sym4") {
    const Representation o = Representation::defining(binary_octahedral());
    const Sym4Report r = verify_sym4(o);
    CHECK(r.found);
    CHECK(r.chi_unique);
    CHECK(r.sym4_reducible);
    REQUIRE(r.h.has_value());
    CHECK(r.h->order() == 24);
    CHECK(r.restriction_type == PolyhedralType::tetrahedral);
    CHECK(r.restriction_irreducible);
    CHECK_FALSE(r.restriction_dihedral);
    REQUIRE(r.decomposition.has_value());
    CHECK(r.decomposition->holds());
    CHECK(r.decomposition->summand_degrees == std::vector<int>{2, 3});
    CHECK(r.consistent);
    const LinearCharacter chi = r.chis.front().character;
    CHECK(chi.order() == 2);
    CHECK(character(sym_power(o, 3)) == character(sym_power(o, 3)) * chi);

    const Sym4Report i = verify_sym4(Representation::defining(binary_icosahedral()));
    CHECK_FALSE(i.found);
    CHECK_FALSE(i.sym4_reducible);
    CHECK(i.consistent);
    CHECK_THROWS_AS(verify_sym4(Representation::defining(binary_tetrahedral())), PreconditionFailed);
}

TEST_CASE("verify_sym2/3/4 positive exactly on dihedral/tetrahedral/octahedral") {
    for (const auto& f : testing::polyhedral_families(2, 5)) {
        const Representation s = defining(f);
        CHECK(verify_sym2(s).dihedral == (f.type == PolyhedralType::dihedral));
        if (f.type == PolyhedralType::dihedral) continue;
        const Sym3Report r3 = verify_sym3(s);
        CHECK(r3.found == (f.type == PolyhedralType::tetrahedral));
        if (f.type == PolyhedralType::tetrahedral) continue;
        CHECK(verify_sym4(s).found == (f.type == PolyhedralType::octahedral));
    }
}

TEST_CASE("verify_sym6 on the icosahedral group") {
    const GroupPtr ico = binary_icosahedral();
    const Representation s = Representation::defining(ico);
    const Sym6Report r = verify_sym6(s);
    REQUIRE(r.applicable);
    CHECK(r.consistent);
    CHECK(r.matches == 1);
    REQUIRE(r.sigma_prime.has_value());
    CHECK(r.sigma_prime_irreducible);
    CHECK(galois_map(sqrt5(), r.galois_k) == -sqrt5());
    REQUIRE(r.chi.has_value());
    CHECK(r.chi->character.is_trivial());
    REQUIRE(r.mu.has_value());
    CHECK(r.mu->is_trivial());
    REQUIRE(r.etas.size() == 1);
    CHECK(r.etas.front().character.is_trivial());
    CHECK(r.sym3_relation);
    CHECK(r.sym3_equal);
    CHECK(r.not_a_twist);
    REQUIRE(r.sym6.has_value());
    CHECK(r.sym6->holds());
    CHECK(r.sym6->summand_degrees == std::vector<int>{4, 3});
    CHECK(r.sym6->summand_irreducible == std::vector<bool>{true, true});
    REQUIRE(r.sym5_ad_sigma.has_value());
    REQUIRE(r.sym5_ad_sigma_prime.has_value());
    CHECK(r.sym5_ad_sigma->holds());
    CHECK(r.sym5_ad_sigma_prime->holds());

    // Independent recomputation from the reported sigma'.
    const Representation& sp = *r.sigma_prime;
    CHECK(character(sym_power(s, 5)) == character(tensor(adjoint(s), sp)));
    CHECK(character(sym_power(s, 5)) == character(tensor(adjoint(sp), s)));
    CHECK(character(sym_power(s, 3)) == character(sym_power(sp, 3)));
    CHECK(character(sym_power(s, 6)) == character(tensor(s, sp)) + character(adjoint(sp)));
    CHECK(is_irreducible(tensor(s, sp)));
    CHECK(is_irreducible(adjoint(sp)));
    CHECK_FALSE(isomorphic(sp, s));
}

TEST_CASE("verify_sym6 is not applicable below the icosahedral case") {
    for (const GroupPtr& g : {binary_octahedral(), binary_tetrahedral(), binary_dihedral(5)}) {
        const Sym6Report r = verify_sym6(Representation::defining(g));
        CHECK_FALSE(r.applicable);
        CHECK_FALSE(r.reason.empty());
    }
}

TEST_CASE("verify_higher") {
    const HigherReport ico = verify_higher(Representation::defining(binary_icosahedral()), 10);
    CHECK(ico.sym6_reducible);
    CHECK(ico.reducible == std::vector<bool>{true, true, true, true});
    CHECK(ico.consistent);
    const HigherReport oct = verify_higher(Representation::defining(binary_octahedral()), 8);
    CHECK(oct.consistent);
    for (int n = 2; n <= 6; ++n) {
        const HigherReport d = verify_higher(Representation::defining(binary_dihedral(n)), 8);
        CHECK(d.reducible == std::vector<bool>{true, true});
        CHECK(d.consistent);
    }
    CHECK_THROWS_AS(verify_higher(Representation::defining(binary_octahedral()), 6), PreconditionFailed);
    CHECK_THROWS_AS(verify_higher(Representation::defining(binary_octahedral()), 13), PreconditionFailed);
}

TEST_CASE("monotonicity") {
    for (const auto& f : testing::polyhedral_families(2, 8)) {
        CAPTURE(f.label);
        const MonotonicityReport r = monotonicity_check(defining(f), 8);
        CHECK(r.passed);
        CHECK(r.upward_closed);
        CHECK(r.m_allowed);
        CHECK(r.sym45_agree);
        REQUIRE(r.first_reducible.has_value());
        CHECK(*r.first_reducible == f.expected_m + 1);
    }
    const MonotonicityReport ico = monotonicity_check(Representation::defining(binary_icosahedral()), 8);
    CHECK(ico.reducible == std::vector<bool>{false, false, false, false, true, true, true});
}

TEST_CASE("certify_decomposition rejects wrong claims") {
    const Representation s = Representation::defining(binary_tetrahedral());
    const Decomposition bad = certify_decomposition(sym_power(s, 2), {s, Representation::trivial(s.group)});
    CHECK_FALSE(bad.character_equal);
    CHECK_FALSE(bad.holds());
    const Decomposition good = certify_decomposition(tensor(s, s), {sym_power(s, 2), Representation::trivial(s.group)});
    CHECK(good.holds());
    CHECK(good.hom_dims == std::vector<int>{1, 1});
    CHECK(good.str().find("Sym^2(sigma)") != std::string::npos);
}

TEST_CASE("Clebsch-Gordan block dimensions") {
    for (int m = 0; m <= 8; ++m)
        for (int i = 0; 2 * i <= m; ++i) {
            const auto dims = cg_block_dims(i, m);
            CHECK(dims.size() == static_cast<std::size_t>(i + 1));
            int sum = 0;
            for (int j = 0; j <= i; ++j) {
                CHECK(dims[static_cast<std::size_t>(j)] == m - 2 * j + 1);
                sum += dims[static_cast<std::size_t>(j)];
            }
            CHECK(sum == (i + 1) * (m - i + 1));
        }
}

TEST_CASE("Clebsch-Gordan intertwiners") {
    for (int m = 0; m <= 5; ++m) CHECK(equal(cg_intertwiner(0, m), identity<BigRational>(m + 1)));

    const RationalMatrix c12 = cg_intertwiner(1, 2, 5);
    CHECK(c12.rows() == 4);
    CHECK(det(c12) != BigRational(0));
    const RationalMatrix c24 = cg_intertwiner(2, 4, 5);
    CHECK(c24.rows() == 9);
    CHECK(det(c24) != BigRational(0));
    CHECK(cg_validates_random(c24, 2, 4, 99, 10));

    // sigma (x) sigma = Sym^2 + det on every in-scope group.
    for (const auto& f : testing::polyhedral_families(2, 4)) {
        CHECK(cg_validates(c12, 1, 2, *f.group));
        CHECK(cg_validates(c24, 2, 4, *f.group));
    }

    Gen gen(501);
    for (int trial = 0; trial < 5; ++trial) {
        const RationalMatrix g = gen.invertible_matrix(2, 6);
        CHECK(equal(RationalMatrix(mat_mul(mat_mul(c12, cg_source(g, 1, 2)), inverse(c12))), cg_target(g, 1, 2)));
    }
    RationalMatrix broken = c12;
    broken(0, 0) += BigRational(1);
    CHECK_FALSE(cg_validates_random(broken, 1, 2, 1, 10));
    CHECK_THROWS_AS(cg_intertwiner(3, 4), PreconditionFailed);
    CHECK_THROWS_AS(cg_intertwiner(1, 9), PreconditionFailed);
}

TEST_CASE("Clebsch-Gordan intertwiners validate on every element of every group") {
    const std::vector<GroupPtr> groups{binary_dihedral(3), binary_dihedral(4), binary_tetrahedral(),
                                       binary_octahedral(), binary_icosahedral()};
    for (int m = 1; m <= 4; ++m)
        for (int i = 1; 2 * i <= m; ++i) {
            const RationalMatrix c = cg_intertwiner(i, m, 11);
            for (const auto& g : groups) CHECK_MESSAGE(cg_validates(c, i, m, *g), g->name() << " i=" << i << " m=" << m);
        }
}

TEST_CASE("random sample streams are seeded") {
    const auto a = random_invertible_samples(3, 5), again = random_invertible_samples(3, 5);
    const auto b = random_invertible_samples(4, 5);
    bool same = true, differ = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        same = same && equal(a[k], again[k]);
        differ = differ || !equal(a[k], b[k]);
    }
    CHECK(same);
    CHECK(differ);
    for (const auto& x : random_invertible_samples(8, 50, true)) {
        CHECK(det(x) != BigRational(0));
        for (Eigen::Index i = 0; i < 4; ++i) {
            CHECK(x(i / 2, i % 2).is_integer());
            CHECK(x(i / 2, i % 2) >= BigRational(-3));
            CHECK(x(i / 2, i % 2) <= BigRational(3));
        }
    }
}

TEST_CASE("sym3_root examples") {
    const auto id = sym3_root(identity<BigRational>(4));
    CHECK(equal(id.projective_matrix, identity<BigRational>(2)));
    CHECK(id.cube_scalar == BigRational(1));

    const auto d = sym3_root(diag<BigRational>({BigRational(3), BigRational(6), BigRational(12), BigRational(24)}));
    CHECK(d.diagonal);
    CHECK(d.t1t4_eq_t2t3);
    CHECK(d.t1t3_eq_t2sq);
    CHECK(equal(d.projective_matrix, diag<BigRational>({BigRational(1), BigRational(2)})));
    CHECK(d.cube_scalar == BigRational(3));

    // Each diagonal condition is enforced on its own.
    CHECK_THROWS_AS(sym3_root(diag<BigRational>({BigRational(1), BigRational(2), BigRational(4), BigRational(9)})),
                    NotACube);
    CHECK_THROWS_AS(sym3_root(diag<BigRational>({BigRational(1), BigRational(2), BigRational(5), BigRational(10)})),
                    NotACube);

    RationalMatrix shear = identity<BigRational>(4);
    shear(0, 1) = BigRational(1);
    CHECK_THROWS_AS(sym3_root(shear), NotACube);
    CHECK_THROWS_AS(sym3_root(RationalMatrix(RationalMatrix::Zero(4, 4))), NotInvertible);
}

TEST_CASE("sym3_root round-trips random matrices") {
    Gen gen(502);
    for (int trial = 0; trial < 40; ++trial) {
        RationalMatrix g = gen.invertible_matrix(2, 7);
        if (trial % 5 == 0) g(0, 0) = BigRational(0);
        if (det(g).is_zero()) continue;
        const BigRational lambda = gen.nonzero_rational();
        const RationalMatrix s = sym_power_matrix(RationalMatrix(g * lambda), 3);
        const auto cert = sym3_root(s);
        CHECK(certificate_reproduces(cert, s));
        // v is g up to the scalar that makes its first nonzero entry 1.
        const BigRational lead = g(0, 0).is_zero() ? g(0, 1) : g(0, 0);
        CHECK(equal(cert.projective_matrix, RationalMatrix(g * lead.inverse())));
    }
}

TEST_CASE("sym3_root is insensitive to cube roots of unity") {
    Gen gen(503);
    const CycNum z3 = root_of_unity(3, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const ExactMatrix g = to_exact(gen.invertible_matrix(2, 5));
        const ExactMatrix s = sym_power_matrix(g, 3);
        const auto base = sym3_root(s);
        const auto rescaled = sym3_root(ExactMatrix(sym_power_matrix(scale(g, z3), 3)));
        CHECK(equal(rescaled.projective_matrix, base.projective_matrix));
        CHECK(rescaled.cube_scalar == base.cube_scalar);
    }
}

TEST_CASE("sym3_root succeeds on every element of every group") {
    for (const auto& f : testing::polyhedral_families(2, 5)) {
        for (const auto& x : f.group->elements()) {
            const ExactMatrix s = sym_power_matrix(x, 3);
            CHECK(certificate_reproduces(sym3_root(s), s));
        }
    }
}

}  // TEST_SUITE
