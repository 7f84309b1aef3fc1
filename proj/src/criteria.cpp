#include "symcrit/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace symcrit {

namespace {

bool irreducible(const Representation& rho) { return is_irreducible(rho); }

PolyhedralType image_type(const Representation& rho) { return projective_image(*image_group(rho)).type; }

void require_two_dim_irreducible(const Representation& sigma, const char* what) {
    if (sigma.degree != 2) throw PreconditionFailed(std::string(what) + ": sigma must be 2-dimensional");
    if (!irreducible(sigma)) throw ReducibleInput();
}

std::vector<IndexedCharacter> indexed(const std::vector<LinearCharacter>& chars) {
    std::vector<IndexedCharacter> out;
    for (std::size_t i = 0; i < chars.size(); ++i) out.push_back({static_cast<int>(i), chars[i]});
    return out;
}

std::optional<int> expected_m(PolyhedralType t) {
    switch (t) {
        case PolyhedralType::dihedral: return 1;
        case PolyhedralType::tetrahedral: return 2;
        case PolyhedralType::octahedral: return 3;
        case PolyhedralType::icosahedral: return 5;
        case PolyhedralType::cyclic: break;
    }
    return std::nullopt;
}

std::vector<bool> reducibility(const Representation& sigma, int lo, int hi) {
    std::vector<bool> out;
    for (int n = lo; n <= hi; ++n) out.push_back(!irreducible(sym_power(sigma, n)));
    return out;
}

Representation renamed(Representation rho, std::string name) {
    rho.name = std::move(name);
    return rho;
}

BigRational random_rational(std::mt19937_64& rng, bool integral) {
    std::uniform_int_distribution<long> num(integral ? -3 : -9, integral ? 3 : 9);
    std::uniform_int_distribution<long> den(1, 9);
    return integral ? BigRational(num(rng)) : BigRational(num(rng), den(rng));
}

RationalMatrix random_invertible(std::mt19937_64& rng, bool integral) {
    while (true) {
        RationalMatrix g(2, 2);
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index i = 0; i < 2; ++i) g(i, j) = random_rational(rng, integral);
        if (!det(g).is_zero()) return g;
    }
}

template <typename T>
bool cg_holds(const Mat<T>& c, const Mat<T>& g, int i, int m) {
    return equal(mat_mul(c, cg_source(g, i, m)), mat_mul(cg_target(g, i, m), c));
}

}  // namespace

// ---------------------------------------------------------------------------
// Decompositions

bool Decomposition::holds() const {
    return character_equal && std::all_of(hom_dims.begin(), hom_dims.end(), [](int d) { return d >= 1; });
}

std::string Decomposition::str() const {
    std::ostringstream os;
    os << lhs << " = ";
    for (std::size_t i = 0; i < summands.size(); ++i) os << (i ? " (+) " : "") << summands[i];
    os << "  [dims ";
    for (std::size_t i = 0; i < summand_degrees.size(); ++i) os << (i ? "+" : "") << summand_degrees[i];
    os << "; characters " << (character_equal ? "equal" : "differ") << "; hom dims";
    for (int d : hom_dims) os << " " << d;
    os << "]";
    return os.str();
}

Decomposition certify_decomposition(const Representation& lhs, const std::vector<Representation>& summands) {
    Decomposition d;
    d.lhs = lhs.name;
    d.lhs_degree = static_cast<int>(lhs.degree);
    const CharacterVector target = character(lhs);
    std::optional<CharacterVector> sum;
    for (const auto& s : summands) {
        d.summands.push_back(s.name);
        d.summand_degrees.push_back(static_cast<int>(s.degree));
        d.summand_irreducible.push_back(irreducible(s));
        d.hom_dims.push_back(hom_dim(s, lhs));
        const CharacterVector cs = character(s);
        sum = sum ? *sum + cs : cs;
    }
    d.character_equal = sum && *sum == target;
    return d;
}

std::string IndexedCharacter::describe() const { return "#" + std::to_string(index) + " " + character.describe(); }

// ---------------------------------------------------------------------------
// Symmetric square

Sym2Report verify_sym2(const Representation& sigma) {
    require_two_dim_irreducible(sigma, "verify_sym2");
    Sym2Report r;
    const auto chars = indexed(linear_characters(sigma.group));
    const CharacterVector chi_sigma = character(sigma);
    r.projective_type = image_type(sigma);
    r.sym2_reducible = !irreducible(sym_power(sigma, 2));

    for (const auto& lam : chars) {
        ++r.characters_tested;
        if (lam.character.is_trivial()) continue;
        if (chi_sigma * lam.character == chi_sigma) r.self_twists.push_back(lam);
    }
    r.self_twist = !r.self_twists.empty();

    // Index-2 subgroups are the kernels of the quadratic characters.
    for (const auto& lam : chars) {
        if (lam.character.is_trivial() || lam.character.order() != 2) continue;
        Subgroup h = kernel_subgroup(lam.character);
        const Representation res = restrict(sigma, h);
        if (irreducible(res)) continue;
        const CharacterVector chi_res = character(res);
        for (const auto& mu : indexed(linear_characters(h))) {
            if (inner_product(chi_res, character(mu.character)).is_zero()) continue;
            if (character(induce_index2(mu.character, h)) != chi_sigma) continue;
            r.induced = true;
            r.sigma_is_induced = true;
            r.chi = lam;
            r.h = h;
            r.mu = mu;
            break;
        }
        if (r.induced) break;
    }

    r.dihedral = r.sym2_reducible && r.induced && r.self_twist;
    bool witnesses_ok = true;
    if (r.induced) {
        const LinearCharacter omega = det_character(sigma);
        const Representation lhs = renamed(sym_power(sigma, 2), "Sym^2(sigma)");
        const Representation a = Representation::from_character(omega * r.chi->character, "omega*chi");
        const Representation b = renamed(induce_index2(r.mu->character.pow(2), *r.h), "Ind(mu^2)");
        r.decomposition = certify_decomposition(lhs, {a, b});
        const bool chi_twists = std::any_of(r.self_twists.begin(), r.self_twists.end(),
                                            [&](const IndexedCharacter& c) { return c.index == r.chi->index; });
        witnesses_ok = r.decomposition->holds() && chi_twists;
    }
    r.consistent = r.sym2_reducible == r.induced && r.induced == r.self_twist &&
                   r.dihedral == (r.projective_type == PolyhedralType::dihedral) && witnesses_ok;
    return r;
}

// ---------------------------------------------------------------------------
// Symmetric cube

Sym3Report verify_sym3(const Representation& sigma) {
    if (verify_sym2(sigma).dihedral) throw PreconditionFailed("verify_sym3: sigma is dihedral");
    Sym3Report r;
    r.projective_type = image_type(sigma);
    const CharacterVector chi2 = character(sym_power(sigma, 2));
    for (const auto& mu : indexed(linear_characters(sigma.group))) {
        if (mu.character.is_trivial()) continue;
        if (chi2 * mu.character != chi2) continue;
        r.all_cubic = r.all_cubic && mu.character.order() == 3;
        r.mus.push_back(mu);
    }
    r.found = !r.mus.empty();
    r.sym3_reducible = !irreducible(sym_power(sigma, 3));

    const Representation lhs = renamed(a_power(sigma, 3), "A^3(sigma)");
    std::optional<std::pair<CharacterVector, CharacterVector>> first_pair;
    bool all_hold = true;
    for (const auto& mu : r.mus) {
        const Representation a = renamed(twist(sigma, mu.character), "sigma*mu");
        const Representation b = renamed(twist(sigma, mu.character.pow(2)), "sigma*mu^2");
        r.decompositions.push_back(certify_decomposition(lhs, {a, b}));
        all_hold = all_hold && r.decompositions.back().holds();
        std::pair<CharacterVector, CharacterVector> pair{character(a), character(b)};
        if (!first_pair) {
            first_pair = pair;
        } else {
            const bool same = (pair.first == first_pair->first && pair.second == first_pair->second) ||
                              (pair.first == first_pair->second && pair.second == first_pair->first);
            r.same_unordered = r.same_unordered && same;
        }
    }
    r.consistent = r.found == r.sym3_reducible && r.found == (r.projective_type == PolyhedralType::tetrahedral) &&
                   all_hold && r.same_unordered && r.all_cubic;
    return r;
}

// ---------------------------------------------------------------------------
// Symmetric fourth

Sym4Report verify_sym4(const Representation& sigma) {
    require_two_dim_irreducible(sigma, "verify_sym4");
    if (!irreducible(sym_power(sigma, 3))) throw PreconditionFailed("verify_sym4: Sym^3(sigma) is reducible");
    Sym4Report r;
    r.projective_type = image_type(sigma);
    const CharacterVector chi3 = character(sym_power(sigma, 3));
    for (const auto& chi : indexed(linear_characters(sigma.group))) {
        if (chi.character.is_trivial()) continue;
        if (chi3 * chi.character == chi3) r.chis.push_back(chi);
    }
    const auto quadratic = std::find_if(r.chis.begin(), r.chis.end(),
                                        [](const IndexedCharacter& c) { return c.character.order() == 2; });
    r.found = quadratic != r.chis.end();
    r.chi_unique = r.chis.size() == 1;
    r.sym4_reducible = !irreducible(sym_power(sigma, 4));

    bool witnesses_ok = true;
    if (r.found) {
        const LinearCharacter& chi = quadratic->character;
        r.h = kernel_subgroup(chi);
        const Representation res = restrict(sigma, *r.h);
        r.restriction_type = image_type(res);
        r.restriction_irreducible = irreducible(res);
        r.restriction_dihedral = r.restriction_irreducible && verify_sym2(res).dihedral;

        const LinearCharacter omega_h = det_character(res);
        const Representation lhs = renamed(a_power(sigma, 4), "A^4(sigma)");
        const Representation sym2_chi = renamed(twist(sym_power(sigma, 2), chi), "Sym^2(sigma)*chi");
        for (const auto& mu : indexed(linear_characters(*r.h))) {
            if (mu.character.is_trivial() || mu.character.order() != 3) continue;
            const Representation ind = renamed(induce_index2(omega_h * mu.character, *r.h), "Ind(omega_H*mu)");
            Decomposition d = certify_decomposition(lhs, {ind, sym2_chi});
            if (!d.holds()) continue;
            r.mus.push_back(mu);
            if (!r.decomposition) r.decomposition = std::move(d);
        }
        witnesses_ok = r.h->index() == 2 && r.restriction_type == PolyhedralType::tetrahedral &&
                       r.restriction_irreducible && !r.restriction_dihedral && !r.mus.empty();
    }
    r.consistent = r.found == r.sym4_reducible && r.found == (r.projective_type == PolyhedralType::octahedral) &&
                   witnesses_ok;
    return r;
}

// ---------------------------------------------------------------------------
// Icosahedral chain

Sym6Report verify_sym6(const Representation& sigma) {
    require_two_dim_irreducible(sigma, "verify_sym6");
    Sym6Report r;
    if (!irreducible(sym_power(sigma, 4))) {
        r.reason = "Sym^4(sigma) is reducible";
        return r;
    }
    const Representation sym6 = renamed(sym_power(sigma, 6), "Sym^6(sigma)");
    if (irreducible(sym6)) {
        r.reason = "Sym^6(sigma) is irreducible";
        return r;
    }
    r.applicable = true;

    const auto chars = indexed(linear_characters(sigma.group));
    const Representation sym5 = renamed(sym_power(sigma, 5), "Sym^5(sigma)");
    const Representation ad = renamed(adjoint(sigma), "Ad(sigma)");
    const CharacterVector chi5 = character(sym5);
    const CharacterVector chi_ad = character(ad);
    const CharacterVector chi_sigma = character(sigma);
    const LinearCharacter omega = det_character(sigma);

    // Galois conjugates twisted by linear characters, up to isomorphism.
    const int conductor = sigma.conductor();
    std::vector<CharacterVector> pool;
    for (long k = 1; k <= std::max(conductor, 1); ++k) {
        if (std::gcd(k, static_cast<long>(conductor)) != 1) continue;
        const Representation conj = galois_conjugate(sigma, k);
        for (const auto& lam : chars) {
            Representation cand = lam.character.is_trivial() ? conj : twist(conj, lam.character);
            CharacterVector cv = character(cand);
            if (std::find(pool.begin(), pool.end(), cv) != pool.end()) continue;
            pool.push_back(cv);
            if (chi_ad * cv != chi5) continue;
            if (r.matches++ == 0) {
                r.sigma_prime = renamed(std::move(cand), "sigma'");
                r.galois_k = k;
                r.twist_index = lam.index;
            }
        }
    }
    r.pool_size = static_cast<int>(pool.size());
    if (!r.sigma_prime) throw PoolExhausted();
    const Representation& sp = *r.sigma_prime;
    r.sigma_prime_irreducible = irreducible(sp);

    const Representation ad_sp = renamed(adjoint(sp), "Ad(sigma')");
    const CharacterVector ad_sp_sigma = character(ad_sp) * chi_sigma;
    for (const auto& lam : chars) {
        if (ad_sp_sigma * lam.character != chi5) continue;
        if (r.chi_matches++ == 0) r.chi = lam;
    }

    r.not_a_twist = true;
    const CharacterVector chi_sp = character(sp);
    for (const auto& lam : chars)
        if (chi_sigma * lam.character == chi_sp) r.not_a_twist = false;

    r.sym5_ad_sigma = certify_decomposition(sym5, {renamed(tensor(ad, sp), "Ad(sigma)*sigma'")});
    const CharacterVector chi3 = character(sym_power(sigma, 3));
    const CharacterVector chi3p = character(sym_power(sp, 3));
    r.sym3_equal = chi3 == chi3p;

    if (r.chi) {
        const LinearCharacter& chi = r.chi->character;
        const LinearCharacter omega_p = det_character(sp);
        r.mu = omega_p * omega.inverse() * chi;
        r.sym3_relation = chi3 * *r.mu == chi3p;
        const LinearCharacter omega2 = omega.pow(2);
        for (const auto& eta : chars) {
            if (!eta.character.pow(2).is_trivial()) continue;
            if ((eta.character * omega2).pow(3) == *r.mu) r.etas.push_back(eta);
        }
        r.sym5_ad_sigma_prime =
            certify_decomposition(sym5, {renamed(twist(tensor(ad_sp, sigma), chi), "Ad(sigma')*sigma*chi")});
        r.sym6 = certify_decomposition(sym6, {renamed(tensor(sigma, sp), "sigma*sigma'"),
                                              renamed(twist(ad_sp, chi * omega), "Ad(sigma')*chi*omega")});
    }

    const bool sym6_shape = r.sym6 && r.sym6->holds() && r.sym6->summand_degrees == std::vector<int>{4, 3} &&
                            r.sym6->summand_irreducible == std::vector<bool>{true, true};
    r.consistent = r.matches == 1 && r.chi_matches == 1 && r.sigma_prime_irreducible && r.sym5_ad_sigma->holds() &&
                   r.sym5_ad_sigma_prime && r.sym5_ad_sigma_prime->holds() && sym6_shape && r.sym3_relation &&
                   !r.etas.empty() && r.not_a_twist && image_type(sigma) == PolyhedralType::icosahedral;
    return r;
}

// ---------------------------------------------------------------------------
// Higher powers, monotonicity, classification

HigherReport verify_higher(const Representation& sigma, int n_hi) {
    if (n_hi <= 6 || n_hi > kMaxNMax) throw PreconditionFailed("verify_higher: n_hi must satisfy 6 < n_hi <= 12");
    require_two_dim_irreducible(sigma, "verify_higher");
    HigherReport r;
    r.n_hi = n_hi;
    r.sym6_reducible = !irreducible(sym_power(sigma, 6));
    r.reducible = reducibility(sigma, 7, n_hi);
    r.consistent = std::all_of(r.reducible.begin(), r.reducible.end(), [&](bool b) { return b == r.sym6_reducible; });
    return r;
}

MonotonicityReport monotonicity_check(const Representation& sigma, int n_max) {
    if (n_max < 5 || n_max > kMaxNMax) throw PreconditionFailed("monotonicity_check: n_max must lie in [5, 12]");
    require_two_dim_irreducible(sigma, "monotonicity_check");
    MonotonicityReport r;
    r.n_max = n_max;
    r.reducible = reducibility(sigma, 2, n_max);
    const auto first = std::find(r.reducible.begin(), r.reducible.end(), true);
    if (first != r.reducible.end()) {
        r.first_reducible = static_cast<int>(first - r.reducible.begin()) + 2;
        r.M = *r.first_reducible - 1;
    }
    r.upward_closed = std::all_of(first, r.reducible.end(), [](bool b) { return b; });
    r.m_allowed = !r.M || *r.M == 1 || *r.M == 2 || *r.M == 3 || *r.M == 5;
    r.sym45_agree = r.reducible[2] == r.reducible[3];
    r.passed = r.upward_closed && r.m_allowed && r.sym45_agree;
    return r;
}

ClassificationReport classify(const Representation& sigma, int n_max) {
    if (n_max < kDefaultNMax || n_max > kMaxNMax) throw PreconditionFailed("classify: n_max must lie in [8, 12]");
    require_two_dim_irreducible(sigma, "classify");
    ClassificationReport r;
    r.input = sigma.group->name().empty() ? sigma.name : sigma.group->name();
    r.group_order = sigma.group->order();
    r.n_max = n_max;
    r.reducible = reducibility(sigma, 2, n_max);
    const auto first = std::find(r.reducible.begin(), r.reducible.end(), true);
    if (first != r.reducible.end()) r.M = static_cast<int>(first - r.reducible.begin()) + 1;
    const ProjectiveImage j = projective_image(*image_group(sigma));
    r.polyhedral_type = j.type;
    r.projective_order = j.order;

    bool witnesses_ok = true;
    switch (r.polyhedral_type) {
        case PolyhedralType::dihedral: {
            const Sym2Report s = verify_sym2(sigma);
            if (s.chi) r.witnesses.push_back({"chi", s.chi->describe()});
            if (s.h) r.witnesses.push_back({"H", "kernel of chi, order " + std::to_string(s.h->order())});
            if (s.mu) r.witnesses.push_back({"mu", s.mu->describe()});
            if (s.decomposition) r.witnesses.push_back({"Sym^2", s.decomposition->str()});
            witnesses_ok = s.consistent && s.dihedral;
            break;
        }
        case PolyhedralType::tetrahedral: {
            const Sym3Report s = verify_sym3(sigma);
            if (!s.mus.empty()) r.witnesses.push_back({"mu", s.mus.front().describe()});
            if (!s.decompositions.empty()) r.witnesses.push_back({"A^3", s.decompositions.front().str()});
            witnesses_ok = s.consistent && s.found;
            break;
        }
        case PolyhedralType::octahedral: {
            const Sym4Report s = verify_sym4(sigma);
            if (!s.chis.empty()) r.witnesses.push_back({"chi", s.chis.front().describe()});
            if (s.h) r.witnesses.push_back({"H", "kernel of chi, order " + std::to_string(s.h->order())});
            if (s.decomposition) r.witnesses.push_back({"A^4", s.decomposition->str()});
            witnesses_ok = s.consistent && s.found;
            break;
        }
        case PolyhedralType::icosahedral: {
            const Sym6Report s = verify_sym6(sigma);
            if (s.sigma_prime)
                r.witnesses.push_back({"sigma'", "Galois conjugate k=" + std::to_string(s.galois_k) + " twisted by #" +
                                                     std::to_string(s.twist_index)});
            if (s.sym6) r.witnesses.push_back({"Sym^6", s.sym6->str()});
            witnesses_ok = s.consistent;
            break;
        }
        case PolyhedralType::cyclic: witnesses_ok = false; break;
    }
    r.consistent = r.M == expected_m(r.polyhedral_type) && witnesses_ok;
    return r;
}

// ---------------------------------------------------------------------------
// Clebsch-Gordan

std::vector<RationalMatrix> random_invertible_samples(std::uint64_t seed, int count, bool integral) {
    std::mt19937_64 rng(seed);
    std::vector<RationalMatrix> out;
    for (int k = 0; k < count; ++k) out.push_back(random_invertible(rng, integral));
    return out;
}

std::vector<int> cg_block_dims(int i, int m) {
    std::vector<int> out;
    for (int j = 0; j <= i; ++j) out.push_back(m - 2 * j + 1);
    return out;
}

RationalMatrix cg_intertwiner(int i, int m, std::uint64_t seed) {
    if (i < 0 || m < 0 || 2 * i > m || m > 8) throw PreconditionFailed("cg_intertwiner: need 0 <= i <= m/2 and m <= 8");
    std::mt19937_64 rng(seed);
    const Eigen::Index n = static_cast<Eigen::Index>((i + 1) * (m - i + 1));
    constexpr int kAttempts = 5;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<RationalMatrix> samples;
        for (int k = 0; k < 3; ++k) samples.push_back(random_invertible(rng, true));
        std::vector<RationalMatrix> sources;
        for (const auto& g : samples) sources.push_back(cg_source(g, i, m));

        RationalMatrix c(n, n);
        Eigen::Index row = 0;
        bool ok = true;
        for (int j = 0; j <= i && ok; ++j) {
            std::vector<RationalMatrix> targets;
            for (const auto& g : samples) {
                RationalMatrix b = sym_power_matrix(g, m - 2 * j);
                const BigRational dj = det(g).pow(j);
                for (Eigen::Index x = 0; x < b.cols(); ++x)
                    for (Eigen::Index y = 0; y < b.rows(); ++y) b(y, x) *= dj;
                targets.push_back(std::move(b));
            }
            const auto basis = intertwiner_basis<BigRational>(sources, targets);
            if (basis.size() != 1) {
                ok = false;
                break;
            }
            c.middleRows(row, basis.front().rows()) = basis.front();
            row += basis.front().rows();
        }
        if (!ok || det(c).is_zero()) continue;
        if (!cg_validates_random(c, i, m, rng(), 10)) continue;
        return c;
    }
    throw ConstructionFailure("cg_intertwiner: no valid intertwiner after " + std::to_string(kAttempts) + " attempts");
}

bool cg_validates(const RationalMatrix& c, int i, int m, const MatrixGroup& g) {
    const ExactMatrix ce = to_exact(c);
    for (const auto& x : g.elements())
        if (!cg_holds(ce, x, i, m)) return false;
    return true;
}

bool cg_validates_random(const RationalMatrix& c, int i, int m, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k)
        if (!cg_holds(c, random_invertible(rng, false), i, m)) return false;
    return true;
}

}  // namespace symcrit
