#include "symcrit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symcrit/criteria.hpp"
#include "symcrit/expr.hpp"

namespace symcrit::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;
constexpr const char* kIsoNote = "isomorphism as representations of the finite group (character equality)";

// ---------------------------------------------------------------------------
// Serialization helpers

Json json_values(const LinearCharacter& chi) {
    Json vals = Json::array();
    for (int g : chi.group->generators()) vals.push_back(chi(g).str());
    return vals;
}

Json json_character(const IndexedCharacter& c) {
    return Json{{"index", c.index},
                {"order", c.character.order()},
                {"generator_values", json_values(c.character)},
                {"description", c.character.describe()}};
}

Json json_character(const LinearCharacter& c) {
    return Json{{"order", c.order()}, {"generator_values", json_values(c)}, {"description", c.describe()}};
}

Json json_characters(const std::vector<IndexedCharacter>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(json_character(c));
    return out;
}

Json json_decomposition(const Decomposition& d) {
    Json summands = Json::array();
    for (std::size_t i = 0; i < d.summands.size(); ++i)
        summands.push_back(Json{{"name", d.summands[i]},
                                {"degree", d.summand_degrees[i]},
                                {"irreducible", static_cast<bool>(d.summand_irreducible[i])},
                                {"hom_dim_into_lhs", d.hom_dims[i]}});
    return Json{{"lhs", d.lhs},
                {"lhs_degree", d.lhs_degree},
                {"summands", summands},
                {"character_equal", d.character_equal},
                {"holds", d.holds()}};
}

template <typename T>
Json json_optional(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, Decomposition>)
        return json_decomposition(*v);
    else
        return json_character(*v);
}

Json json_bools(const std::vector<bool>& v) {
    Json out = Json::array();
    for (bool b : v) out.push_back(b);
    return out;
}

Json json_group(const std::string& spec, const MatrixGroup& g) {
    return Json{{"spec", spec}, {"name", g.name()}, {"order", g.order()}, {"conductor", g.conductor()}};
}

Json json_m(const std::optional<int>& m) { return m ? Json(*m) : Json("exceeds n_max"); }

std::string bool_word(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Rendering

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return bool_word(v.get<bool>());
    if (v.is_null()) return "none";
    return v.dump();
}

bool is_flat_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

void render_text(const Json& v, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = v.begin(); it != v.end(); ++it) {
        const Json& x = it.value();
        if (x.is_object()) {
            os << pad << it.key() << ":\n";
            render_text(x, os, indent + 2);
        } else if (x.is_array() && !is_flat_array(x)) {
            os << pad << it.key() << ":\n";
            for (const auto& e : x) {
                if (e.is_object()) {
                    os << pad << "  -\n";
                    render_text(e, os, indent + 4);
                } else {
                    os << pad << "  - " << e.dump() << "\n";
                }
            }
        } else if (x.is_array()) {
            os << pad << it.key() << ": [";
            for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
            os << "]\n";
        } else {
            os << pad << it.key() << ": " << scalar_text(x) << "\n";
        }
    }
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        const Json& x = it.value();
        if (x.is_object()) {
            flatten(x, key, rows);
        } else if (x.is_array() && !is_flat_array(x)) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                const std::string k = key + "[" + std::to_string(i) + "]";
                if (x[i].is_object())
                    flatten(x[i], k, rows);
                else
                    rows.emplace_back(k, x[i].dump());
            }
        } else if (x.is_array()) {
            std::string s;
            for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + scalar_text(x[i]);
            rows.emplace_back(key, s);
        } else {
            rows.emplace_back(key, scalar_text(x));
        }
    }
}

void render_markdown(const Json& v, std::ostream& os) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(v, "", rows);
    os << "| field | value |\n|---|---|\n";
    for (const auto& [k, val] : rows) {
        std::string cell = val;
        for (std::size_t p = 0; (p = cell.find('|', p)) != std::string::npos; p += 2) cell.replace(p, 1, "\\|");
        os << "| " << k << " | " << cell << " |\n";
    }
}

void emit(const Json& report, Format f, std::ostream& os) {
    switch (f) {
        case Format::json: os << report.dump(2) << "\n"; break;
        case Format::text: render_text(report, os, 0); break;
        case Format::markdown: render_markdown(report, os); break;
    }
}

// ---------------------------------------------------------------------------
// Verifier reports

Json sym2_json(const Sym2Report& r) {
    Json h = nullptr;
    if (r.h) h = Json{{"order", r.h->order()}, {"index", r.h->index()}};
    return Json{{"conditions", {{"sym2_reducible", r.sym2_reducible}, {"induced", r.induced}, {"self_twist", r.self_twist}}},
                {"dihedral", r.dihedral},
                {"characters_tested", r.characters_tested},
                {"self_twists", json_characters(r.self_twists)},
                {"chi", json_optional(r.chi)},
                {"H", h},
                {"mu", json_optional(r.mu)},
                {"sigma_is_induced", r.sigma_is_induced},
                {"decomposition", json_optional(r.decomposition)},
                {"projective_type", to_string(r.projective_type)}};
}

Json sym3_json(const Sym3Report& r) {
    Json ds = Json::array();
    for (const auto& d : r.decompositions) ds.push_back(json_decomposition(d));
    return Json{{"found", r.found},
                {"mus", json_characters(r.mus)},
                {"all_cubic", r.all_cubic},
                {"sym3_reducible", r.sym3_reducible},
                {"decompositions", ds},
                {"same_unordered_decomposition", r.same_unordered},
                {"projective_type", to_string(r.projective_type)}};
}

Json sym4_json(const Sym4Report& r) {
    Json h = nullptr;
    if (r.h) h = Json{{"order", r.h->order()}, {"index", r.h->index()}};
    return Json{{"found", r.found},
                {"chis", json_characters(r.chis)},
                {"chi_unique", r.chi_unique},
                {"sym4_reducible", r.sym4_reducible},
                {"H", h},
                {"restriction_type", to_string(r.restriction_type)},
                {"restriction_irreducible", r.restriction_irreducible},
                {"restriction_dihedral", r.restriction_dihedral},
                {"mus", json_characters(r.mus)},
                {"decomposition", json_optional(r.decomposition)},
                {"projective_type", to_string(r.projective_type)}};
}

Json sym6_json(const Sym6Report& r) {
    if (!r.applicable) return Json{{"status", "not-applicable"}, {"reason", r.reason}};
    Json sp = nullptr;
    if (r.sigma_prime)
        sp = Json{{"description", "Galois conjugate zeta -> zeta^" + std::to_string(r.galois_k) +
                                      " twisted by character #" + std::to_string(r.twist_index)},
                  {"galois_k", r.galois_k},
                  {"twist_index", r.twist_index},
                  {"irreducible", r.sigma_prime_irreducible}};
    Json mu = nullptr;
    if (r.mu) mu = json_character(*r.mu);
    return Json{{"status", "applicable"},
                {"pool_size", r.pool_size},
                {"sigma_prime_matches", r.matches},
                {"sigma_prime", sp},
                {"chi", json_optional(r.chi)},
                {"chi_matches", r.chi_matches},
                {"mu", mu},
                {"etas", json_characters(r.etas)},
                {"sym5_ad_sigma", json_optional(r.sym5_ad_sigma)},
                {"sym5_ad_sigma_prime", json_optional(r.sym5_ad_sigma_prime)},
                {"sym6", json_optional(r.sym6)},
                {"sym3_relation", r.sym3_relation},
                {"sym3_equal", r.sym3_equal},
                {"sigma_prime_not_a_twist", r.not_a_twist}};
}

Representation defining_rep(const GroupPtr& g) {
    if (g->dim() != 2) throw PreconditionFailed("the group must consist of 2x2 matrices");
    return Representation::defining(g);
}

GroupPtr group_or(const RunConfig& cfg, std::string_view fallback) {
    return parse_group_spec(cfg.group_spec.empty() ? fallback : std::string_view(cfg.group_spec), cfg.cap);
}

std::string spec_or(const RunConfig& cfg, std::string_view fallback) {
    return cfg.group_spec.empty() ? std::string(fallback) : cfg.group_spec;
}

std::pair<Json, bool> verify_cg(const RunConfig& cfg) {
    const std::string spec = spec_or(cfg, "octahedral");
    const GroupPtr g = group_or(cfg, "octahedral");
    Json pairs = Json::array();
    bool all = true;
    for (int m = 0; m <= 6; ++m)
        for (int i = 0; 2 * i <= m; ++i) {
            const RationalMatrix c = cg_intertwiner(i, m, cfg.seed);
            const bool on_group = cg_validates(c, i, m, *g);
            all = all && on_group;
            Json dims = Json::array();
            for (int d : cg_block_dims(i, m)) dims.push_back(d);
            pairs.push_back(Json{{"i", i},
                                 {"m", m},
                                 {"size", c.rows()},
                                 {"block_dims", dims},
                                 {"random_samples_validated", 10},
                                 {"group_validated", on_group}});
        }
    return {Json{{"validation_group", json_group(spec, *g)}, {"pairs", pairs}}, all};
}

std::pair<Json, bool> verify_sym3root(const RunConfig& cfg) {
    const std::string spec = spec_or(cfg, "octahedral");
    const GroupPtr g = group_or(cfg, "octahedral");
    if (g->dim() != 2) throw PreconditionFailed("the group must consist of 2x2 matrices");
    int group_ok = 0;
    for (const auto& x : g->elements()) {
        const ExactMatrix s = sym_power_matrix(x, 3);
        const auto cert = sym3_root(s);
        // The certificate must be x up to the scalar that normalizes it.
        const CycNum lead = is_zero(x(0, 0)) ? x(0, 1) : x(0, 0);
        if (certificate_reproduces(cert, s) && equal(cert.projective_matrix, scale(x, lead.inverse()))) ++group_ok;
    }
    int random_ok = 0;
    const auto samples = random_invertible_samples(cfg.seed, 100);
    for (const auto& x : samples) {
        const RationalMatrix s = sym_power_matrix(x, 3);
        if (certificate_reproduces(sym3_root(s), s)) ++random_ok;
    }
    auto diag4 = [](long a, long b, long c, long d) {
        return diag<BigRational>({BigRational(a), BigRational(b), BigRational(c), BigRational(d)});
    };
    const auto cube_cert = sym3_root(diag4(1, 2, 4, 8));
    bool non_cube_rejected = false;
    try {
        sym3_root(diag4(1, 2, 4, 9));
    } catch (const NotACube&) {
        non_cube_rejected = true;
    }
    RationalMatrix shear = identity<BigRational>(4);
    shear(0, 1) = BigRational(1);
    bool shear_rejected = false;
    try {
        sym3_root(shear);
    } catch (const NotACube&) {
        shear_rejected = true;
    }
    const bool ok = group_ok == g->order() && random_ok == 100 && cube_cert.t1t4_eq_t2t3 && cube_cert.t1t3_eq_t2sq &&
                    non_cube_rejected && shear_rejected;
    Json report{{"group", json_group(spec, *g)},
                {"group_elements_round_tripped", group_ok},
                {"random_samples", 100},
                {"random_round_tripped", random_ok},
                {"diagonal_cube",
                 {{"input", "diag(1, 2, 4, 8)"},
                  {"t1t4_eq_t2t3", cube_cert.t1t4_eq_t2t3},
                  {"t1t3_eq_t2sq", cube_cert.t1t3_eq_t2sq},
                  {"projective_matrix", to_string(cube_cert.projective_matrix)},
                  {"cube_scalar", cube_cert.cube_scalar.str()}}},
                {"diagonal_non_cube_rejected", non_cube_rejected},
                {"non_diagonal_non_cube_rejected", shear_rejected}};
    return {report, ok};
}

// ---------------------------------------------------------------------------
// Self-test suite

struct Check {
    std::string name;
    std::function<bool()> run;
};

std::vector<Check> invariant_suite() {
    std::vector<Check> checks;
    auto add = [&](std::string name, std::function<bool()> f) { checks.push_back({std::move(name), std::move(f)}); };

    add("exact-arith.cyclotomic_polynomial", [] {
        return cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1} && cyclotomic_polynomial(1) == IntPoly{-1, 1};
    });
    add("exact-arith.root_of_unity_order", [] {
        for (int n = 1; n <= 24; ++n) {
            const CycNum z = root_of_unity(n, 1);
            if (!z.pow(n).is_one()) return false;
            for (int k = 1; k < n; ++k)
                if (z.pow(k).is_one()) return false;
        }
        return true;
    });
    add("exact-arith.field_axioms", [] {
        const CycNum x = parse_cyc("3/2 + z20 - 2*z20^7");
        const CycNum y = parse_cyc("(1 + z4)/5 - z5^2");
        return (x * x.inverse()).is_one() && x.conj().conj() == x && (x * y).galois(3) == x.galois(3) * y.galois(3) &&
               (x + y).conj() == x.conj() + y.conj();
    });
    add("exact-arith.quadratic_surds", [] { return sqrt2() * sqrt2() == CycNum(2) && sqrt5() * sqrt5() == CycNum(5); });
    add("exact-arith.parse_round_trip", [] {
        const CycNum x = parse_cyc("7/3 - z12^5 + 2*z12^2");
        return parse_cyc(x.str()) == x;
    });
    add("linalg.det_multiplicative", [] {
        const auto s = random_invertible_samples(11, 4);
        const RationalMatrix a = kron(s[0], s[1]);
        const RationalMatrix b = kron(s[2], s[3]);
        return det(mat_mul(a, b)) == det(a) * det(b);
    });
    add("linalg.nullspace_rank", [] {
        const auto s = random_invertible_samples(12, 2);
        RationalMatrix a = kron(s[0], s[1]);
        a.row(3) = a.row(0) + a.row(1);
        const auto ns = nullspace(a);
        for (const auto& v : ns)
            if (!is_zero_matrix(RationalMatrix(mat_mul(a, v)))) return false;
        return rank(a) + static_cast<Eigen::Index>(ns.size()) == a.cols() && ns.size() == 1;
    });
    add("linalg.inverse", [] {
        const auto s = random_invertible_samples(13, 2);
        const RationalMatrix a = kron(s[0], s[1]);
        return equal(RationalMatrix(mat_mul(a, inverse(a))), identity<BigRational>(4));
    });
    add("groups.orders", [] {
        for (int n = 2; n <= 8; ++n)
            if (binary_dihedral(n)->order() != 4 * n) return false;
        return binary_tetrahedral()->order() == 24 && binary_octahedral()->order() == 48 &&
               binary_icosahedral()->order() == 120;
    });
    add("groups.projective_types", [] {
        return projective_classify(*binary_dihedral(5)) == PolyhedralType::dihedral &&
               projective_classify(*binary_tetrahedral()) == PolyhedralType::tetrahedral &&
               projective_classify(*binary_octahedral()) == PolyhedralType::octahedral &&
               projective_classify(*binary_icosahedral()) == PolyhedralType::icosahedral;
    });
    add("groups.linear_character_counts", [] {
        for (int n = 2; n <= 6; ++n)
            if (linear_characters(binary_dihedral(n)).size() != 4) return false;
        return linear_characters(binary_tetrahedral()).size() == 3 &&
               linear_characters(binary_octahedral()).size() == 2 && linear_characters(binary_icosahedral()).size() == 1;
    });
    add("groups.class_counts", [] {
        return binary_dihedral(3)->conjugacy_classes().size() == 6 &&
               binary_tetrahedral()->conjugacy_classes().size() == 7 &&
               binary_octahedral()->conjugacy_classes().size() == 8 &&
               binary_icosahedral()->conjugacy_classes().size() == 9;
    });
    add("reps.sym_power_functorial", [] {
        const Representation s = Representation::defining(binary_tetrahedral());
        for (int n = 0; n <= 4; ++n)
            if (!sym_power(s, n).is_homomorphism()) return false;
        return true;
    });
    add("reps.sym_power_det", [] {
        const GroupPtr g = binary_octahedral();
        for (int n = 1; n <= 6; ++n)
            for (const auto& x : g->elements())
                if (det(sym_power_matrix(x, n)) != det(x).pow(n * (n + 1) / 2)) return false;
        return true;
    });
    add("reps.character_recurrence", [] {
        const Representation s = Representation::defining(binary_icosahedral());
        const LinearCharacter w = det_character(s);
        std::vector<CharacterVector> chis{character(sym_power(s, 0)), character(s)};
        for (int n = 2; n <= 8; ++n) {
            const CharacterVector direct = character(sym_power(s, n));
            for (int g = 0; g < s.group->order(); ++g)
                if (direct(g) != chis[1](g) * chis[n - 1](g) - w(g) * chis[n - 2](g)) return false;
            chis.push_back(direct);
        }
        return true;
    });
    add("reps.dual_is_twist", [] {
        for (const GroupPtr& g : {binary_dihedral(3), binary_tetrahedral(), binary_octahedral()}) {
            const Representation s = Representation::defining(g);
            if (!isomorphic(dual(s), twist(s, det_character(s).inverse()))) return false;
        }
        return true;
    });
    add("reps.hom_dim_matches_inner_product", [] {
        const Representation s = Representation::defining(binary_octahedral());
        const Representation a = sym_power(s, 2);
        const Representation b = tensor(s, s);
        const Representation c = sym_power(s, 4);
        for (const auto& [x, y] : std::vector<std::pair<Representation, Representation>>{{a, b}, {b, b}, {c, a}}) {
            const CycNum ip = inner_product(character(x), character(y));
            if (ip != CycNum(hom_dim(x, y))) return false;
        }
        return true;
    });
    add("reps.induced_homomorphism", [] {
        const GroupPtr g = binary_dihedral(3);
        const auto chars = linear_characters(g);
        for (const auto& chi : chars) {
            if (chi.is_trivial() || chi.order() != 2) continue;
            const Subgroup h = kernel_subgroup(chi);
            for (const auto& mu : linear_characters(h))
                if (!induce_index2(mu, h).is_homomorphism()) return false;
        }
        return true;
    });
    add("reps.clebsch_gordan_dimensions", [] {
        for (int m = 0; m <= 8; ++m)
            for (int i = 0; 2 * i <= m; ++i) {
                int sum = 0;
                for (int d : cg_block_dims(i, m)) sum += d;
                if (sum != (i + 1) * (m - i + 1)) return false;
            }
        return true;
    });
    add("criteria.classification_table", [] {
        const std::vector<std::pair<GroupPtr, int>> rows{
            {binary_dihedral(3), 1}, {binary_tetrahedral(), 2}, {binary_octahedral(), 3}, {binary_icosahedral(), 5}};
        for (const auto& [g, m] : rows) {
            const ClassificationReport r = classify(Representation::defining(g), 8);
            if (r.M != m || !r.consistent) return false;
        }
        return true;
    });
    add("criteria.monotonicity", [] {
        for (const GroupPtr& g : {binary_dihedral(4), binary_tetrahedral(), binary_octahedral(), binary_icosahedral()})
            if (!monotonicity_check(Representation::defining(g), 8).passed) return false;
        return true;
    });
    add("criteria.icosahedral_chain", [] { return verify_sym6(Representation::defining(binary_icosahedral())).consistent; });
    add("criteria.sym3_root_round_trip", [] {
        for (const auto& x : random_invertible_samples(14, 20)) {
            const RationalMatrix s = sym_power_matrix(x, 3);
            if (!certificate_reproduces(sym3_root(s), s)) return false;
        }
        return true;
    });
    add("criteria.clebsch_gordan", [] {
        const GroupPtr g = binary_octahedral();
        for (auto [i, m] : std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {1, 3}, {2, 4}})
            if (!cg_validates(cg_intertwiner(i, m, 3), i, m, *g)) return false;
        return true;
    });
    return checks;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

Command parse_command(std::string_view s) {
    if (s == "table") return Command::table;
    if (s == "verify") return Command::verify;
    if (s == "selftest") return Command::selftest;
    throw ParseError("unknown command: " + std::string(s));
}

Theorem parse_theorem(std::string_view s) {
    static const std::pair<const char*, Theorem> names[] = {
        {"sym2", Theorem::sym2},       {"sym3", Theorem::sym3},         {"sym4", Theorem::sym4},
        {"sym6", Theorem::sym6},       {"higher", Theorem::higher},     {"monotone", Theorem::monotone},
        {"cg", Theorem::cg},           {"sym3root", Theorem::sym3root}};
    for (const auto& [n, t] : names)
        if (s == n) return t;
    throw ParseError("unknown theorem: " + std::string(s));
}

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::sym2: return "sym2";
        case Theorem::sym3: return "sym3";
        case Theorem::sym4: return "sym4";
        case Theorem::sym6: return "sym6";
        case Theorem::higher: return "higher";
        case Theorem::monotone: return "monotone";
        case Theorem::cg: return "cg";
        case Theorem::sym3root: return "sym3root";
    }
    return "?";
}

Format parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "markdown") return Format::markdown;
    throw ParseError("unknown format: " + std::string(s));
}

std::size_t cap_from_env() {
    const char* v = std::getenv("SYMCRIT_CAP");
    if (v == nullptr || *v == '\0') return kDefaultClosureCap;
    const std::string s(v);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw ParseError("SYMCRIT_CAP must be a positive integer, got \"" + s + "\"");
    const auto cap = static_cast<std::size_t>(std::stoul(s));
    if (cap == 0) throw ParseError("SYMCRIT_CAP must be positive");
    return cap;
}

GroupPtr parse_group_spec(std::string_view spec, std::size_t cap) {
    if (spec == "tetrahedral") return binary_tetrahedral(cap);
    if (spec == "octahedral") return binary_octahedral(cap);
    if (spec == "icosahedral") return binary_icosahedral(cap);
    if (spec.starts_with("dihedral:")) {
        const std::string n(spec.substr(9));
        if (n.empty() || n.size() > 4 || n.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("dihedral:<n> needs a positive integer n");
        const int k = std::stoi(n);
        if (k < 2) throw ParseError("dihedral:<n> needs n >= 2");
        return binary_dihedral(k, cap);
    }
    if (spec.starts_with("file:")) {
        const std::string path(spec.substr(5));
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open generator file " + path);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("generator file " + path + " is not valid JSON: " + e.what());
        }
        if (!doc.is_array() || doc.empty()) throw ParseError("generator file must hold a non-empty JSON array");
        std::vector<ExactMatrix> gens;
        for (const auto& m : doc) {
            if (!m.is_array() || m.size() != 2) throw ParseError("each generator must be a 2x2 array");
            ExactMatrix g(2, 2);
            for (std::size_t i = 0; i < 2; ++i) {
                if (!m[i].is_array() || m[i].size() != 2) throw ParseError("each generator must be a 2x2 array");
                for (std::size_t j = 0; j < 2; ++j) {
                    if (!m[i][j].is_string()) throw ParseError("matrix entries must be strings such as \"(1+z4)/2\"");
                    g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_cyc(m[i][j].get<std::string>());
                }
            }
            gens.push_back(std::move(g));
        }
        return MatrixGroup::close(gens, cap, path);
    }
    throw ParseError("unknown group spec \"" + std::string(spec) +
                     "\"; expected dihedral:<n>, tetrahedral, octahedral, icosahedral or file:<path>");
}

// ---------------------------------------------------------------------------
// Commands

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    struct Row {
        std::string spec;
        int expected;
    };
    const std::vector<Row> rows{{"dihedral:3", 1},  {"dihedral:4", 1}, {"dihedral:5", 1}, {"dihedral:6", 1},
                                {"tetrahedral", 2}, {"octahedral", 3}, {"icosahedral", 5}};
    Json json_rows = Json::array();
    bool all_match = true;
    std::vector<ClassificationReport> reports;
    for (const auto& row : rows) {
        const GroupPtr g = parse_group_spec(row.spec, cfg.cap);
        ClassificationReport r = classify(Representation::defining(g), cfg.n_max);
        const bool match = r.M == row.expected && r.consistent;
        all_match = all_match && match;
        json_rows.push_back(Json{{"group", row.spec},
                                 {"name", g->name()},
                                 {"order", r.group_order},
                                 {"projective_type", to_string(r.polyhedral_type)},
                                 {"M", json_m(r.M)},
                                 {"reducibility_vector", json_bools(r.reducible)},
                                 {"expected_M", row.expected},
                                 {"match", match}});
        reports.push_back(std::move(r));
    }
    if (cfg.format == Format::json) {
        const Json doc{{"schema", kSchema},
                       {"command", "table"},
                       {"n_max", cfg.n_max},
                       {"rows", json_rows},
                       {"all_match", all_match}};
        out << doc.dump(2) << "\n";
    } else {
        const bool md = cfg.format == Format::markdown;
        const std::string vec_head = "reducible Sym^n, n=2.." + std::to_string(cfg.n_max);
        if (md) {
            out << "| group | order | projective type | M | " << vec_head << " | expected M | match |\n";
            out << "|---|---|---|---|---|---|---|\n";
        } else {
            out << std::left << std::setw(13) << "group" << std::setw(7) << "order" << std::setw(13) << "projective"
                << std::setw(4) << "M" << std::setw(25) << vec_head << std::setw(10) << "expected"
                << "match\n";
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Json& r = json_rows[i];
            std::string vec;
            for (const auto& b : r["reducibility_vector"]) vec += b.get<bool>() ? "T" : "F";
            const std::string m = r["M"].is_number() ? std::to_string(r["M"].get<int>()) : ">" + std::to_string(cfg.n_max);
            if (md) {
                out << "| " << rows[i].spec << " | " << r["order"].get<int>() << " | "
                    << r["projective_type"].get<std::string>() << " | " << m << " | " << vec << " | "
                    << rows[i].expected << " | " << bool_word(r["match"].get<bool>()) << " |\n";
            } else {
                out << std::left << std::setw(13) << rows[i].spec << std::setw(7) << r["order"].get<int>()
                    << std::setw(13) << r["projective_type"].get<std::string>() << std::setw(4) << m << std::setw(25)
                    << vec << std::setw(10) << rows[i].expected << bool_word(r["match"].get<bool>()) << "\n";
            }
        }
        out << (md ? "\n" : "") << "all rows match: " << bool_word(all_match) << "\n";
    }
    return all_match ? kExitOk : kExitMismatch;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    Json report{{"schema", kSchema}, {"command", "verify"}, {"theorem", to_string(cfg.theorem)}};
    Json result;
    bool consistent = false;
    switch (cfg.theorem) {
        case Theorem::cg: {
            auto [r, ok] = verify_cg(cfg);
            report["seed"] = cfg.seed;
            result = std::move(r);
            consistent = ok;
            break;
        }
        case Theorem::sym3root: {
            auto [r, ok] = verify_sym3root(cfg);
            report["seed"] = cfg.seed;
            result = std::move(r);
            consistent = ok;
            break;
        }
        default: {
            if (cfg.group_spec.empty()) throw ParseError("verify " + to_string(cfg.theorem) + " needs --group");
            const GroupPtr g = parse_group_spec(cfg.group_spec, cfg.cap);
            const Representation sigma = defining_rep(g);
            report["group"] = json_group(cfg.group_spec, *g);
            report["note"] = kIsoNote;
            switch (cfg.theorem) {
                case Theorem::sym2: {
                    const auto r = verify_sym2(sigma);
                    result = sym2_json(r);
                    consistent = r.consistent;
                    break;
                }
                case Theorem::sym3: {
                    const auto r = verify_sym3(sigma);
                    result = sym3_json(r);
                    consistent = r.consistent;
                    break;
                }
                case Theorem::sym4: {
                    const auto r = verify_sym4(sigma);
                    result = sym4_json(r);
                    consistent = r.consistent;
                    break;
                }
                case Theorem::sym6: {
                    const auto r = verify_sym6(sigma);
                    result = sym6_json(r);
                    consistent = !r.applicable || r.consistent;
                    break;
                }
                case Theorem::higher: {
                    const auto r = verify_higher(sigma, cfg.n_max);
                    Json per_n = Json::object();
                    for (std::size_t i = 0; i < r.reducible.size(); ++i)
                        per_n["Sym^" + std::to_string(7 + i)] = r.reducible[i] ? "reducible" : "irreducible";
                    result = Json{{"n_hi", r.n_hi}, {"sym6_reducible", r.sym6_reducible}, {"higher", per_n}};
                    consistent = r.consistent;
                    break;
                }
                case Theorem::monotone: {
                    const auto r = monotonicity_check(sigma, cfg.n_max);
                    result = Json{{"n_max", r.n_max},
                                  {"reducibility_vector", json_bools(r.reducible)},
                                  {"first_reducible", r.first_reducible ? Json(*r.first_reducible) : Json(nullptr)},
                                  {"M", json_m(r.M)},
                                  {"upward_closed", r.upward_closed},
                                  {"M_allowed", r.m_allowed},
                                  {"sym4_sym5_agree", r.sym45_agree}};
                    consistent = r.passed;
                    break;
                }
                default: break;
            }
        }
    }
    report["result"] = result;
    report["consistent"] = consistent;
    emit(report, cfg.format, out);
    return consistent ? kExitOk : kExitMismatch;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    const char* forced = std::getenv("SYMCRIT_SELFTEST_FAIL");
    const std::string forced_name = forced ? forced : "";
    const auto start = std::chrono::steady_clock::now();
    Json results = Json::array();
    int passed = 0;
    int failed = 0;
    std::string first_failure;
    for (const auto& check : invariant_suite()) {
        bool ok = false;
        std::string error;
        try {
            ok = check.run() && check.name != forced_name;
        } catch (const std::exception& e) {
            error = e.what();
        }
        Json entry{{"name", check.name}, {"passed", ok}};
        if (!error.empty()) entry["error"] = error;
        results.push_back(entry);
        (ok ? passed : failed)++;
        if (!ok && first_failure.empty()) first_failure = check.name;
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (cfg.format == Format::json) {
        Json doc{{"schema", kSchema},
                 {"suite", "invariants"},
                 {"passed", passed},
                 {"failed", failed},
                 {"duration_ms", ms},
                 {"first_failure", first_failure.empty() ? Json(nullptr) : Json(first_failure)},
                 {"checks", results}};
        out << doc.dump(2) << "\n";
    } else {
        const bool md = cfg.format == Format::markdown;
        if (md) out << "| invariant | result |\n|---|---|\n";
        for (const auto& r : results) {
            const std::string word = r["passed"].get<bool>() ? "pass" : "FAIL";
            if (md)
                out << "| " << r["name"].get<std::string>() << " | " << word << " |\n";
            else
                out << word << "  " << r["name"].get<std::string>() << "\n";
        }
        out << (md ? "\n" : "") << passed << " passed, " << failed << " failed in " << ms << " ms\n";
        if (!first_failure.empty()) out << "first failing invariant: " << first_failure << "\n";
    }
    return failed == 0 ? kExitOk : kExitMismatch;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.n_max < kDefaultNMax || cfg.n_max > kMaxNMax)
            throw ParseError("--nmax must lie in [" + std::to_string(kDefaultNMax) + ", " + std::to_string(kMaxNMax) + "]");
        std::ostringstream buffer;
        int code = kExitOk;
        switch (cfg.command) {
            case Command::table: code = cmd_table(cfg, buffer); break;
            case Command::verify: code = cmd_verify(cfg, buffer); break;
            case Command::selftest: code = cmd_selftest(cfg, buffer); break;
        }
        if (cfg.output_path) {
            std::ofstream file(*cfg.output_path);
            if (!file) throw ParseError("cannot write " + *cfg.output_path);
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        return code;
    } catch (const PoolExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
}

}  // namespace symcrit::cli
