#include "symcrit/reps.hpp"

#include <functional>
#include <numeric>
#include <utility>

namespace symcrit {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
    if (a.get() != b.get()) throw GroupMismatch(std::string(what) + ": operands live on different groups");
}

ExactMatrix one_by_one(const CycNum& x) {
    ExactMatrix m(1, 1);
    m(0, 0) = x;
    return m;
}

Representation map_images(const Representation& rho, Eigen::Index degree, std::string name,
                          const std::function<ExactMatrix(int)>& f) {
    Representation out{rho.group, degree, {}, std::move(name)};
    out.images.reserve(rho.images.size());
    for (int g = 0; g < static_cast<int>(rho.images.size()); ++g) out.images.push_back(f(g));
    return out;
}

CycNum trace(const ExactMatrix& m) {
    CycNum t;
    for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

int Representation::conductor() const {
    int n = 1;
    for (const auto& m : images) n = std::lcm(n, common_conductor(m));
    return n;
}

bool Representation::is_homomorphism() const {
    if (static_cast<int>(images.size()) != group->order()) return false;
    for (const auto& m : images)
        if (m.rows() != degree || m.cols() != degree) return false;
    if (!equal(images.front(), identity<CycNum>(degree))) return false;
    const auto& gens = group->generators();
    for (int g = 0; g < group->order(); ++g)
        for (int s : gens)
            if (!equal(mat_mul((*this)(g), (*this)(s)), (*this)(group->mul(g, s)))) return false;
    return true;
}

Representation Representation::defining(const GroupPtr& g, std::string name) {
    return Representation{g, g->dim(), g->elements(), std::move(name)};
}

Representation Representation::trivial(const GroupPtr& g, Eigen::Index degree) {
    return Representation{g, degree, std::vector<ExactMatrix>(static_cast<std::size_t>(g->order()), identity<CycNum>(degree)),
                          "1"};
}

Representation Representation::from_character(const LinearCharacter& chi, std::string name) {
    Representation out{chi.group, 1, {}, std::move(name)};
    out.images.reserve(chi.values.size());
    for (const auto& v : chi.values) out.images.push_back(one_by_one(v));
    return out;
}

Representation Representation::from_generator_images(const GroupPtr& g, const std::vector<ExactMatrix>& generator_images,
                                                     std::string name) {
    if (generator_images.size() != g->generators().size())
        throw DimensionMismatch("from_generator_images: one image per generator is required");
    const Eigen::Index degree = generator_images.empty() ? 1 : generator_images.front().rows();
    Representation out{g, degree, std::vector<ExactMatrix>(static_cast<std::size_t>(g->order())), std::move(name)};
    out.images[0] = identity<CycNum>(degree);
    for (int i : g->word_order()) {
        if (i == 0) continue;
        const auto& step = generator_images[static_cast<std::size_t>(g->word_generator(i))];
        out.images[static_cast<std::size_t>(i)] = mat_mul(out(g->word_parent(i)), step);
    }
    if (!out.is_homomorphism()) throw ConstructionFailure("from_generator_images: images do not define a homomorphism");
    return out;
}

CharacterVector CharacterVector::conj() const {
    CharacterVector out{group, {}};
    out.values.reserve(values.size());
    for (const auto& v : values) out.values.push_back(v.conj());
    return out;
}

bool CharacterVector::is_class_function() const {
    for (const auto& cls : group->conjugacy_classes())
        for (int g : cls)
            if ((*this)(g) != (*this)(cls.front())) return false;
    return true;
}

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b) {
    require_same_group(a.group, b.group, "character sum");
    CharacterVector out{a.group, a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

CharacterVector operator*(const CharacterVector& a, const CharacterVector& b) {
    require_same_group(a.group, b.group, "character product");
    CharacterVector out{a.group, {}};
    out.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
    return out;
}

CharacterVector operator*(const CharacterVector& a, const LinearCharacter& chi) { return a * character(chi); }

bool operator==(const CharacterVector& a, const CharacterVector& b) {
    return a.group.get() == b.group.get() && a.values == b.values;
}

Representation sym_power(const Representation& rho, int n) {
    if (rho.degree != 2) throw DimensionMismatch("sym_power: only 2-dimensional representations are supported");
    return map_images(rho, n + 1, "Sym^" + std::to_string(n) + "(" + rho.name + ")",
                      [&](int g) { return sym_power_matrix(rho(g), n); });
}

Representation tensor(const Representation& rho, const Representation& tau) {
    require_same_group(rho.group, tau.group, "tensor");
    return map_images(rho, rho.degree * tau.degree, rho.name + " (x) " + tau.name,
                      [&](int g) { return kron(rho(g), tau(g)); });
}

Representation dual(const Representation& rho) {
    return map_images(rho, rho.degree, rho.name + "^*", [&](int g) { return transpose(rho(rho.group->inv(g))); });
}

Representation twist(const Representation& rho, const LinearCharacter& chi) {
    require_same_group(rho.group, chi.group, "twist");
    return map_images(rho, rho.degree, rho.name + " (x) " + chi.describe(), [&](int g) { return scale(rho(g), chi(g)); });
}

LinearCharacter det_character(const Representation& rho) {
    LinearCharacter out{rho.group, {}};
    out.values.reserve(rho.images.size());
    for (const auto& m : rho.images) out.values.push_back(det(m));
    return out;
}

Representation a_power(const Representation& rho, int n) {
    Representation out = twist(sym_power(rho, n), det_character(rho).inverse());
    out.name = "A^" + std::to_string(n) + "(" + rho.name + ")";
    return out;
}

Representation direct_sum(const Representation& rho, const Representation& tau) {
    require_same_group(rho.group, tau.group, "direct_sum");
    return map_images(rho, rho.degree + tau.degree, rho.name + " + " + tau.name,
                      [&](int g) { return direct_sum<CycNum>({rho(g), tau(g)}); });
}

Representation restrict(const Representation& rho, const Subgroup& h) {
    require_same_group(rho.group, h.parent, "restrict");
    Representation out{h.group, rho.degree, {}, "Res(" + rho.name + ")"};
    out.images.reserve(h.members.size());
    for (int m : h.members) out.images.push_back(rho(m));
    return out;
}

Representation induce_index2(const LinearCharacter& mu, const Subgroup& h) {
    require_same_group(mu.group, h.group, "induce_index2");
    if (h.index() != 2 || !h.coset_rep) throw PreconditionFailed("induce_index2: subgroup must have index 2");
    const MatrixGroup& g = *h.parent;
    const int c = *h.coset_rep;
    const int c_inv = g.inv(c);
    auto mu_at = [&](int parent_index) { return mu(*h.local(parent_index)); };
    Representation out{h.parent, 2, {}, "Ind(" + mu.describe() + ")"};
    out.images.reserve(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) {
        ExactMatrix m = ExactMatrix::Zero(2, 2);
        if (h.contains(x)) {
            m(0, 0) = mu_at(x);
            m(1, 1) = mu_at(g.mul(g.mul(c, x), c_inv));
        } else {
            m(0, 1) = mu_at(g.mul(x, c_inv));
            m(1, 0) = mu_at(g.mul(c, x));
        }
        out.images.push_back(std::move(m));
    }
    return out;
}

Representation galois_conjugate(const Representation& rho, long k) {
    const int n = rho.conductor();
    const long r = ((k % n) + n) % n;
    if (std::gcd(r, static_cast<long>(n)) != 1)
        throw PreconditionFailed("galois_conjugate: k must be coprime to the conductor " + std::to_string(n));
    return map_images(rho, rho.degree, rho.name + "^(" + std::to_string(k) + ")",
                      [&](int g) { return galois_map(rho(g), n == 1 ? 1 : r); });
}

GroupPtr image_group(const Representation& rho, std::size_t cap) {
    std::vector<ExactMatrix> gens;
    for (int s : rho.group->generators()) gens.push_back(rho(s));
    if (gens.empty()) gens.push_back(identity<CycNum>(rho.degree));
    return MatrixGroup::close(gens, cap, "image of " + rho.name);
}

CharacterVector character(const Representation& rho) {
    CharacterVector out{rho.group, {}};
    out.values.reserve(rho.images.size());
    for (const auto& m : rho.images) out.values.push_back(trace(m));
    return out;
}

CharacterVector character(const LinearCharacter& chi) { return CharacterVector{chi.group, chi.values}; }

CycNum inner_product(const CharacterVector& a, const CharacterVector& b) {
    require_same_group(a.group, b.group, "inner_product");
    CycNum sum;
    for (const auto& cls : a.group->conjugacy_classes()) {
        const int g = cls.front();
        sum += CycNum(static_cast<long>(cls.size())) * a(g) * b(g).conj();
    }
    return sum * CycNum(BigRational(1, a.group->order()));
}

int multiplicity(const CharacterVector& a, const CharacterVector& b) {
    const CycNum ip = inner_product(a, b);
    if (!ip.is_rational() || !ip.rational_value().is_integer() || ip.rational_value().sign() < 0)
        throw Error("multiplicity: inner product " + ip.str() + " is not a non-negative integer");
    return static_cast<int>(ip.rational_value().numerator().get_si());
}

HomSpace hom_space(const Representation& rho, const Representation& tau) {
    require_same_group(rho.group, tau.group, "hom_space");
    std::vector<ExactMatrix> sources;
    std::vector<ExactMatrix> targets;
    for (int g : rho.group->generators()) {
        sources.push_back(rho(g));
        targets.push_back(tau(g));
    }
    HomSpace out{rho.degree, tau.degree, {}};
    if (sources.empty()) {
        // Trivial group: every matrix intertwines.
        sources.push_back(identity<CycNum>(rho.degree));
        targets.push_back(identity<CycNum>(tau.degree));
    }
    out.basis = intertwiner_basis<CycNum>(sources, targets);
    return out;
}

int hom_dim(const Representation& rho, const Representation& tau) { return hom_space(rho, tau).dim(); }

bool isomorphic(const Representation& rho, const Representation& tau) {
    return rho.degree == tau.degree && character(rho) == character(tau);
}

bool is_irreducible(const Representation& rho, bool cross_check) {
    const CharacterVector chi = character(rho);
    const bool irreducible = inner_product(chi, chi).is_one();
    if (cross_check && (hom_dim(rho, rho) == 1) != irreducible)
        throw Error("is_irreducible: character and intertwiner tests disagree");
    return irreducible;
}

}  // namespace symcrit
