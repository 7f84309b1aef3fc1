#include "symcrit/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "symcrit/errors.hpp"

namespace symcrit {

namespace {

using MatrixIndex = std::unordered_map<ExactMatrix, int, ExactMatrixHash, ExactMatrixEqual>;

}  // namespace

GroupPtr MatrixGroup::close(std::span<const ExactMatrix> generators, std::size_t cap, std::string name) {
    if (generators.empty()) throw Error("close: at least one generator is required");
    const Eigen::Index dim = generators.front().rows();
    int conductor = 1;
    for (const auto& g : generators) {
        if (g.rows() != g.cols() || g.rows() != dim) throw DimensionMismatch("close: generators must be square and of equal size");
        conductor = std::lcm(conductor, common_conductor(g));
    }
    std::vector<ExactMatrix> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) {
        if (is_zero(det(g))) throw NotInvertible("close: generator is singular");
        gens.push_back(lift(g, conductor));
    }

    std::shared_ptr<MatrixGroup> group(new MatrixGroup());
    group->name_ = std::move(name);
    group->conductor_ = conductor;
    MatrixIndex index;
    group->elements_.push_back(lift(identity<CycNum>(dim), conductor));
    index.emplace(group->elements_.front(), 0);
    group->word_parent_.push_back(-1);
    group->word_gen_.push_back(-1);

    // right[i][k] = index of element(i) * gens[k]
    std::vector<std::vector<int>> right;
    for (std::size_t i = 0; i < group->elements_.size(); ++i) {
        right.emplace_back(gens.size());
        for (std::size_t k = 0; k < gens.size(); ++k) {
            ExactMatrix p = lift(mat_mul(group->elements_[i], gens[k]), conductor);
            auto it = index.find(p);
            if (it == index.end()) {
                if (group->elements_.size() >= cap) throw CapExceeded(cap);
                const int id = static_cast<int>(group->elements_.size());
                it = index.emplace(p, id).first;
                group->elements_.push_back(std::move(p));
                group->word_parent_.push_back(static_cast<int>(i));
                group->word_gen_.push_back(static_cast<int>(k));
            }
            right[i][k] = it->second;
        }
    }
    for (std::size_t k = 0; k < gens.size(); ++k) group->generators_.push_back(right[0][k]);

    const std::size_t n = group->elements_.size();
    group->table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        group->table_[a * n] = static_cast<int>(a);
        // Index order is breadth-first, so the word parent of b is already filled in.
        for (std::size_t b = 1; b < n; ++b) {
            const int via = group->table_[a * n + group->word_parent_[b]];
            group->table_[a * n + b] = right[via][group->word_gen_[b]];
        }
    }
    group->finalize();
    return group;
}

GroupPtr MatrixGroup::from_subset(const MatrixGroup& parent, std::span<const int> members, std::string name) {
    std::shared_ptr<MatrixGroup> group(new MatrixGroup());
    group->name_ = std::move(name);
    group->conductor_ = parent.conductor_;
    const std::size_t n = members.size();
    std::vector<int> local(static_cast<std::size_t>(parent.order()), -1);
    for (std::size_t i = 0; i < n; ++i) {
        local[members[i]] = static_cast<int>(i);
        group->elements_.push_back(parent.element(members[i]));
    }
    if (n == 0 || members[0] != 0) throw Error("from_subset: identity must be the first member");
    group->table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const int l = local[parent.mul(members[a], members[b])];
            if (l < 0) throw Error("from_subset: member set is not closed");
            group->table_[a * n + b] = l;
        }

    // Greedy generators, then a breadth-first word tree over them.
    std::vector<char> reached(n, 0);
    reached[0] = 1;
    auto regenerate = [&] {
        std::fill(reached.begin(), reached.end(), 0);
        reached[0] = 1;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int g : group->generators_) {
                const int y = group->table_[static_cast<std::size_t>(x) * n + g];
                if (!reached[y]) {
                    reached[y] = 1;
                    queue.push_back(y);
                }
            }
        }
    };
    for (std::size_t i = 1; i < n; ++i) {
        if (reached[i]) continue;
        group->generators_.push_back(static_cast<int>(i));
        regenerate();
    }
    group->word_parent_.assign(n, -1);
    group->word_gen_.assign(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < group->generators_.size(); ++k) {
            const int y = group->table_[static_cast<std::size_t>(x) * n + group->generators_[k]];
            if (seen[y]) continue;
            seen[y] = 1;
            group->word_parent_[y] = x;
            group->word_gen_[y] = static_cast<int>(k);
            queue.push_back(y);
        }
    }
    group->finalize();
    return group;
}

void MatrixGroup::finalize() {
    const int n = order();
    inv_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }
    orders_.assign(static_cast<std::size_t>(n), 1);
    for (int a = 0; a < n; ++a) {
        int k = 1;
        for (int x = a; x != 0; x = mul(x, a)) ++k;
        orders_[a] = k;
    }
    class_of_.assign(static_cast<std::size_t>(n), -1);
    classes_.clear();
    for (int x = 0; x < n; ++x) {
        if (class_of_[x] >= 0) continue;
        std::vector<int> cls;
        for (int g = 0; g < n; ++g) {
            const int y = conjugate(x, g);
            if (class_of_[y] < 0) {
                class_of_[y] = static_cast<int>(classes_.size());
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
    // Word-tree traversal order: parents before children.
    std::vector<int> order_list{0};
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i)
        if (word_parent_[i] >= 0) children[word_parent_[i]].push_back(i);
    for (std::size_t k = 0; k < order_list.size(); ++k)
        for (int c : children[order_list[k]]) order_list.push_back(c);
    if (static_cast<int>(order_list.size()) != n) throw Error("word tree does not reach every element");
    word_order_ = std::move(order_list);
}

int MatrixGroup::power(int g, long k) const {
    const int o = element_order(g);
    long e = ((k % o) + o) % o;
    int r = 0;
    while (e-- > 0) r = mul(r, g);
    return r;
}

int MatrixGroup::exponent() const {
    int e = 1;
    for (int o : orders_) e = std::lcm(e, o);
    return e;
}

bool MatrixGroup::is_abelian() const {
    for (int g : generators_)
        for (int h : generators_)
            if (mul(g, h) != mul(h, g)) return false;
    return true;
}

std::optional<int> MatrixGroup::find(const ExactMatrix& m) const {
    if (m.rows() != dim() || m.cols() != dim()) return std::nullopt;
    for (int i = 0; i < order(); ++i)
        if (equal(elements_[i], m)) return i;
    return std::nullopt;
}

bool Subgroup::contains(int parent_index) const {
    return std::binary_search(members.begin(), members.end(), parent_index);
}

std::optional<int> Subgroup::local(int parent_index) const {
    auto it = std::lower_bound(members.begin(), members.end(), parent_index);
    if (it == members.end() || *it != parent_index) return std::nullopt;
    return static_cast<int>(it - members.begin());
}

Subgroup make_subgroup(const GroupPtr& parent, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() != 0) throw Error("subgroup must contain the identity");
    std::vector<char> in(static_cast<std::size_t>(parent->order()), 0);
    for (int m : members) in[m] = 1;
    for (int a : members)
        for (int b : members)
            if (!in[parent->mul(a, b)]) throw Error("subset is not closed under multiplication");
    Subgroup h;
    h.parent = parent;
    h.members = std::move(members);
    if (h.index() == 2) {
        for (int g = 0; g < parent->order(); ++g)
            if (!in[g]) {
                h.coset_rep = g;
                break;
            }
    }
    std::string name = "subgroup of order " + std::to_string(h.order());
    if (!parent->name().empty()) name += " in " + parent->name();
    h.group = MatrixGroup::from_subset(*parent, h.members, std::move(name));
    return h;
}

Subgroup generated_subgroup(const GroupPtr& parent, std::span<const int> generators) {
    std::vector<char> in(static_cast<std::size_t>(parent->order()), 0);
    std::vector<int> members{0};
    in[0] = 1;
    for (std::size_t k = 0; k < members.size(); ++k)
        for (int g : generators) {
            const int y = parent->mul(members[k], g);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
            }
        }
    return make_subgroup(parent, std::move(members));
}

// ---------------------------------------------------------------------------
// Linear characters

bool LinearCharacter::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](const CycNum& v) { return v.is_one(); });
}

int LinearCharacter::order() const {
    const int e = group->exponent();
    for (int k = 1; k <= e; ++k) {
        if (e % k != 0) continue;
        bool ok = true;
        for (int g : group->generators())
            if (!values[g].pow(k).is_one()) {
                ok = false;
                break;
            }
        if (ok) return k;
    }
    throw Error("linear character values are not roots of unity");
}

LinearCharacter LinearCharacter::inverse() const {
    LinearCharacter r{group, {}};
    r.values.reserve(values.size());
    for (const auto& v : values) r.values.push_back(v.conj());
    return r;
}

LinearCharacter LinearCharacter::pow(long k) const {
    LinearCharacter r{group, {}};
    r.values.reserve(values.size());
    for (const auto& v : values) r.values.push_back(v.pow(k));
    return r;
}

std::string LinearCharacter::describe() const {
    if (is_trivial()) return "trivial";
    std::ostringstream os;
    os << "order " << order() << " (generator values:";
    for (int g : group->generators()) os << " " << values[g].str();
    os << ")";
    return os.str();
}

LinearCharacter operator*(const LinearCharacter& a, const LinearCharacter& b) {
    if (a.group != b.group) throw GroupMismatch();
    LinearCharacter r{a.group, {}};
    r.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] * b.values[i]);
    return r;
}

bool operator==(const LinearCharacter& a, const LinearCharacter& b) {
    if (a.group != b.group) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!(a.values[i] == b.values[i])) return false;
    return true;
}

LinearCharacter trivial_character(const GroupPtr& g) {
    return LinearCharacter{g, std::vector<CycNum>(static_cast<std::size_t>(g->order()), CycNum(1))};
}

std::vector<LinearCharacter> linear_characters(const GroupPtr& g) {
    const auto& gens = g->generators();
    const int n = g->order();
    std::vector<int> gen_orders;
    int big_l = 1;
    for (int x : gens) {
        gen_orders.push_back(g->element_order(x));
        big_l = std::lcm(big_l, gen_orders.back());
    }
    const auto& order_list = g->word_order();
    std::vector<int> assign(gens.size(), 0);
    std::vector<int> gen_exp(gens.size(), 0);
    std::vector<int> val(static_cast<std::size_t>(n), 0);
    std::vector<LinearCharacter> out;
    while (true) {
        for (std::size_t i = 0; i < gens.size(); ++i) gen_exp[i] = assign[i] * (big_l / gen_orders[i]);
        for (int x : order_list) {
            if (x == 0) continue;
            val[x] = (val[g->word_parent(x)] + gen_exp[g->word_generator(x)]) % big_l;
        }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b)
                if (val[g->mul(a, b)] != (val[a] + val[b]) % big_l) {
                    ok = false;
                    break;
                }
        if (ok) {
            int common = big_l;
            for (int v : val) common = std::gcd(common, v);
            const int ord = big_l / common;
            LinearCharacter chi{g, {}};
            chi.values.reserve(static_cast<std::size_t>(n));
            for (int v : val) chi.values.push_back(ord == 1 ? CycNum(1) : root_of_unity(ord, v / common));
            out.push_back(std::move(chi));
        }
        // Odometer over generator exponents; the last generator varies fastest.
        std::size_t pos = gens.size();
        while (pos > 0) {
            --pos;
            if (++assign[pos] < gen_orders[pos]) break;
            assign[pos] = 0;
            if (pos == 0) return out;
        }
        if (gens.empty()) return out;
    }
}

Subgroup kernel_subgroup(const LinearCharacter& chi) {
    std::vector<int> members;
    for (int g = 0; g < chi.group->order(); ++g)
        if (chi(g).is_one()) members.push_back(g);
    return make_subgroup(chi.group, std::move(members));
}

// ---------------------------------------------------------------------------
// Binary polyhedral groups

std::string to_string(Family f) {
    switch (f) {
        case Family::dihedral:
            return "dihedral";
        case Family::tetrahedral:
            return "tetrahedral";
        case Family::octahedral:
            return "octahedral";
        case Family::icosahedral:
            return "icosahedral";
    }
    return "?";
}

std::string to_string(const PolyhedralKind& k) {
    if (k.family == Family::dihedral) return "dihedral:" + std::to_string(k.n);
    return to_string(k.family);
}

ExactMatrix quaternion(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
    const CycNum i = root_of_unity(4, 1);
    ExactMatrix m(2, 2);
    m << a + b * i, c + d * i, -c + d * i, a - b * i;
    return m;
}

namespace {

GroupPtr checked_close(std::vector<ExactMatrix> gens, std::size_t cap, const PolyhedralKind& kind, std::string name) {
    auto g = MatrixGroup::close(gens, cap, std::move(name));
    if (g->order() != expected_order(kind))
        throw ConstructionFailure("binary " + to_string(kind) + " closed to order " + std::to_string(g->order()) +
                                  ", expected " + std::to_string(expected_order(kind)));
    return g;
}

}  // namespace

int expected_order(const PolyhedralKind& kind) {
    switch (kind.family) {
        case Family::dihedral:
            return 4 * kind.n;
        case Family::tetrahedral:
            return 24;
        case Family::octahedral:
            return 48;
        case Family::icosahedral:
            return 120;
    }
    return 0;
}

GroupPtr binary_dihedral(int n, std::size_t cap) {
    if (n < 2) throw PreconditionFailed("binary dihedral group needs n >= 2");
    ExactMatrix rot = diag({root_of_unity(2 * n, 1), root_of_unity(2 * n, -1)});
    ExactMatrix flip(2, 2);
    flip << CycNum(0), CycNum(1), CycNum(-1), CycNum(0);
    return checked_close({rot, flip}, cap, {Family::dihedral, n}, "binary dihedral 2D" + std::to_string(n));
}

GroupPtr binary_tetrahedral(std::size_t cap) {
    const CycNum half = BigRational(1, 2);
    return checked_close({quaternion(0, 1, 0, 0), quaternion(half, half, half, half)}, cap, {Family::tetrahedral, 0},
                         "binary tetrahedral 2T");
}

GroupPtr binary_octahedral(std::size_t cap) {
    const CycNum half = BigRational(1, 2);
    const CycNum r = sqrt2() * half;  // 1/sqrt(2)
    return checked_close({quaternion(0, 1, 0, 0), quaternion(half, half, half, half), quaternion(r, r, 0, 0)}, cap,
                         {Family::octahedral, 0}, "binary octahedral 2O");
}

GroupPtr binary_icosahedral(std::size_t cap) {
    const CycNum half = BigRational(1, 2);
    const CycNum golden = (CycNum(1) + sqrt5()) * half;
    const CycNum golden_inv = golden - CycNum(1);
    return checked_close({quaternion(half, half, half, half), quaternion(golden_inv * half, golden * half, half, 0)}, cap,
                         {Family::icosahedral, 0}, "binary icosahedral 2I");
}

GroupPtr binary_polyhedral(const PolyhedralKind& kind, std::size_t cap) {
    switch (kind.family) {
        case Family::dihedral:
            return binary_dihedral(kind.n, cap);
        case Family::tetrahedral:
            return binary_tetrahedral(cap);
        case Family::octahedral:
            return binary_octahedral(cap);
        case Family::icosahedral:
            return binary_icosahedral(cap);
    }
    throw Error("unknown polyhedral family");
}

// ---------------------------------------------------------------------------
// Projective image

std::string to_string(PolyhedralType t) {
    switch (t) {
        case PolyhedralType::cyclic:
            return "cyclic";
        case PolyhedralType::dihedral:
            return "dihedral";
        case PolyhedralType::tetrahedral:
            return "tetrahedral";
        case PolyhedralType::octahedral:
            return "octahedral";
        case PolyhedralType::icosahedral:
            return "icosahedral";
    }
    return "?";
}

namespace {

bool is_scalar(const ExactMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j && !is_zero(m(i, j))) return false;
            if (i == j && !(m(i, i) == m(0, 0))) return false;
        }
    return true;
}

}  // namespace

ProjectiveImage projective_image(const MatrixGroup& g) {
    if (g.dim() != 2) throw PreconditionFailed("projective_classify needs a 2-dimensional group");
    const int n = g.order();
    std::vector<int> scalars;
    for (int i = 0; i < n; ++i)
        if (is_scalar(g.element(i))) scalars.push_back(i);
    std::vector<char> is_central_scalar(static_cast<std::size_t>(n), 0);
    for (int z : scalars) is_central_scalar[z] = 1;

    std::vector<int> coset(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset[x] >= 0) continue;
        for (int z : scalars) coset[g.mul(x, z)] = static_cast<int>(reps.size());
        reps.push_back(x);
    }
    ProjectiveImage img;
    img.order = static_cast<int>(reps.size());
    for (int r : reps) {
        int k = 1;
        for (int x = r; !is_central_scalar[x]; x = g.mul(x, r)) ++k;
        ++img.order_stats[k];
    }
    img.abelian = true;
    for (int a : reps)
        for (int b : reps)
            if (coset[g.mul(a, b)] != coset[g.mul(b, a)]) img.abelian = false;

    const int order = img.order;
    const auto& stats = img.order_stats;
    auto has_order = [&](int k) { return stats.count(k) > 0; };
    if (order == 1) {
        img.type = PolyhedralType::cyclic;
        return img;
    }
    if (img.abelian) {
        if (has_order(order)) {
            img.type = PolyhedralType::cyclic;
            return img;
        }
        if (order == 4 && stats.at(2) == 3) {
            img.type = PolyhedralType::dihedral;
            img.klein_four = true;
            return img;
        }
        throw Unclassifiable("abelian projective image of order " + std::to_string(order) + " is not cyclic or Klein four");
    }
    if (order % 2 == 0 && has_order(order / 2)) {
        img.type = PolyhedralType::dihedral;
        return img;
    }
    const std::map<int, int> a4{{1, 1}, {2, 3}, {3, 8}};
    const std::map<int, int> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    const std::map<int, int> a5{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
    if (order == 12 && stats == a4) {
        img.type = PolyhedralType::tetrahedral;
        return img;
    }
    if (order == 24 && has_order(4) && stats == s4) {
        img.type = PolyhedralType::octahedral;
        return img;
    }
    if (order == 60 && stats == a5) {
        img.type = PolyhedralType::icosahedral;
        return img;
    }
    throw Unclassifiable("projective image of order " + std::to_string(order) + " matches no polyhedral group");
}

}  // namespace symcrit
