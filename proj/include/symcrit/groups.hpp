#ifndef SYMCRIT_GROUPS_HPP
#define SYMCRIT_GROUPS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcrit/cyclotomic.hpp"
#include "symcrit/linalg.hpp"

namespace symcrit {

class MatrixGroup;
using GroupPtr = std::shared_ptr<const MatrixGroup>;

/// Largest in-scope group is 240 elements; the cap leaves headroom.
inline constexpr std::size_t kDefaultClosureCap = 512;

/// A finite group of invertible exact matrices with its multiplication table.
///
/// Element 0 is the identity. Elements are numbered in breadth-first order
/// from the generators, and every non-identity element i records a word edge
/// element(i) = element(word_parent(i)) * element(generators()[word_generator(i)]).
/// All matrices share one conductor, so canonical comparison is structural.
class MatrixGroup {
public:
    /// Breadth-first closure of `generators`. Throws CapExceeded when the group
    /// outgrows `cap` and NotInvertible for a singular generator.
    static GroupPtr close(std::span<const ExactMatrix> generators, std::size_t cap = kDefaultClosureCap,
                          std::string name = {});

    int order() const { return static_cast<int>(elements_.size()); }
    Eigen::Index dim() const { return elements_.front().rows(); }
    int conductor() const { return conductor_; }
    const std::string& name() const { return name_; }

    const ExactMatrix& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<ExactMatrix>& elements() const { return elements_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * elements_.size() + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int conjugate(int g, int by) const { return mul(mul(by, g), inv(by)); }
    int power(int g, long k) const;
    const std::vector<int>& generators() const { return generators_; }
    int word_parent(int i) const { return word_parent_[static_cast<std::size_t>(i)]; }
    int word_generator(int i) const { return word_gen_[static_cast<std::size_t>(i)]; }
    /// Elements ordered so every word parent precedes its children.
    const std::vector<int>& word_order() const { return word_order_; }

    int element_order(int i) const { return orders_[static_cast<std::size_t>(i)]; }
    /// Least common multiple of the element orders.
    int exponent() const;
    bool is_abelian() const;

    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int i) const { return class_of_[static_cast<std::size_t>(i)]; }

    std::optional<int> find(const ExactMatrix& m) const;

    /// Standalone group on a closed subset of `parent` (element i of the result
    /// is parent element members[i]); generators are chosen greedily.
    static GroupPtr from_subset(const MatrixGroup& parent, std::span<const int> members, std::string name = {});

private:
    MatrixGroup() = default;
    void finalize();

    std::string name_;
    int conductor_ = 1;
    std::vector<ExactMatrix> elements_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<int> generators_;
    std::vector<int> word_parent_;
    std::vector<int> word_gen_;
    std::vector<int> word_order_;
    std::vector<int> orders_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

/// A subgroup H of a parent group, with a fixed coset representative c when
/// [G:H] = 2 (then G = H u cH).
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  ///< sorted parent indices; members[0] = 0
    std::optional<int> coset_rep;
    GroupPtr group;  ///< H as a standalone group; element i is parent element members[i]

    int order() const { return static_cast<int>(members.size()); }
    int index() const { return parent->order() / order(); }
    bool contains(int parent_index) const;
    /// Index inside `group` of a parent element, if it lies in H.
    std::optional<int> local(int parent_index) const;
};

/// Builds a Subgroup from a member list; throws if the set is not closed.
Subgroup make_subgroup(const GroupPtr& parent, std::vector<int> members);
Subgroup generated_subgroup(const GroupPtr& parent, std::span<const int> generators);

/// A homomorphism from a group into the roots of unity.
struct LinearCharacter {
    GroupPtr group;
    std::vector<CycNum> values;

    const CycNum& operator()(int g) const { return values[static_cast<std::size_t>(g)]; }
    bool is_trivial() const;
    /// Order in the character group.
    int order() const;
    LinearCharacter inverse() const;
    LinearCharacter pow(long k) const;
    std::string describe() const;

    friend LinearCharacter operator*(const LinearCharacter& a, const LinearCharacter& b);
    friend bool operator==(const LinearCharacter& a, const LinearCharacter& b);
};

LinearCharacter trivial_character(const GroupPtr& g);

/// Every homomorphism G -> roots of unity, found by assigning a root of unity
/// of order dividing ord(g_i) to each generator and keeping the assignments
/// that are multiplicative over the full table. The trivial character comes
/// first; the rest follow lexicographic order of generator exponents.
std::vector<LinearCharacter> linear_characters(const GroupPtr& g);
inline std::vector<LinearCharacter> linear_characters(const Subgroup& h) { return linear_characters(h.group); }

Subgroup kernel_subgroup(const LinearCharacter& chi);

/// Binary polyhedral groups as explicit 2x2 matrices over cyclotomic fields.
enum class Family { dihedral, tetrahedral, octahedral, icosahedral };

struct PolyhedralKind {
    Family family = Family::dihedral;
    int n = 2;  ///< only meaningful for the dihedral family
};

std::string to_string(Family f);
std::string to_string(const PolyhedralKind& k);

/// Quaternion a + bi + cj + dk as [[a+bi, c+di], [-c+di, a-bi]].
ExactMatrix quaternion(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d);

GroupPtr binary_dihedral(int n, std::size_t cap = kDefaultClosureCap);
GroupPtr binary_tetrahedral(std::size_t cap = kDefaultClosureCap);
GroupPtr binary_octahedral(std::size_t cap = kDefaultClosureCap);
GroupPtr binary_icosahedral(std::size_t cap = kDefaultClosureCap);
GroupPtr binary_polyhedral(const PolyhedralKind& kind, std::size_t cap = kDefaultClosureCap);

/// Expected order of the binary group: 4n, 24, 48, 120.
int expected_order(const PolyhedralKind& kind);

enum class PolyhedralType { cyclic, dihedral, tetrahedral, octahedral, icosahedral };
std::string to_string(PolyhedralType t);

struct ProjectiveImage {
    PolyhedralType type = PolyhedralType::cyclic;
    int order = 1;                  ///< |J| = |G / scalars|
    std::map<int, int> order_stats;  ///< element order -> count in J
    bool abelian = true;
    bool klein_four = false;  ///< J = V4, reported as dihedral
};

/// Classifies J = G / (scalar matrices in G) for a 2-dimensional group.
ProjectiveImage projective_image(const MatrixGroup& g);
inline PolyhedralType projective_classify(const MatrixGroup& g) { return projective_image(g).type; }

}  // namespace symcrit

#endif  // SYMCRIT_GROUPS_HPP
