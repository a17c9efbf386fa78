#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rdm {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

/// Default bound on the order of groups built from permutation generators.
inline constexpr std::size_t kDefaultOrderCap = 20000;

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..order-1. Immutable after construction.
class FiniteGroup {
public:
    /// Takes ownership of a row-major order x order table. Validates shape,
    /// identity and inverses; full associativity is left to check_axioms().
    FiniteGroup(std::size_t order, std::vector<Element> mult, Element identity,
                std::vector<std::string> names = {});

    static FiniteGroup trivial();

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return identity_; }
    Element mul(Element g, Element h) const { return mult_[g * order_ + h]; }
    Element inv(Element g) const { return inv_[g]; }
    /// g^e for any integer exponent.
    Element pow(Element g, long long e) const;
    Element element_order(Element g) const;
    bool commute(Element g, Element h) const { return mul(g, h) == mul(h, g); }

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::string name(Element g) const;

    /// Exhaustive O(order^3) check of associativity, identity and inverses.
    bool check_axioms() const;

private:
    std::size_t order_;
    std::vector<Element> mult_;
    std::vector<Element> inv_;
    Element identity_;
    std::vector<std::string> names_;
};

/// Closure of a set of permutations, with the permutation behind each index.
struct PermutationGroup {
    FiniteGroup group;
    std::vector<Permutation> elements;
    std::vector<Element> generators;

    /// Index of a permutation in the group, if it is an element.
    std::optional<Element> index_of(const Permutation& p) const;
};

/// Closes the generators under composition ((gh)(x) = g(h(x))). Elements are
/// sorted by image tuple, so element 0 is the identity.
PermutationGroup group_from_permutations(std::size_t degree,
                                         const std::vector<Permutation>& generators,
                                         std::size_t order_cap = kDefaultOrderCap);

/// A homomorphism G -> G stored as its full image table.
class GroupEndomorphism {
public:
    GroupEndomorphism() = default;
    /// Validates the homomorphism property over all pairs.
    GroupEndomorphism(const FiniteGroup& g, std::vector<Element> image);

    static GroupEndomorphism identity(const FiniteGroup& g);
    /// x -> gamma x gamma^-1.
    static GroupEndomorphism inner(const FiniteGroup& g, Element gamma);
    /// Every element to the identity.
    static GroupEndomorphism trivial(const FiniteGroup& g);

    Element operator()(Element x) const { return image_[x]; }
    const std::vector<Element>& table() const noexcept { return image_; }
    std::size_t size() const noexcept { return image_.size(); }
    bool is_bijective() const;

    friend bool operator==(const GroupEndomorphism&, const GroupEndomorphism&) = default;

private:
    struct Unchecked {};
    GroupEndomorphism(std::vector<Element> image, Unchecked) : image_(std::move(image)) {}
    friend GroupEndomorphism compose(const GroupEndomorphism&, const GroupEndomorphism&);
    friend GroupEndomorphism endo_from_generator_images(const FiniteGroup&,
                                                        const std::vector<Element>&,
                                                        const std::vector<Element>&);

    std::vector<Element> image_;
};

/// Extends generator images along the Cayley graph; throws NotAHomomorphism on
/// a conflict and DoesNotGenerate if the generators miss an element.
GroupEndomorphism endo_from_generator_images(const FiniteGroup& g,
                                             const std::vector<Element>& generators,
                                             const std::vector<Element>& images);

/// (outer o inner)(x) = outer(inner(x)).
GroupEndomorphism compose(const GroupEndomorphism& outer, const GroupEndomorphism& inner);

GroupEndomorphism iterate_endo(const GroupEndomorphism& phi, unsigned long n);

struct ConjugacyPartition {
    std::vector<std::size_t> class_of;
    std::vector<Element> representatives;

    std::size_t count() const noexcept { return representatives.size(); }
    std::vector<std::size_t> class_sizes() const;
};

ConjugacyPartition ordinary_conjugacy_classes(const FiniteGroup& g);

/// Classes of the relation a' = gamma a phi(gamma)^-1, by exhaustive search
/// over gamma. The class count is the Reidemeister number R(phi).
ConjugacyPartition phi_conjugacy_classes(const FiniteGroup& g, const GroupEndomorphism& phi);

struct EventualImage {
    FiniteGroup subgroup;
    GroupEndomorphism restriction;
    /// subgroup index -> index in the ambient group
    std::vector<Element> embedding;
};

/// Iterates phi until the image subgroup stabilizes and returns it as a
/// standalone group with the restricted automorphism.
EventualImage eventual_image(const FiniteGroup& g, const GroupEndomorphism& phi);

/// Every endomorphism determined by assigning images to the given generators.
std::vector<GroupEndomorphism> all_endomorphisms(const FiniteGroup& g,
                                                 const std::vector<Element>& generators);

/// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
std::string cycle_string(const Permutation& p);

}  // namespace rdm
