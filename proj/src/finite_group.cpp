#include "rdm/finite_group.hpp"

#include "rdm/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace rdm {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

Permutation compose_perm(const Permutation& g, const Permutation& h) {
    Permutation out(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
    return out;
}

void require_permutation(const Permutation& p, std::size_t degree) {
    if (p.size() != degree)
        throw NotAPermutation("permutation has length " + std::to_string(p.size()) +
                              ", expected degree " + std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (auto x : p) {
        if (x >= degree || seen[x])
            throw NotAPermutation("not a bijection of {0.." + std::to_string(degree - 1) + "}: " +
                                  cycle_string(p));
        seen[x] = true;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> mult, Element identity,
                         std::vector<std::string> names)
    : order_(order), mult_(std::move(mult)), inv_(order, kUnset), identity_(identity),
      names_(std::move(names)) {
    if (order_ == 0) throw ValidationError("group of order 0");
    if (mult_.size() != order_ * order_) throw ValidationError("multiplication table has wrong size");
    if (identity_ >= order_) throw ValidationError("identity index out of range");
    if (!names_.empty() && names_.size() != order_) throw ValidationError("names table has wrong size");
    for (auto x : mult_)
        if (x >= order_) throw ValidationError("multiplication table entry out of range");
    for (Element g = 0; g < order_; ++g) {
        if (mul(identity_, g) != g || mul(g, identity_) != g)
            throw ValidationError("identity index is not a two-sided identity");
        for (Element h = 0; h < order_; ++h)
            if (mul(g, h) == identity_) {
                inv_[g] = h;
                break;
            }
        if (inv_[g] == kUnset) throw ValidationError("element " + std::to_string(g) + " has no inverse");
    }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, 0, {"()"}); }

Element FiniteGroup::pow(Element g, long long e) const {
    if (e < 0) {
        g = inv(g);
        e = -e;
    }
    Element result = identity_;
    Element base = g;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Element FiniteGroup::element_order(Element g) const {
    Element n = 1;
    for (Element x = g; x != identity_; x = mul(x, g)) ++n;
    return n;
}

std::string FiniteGroup::name(Element g) const {
    return names_.empty() ? std::to_string(g) : names_[g];
}

bool FiniteGroup::check_axioms() const {
    for (Element a = 0; a < order_; ++a) {
        if (mul(a, identity_) != a || mul(identity_, a) != a) return false;
        if (mul(a, inv_[a]) != identity_ || mul(inv_[a], a) != identity_) return false;
        for (Element b = 0; b < order_; ++b) {
            const Element ab = mul(a, b);
            for (Element c = 0; c < order_; ++c)
                if (mul(ab, c) != mul(a, mul(b, c))) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Permutation groups

std::string cycle_string(const Permutation& p) {
    std::ostringstream os;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == start) continue;
        any = true;
        os << '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            os << (first ? "" : " ") << x;
            first = false;
            x = p[x];
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

std::optional<Element> PermutationGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return std::nullopt;
    return static_cast<Element>(it - elements.begin());
}

PermutationGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                         std::size_t order_cap) {
    if (degree == 0) throw NotAPermutation("degree must be positive");
    for (const auto& g : generators) require_permutation(g, degree);

    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::map<Permutation, bool> seen{{id, true}};
    std::deque<Permutation> queue{id};
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation y = compose_perm(x, g);
            if (seen.emplace(y, true).second) {
                if (seen.size() > order_cap)
                    throw ClosureTooLarge("permutation closure exceeds order cap " + std::to_string(order_cap));
                queue.push_back(std::move(y));
            }
        }
    }

    std::vector<Permutation> elements;
    elements.reserve(seen.size());
    for (auto& [p, _] : seen) elements.push_back(p);  // std::map keeps image-tuple order

    const std::size_t n = elements.size();
    std::map<Permutation, Element> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<Element>(i));
    std::vector<Element> mult(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = index.at(compose_perm(elements[i], elements[j]));

    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& p : elements) names.push_back(cycle_string(p));

    PermutationGroup out{FiniteGroup(n, std::move(mult), 0, std::move(names)), std::move(elements), {}};
    for (const auto& g : generators) out.generators.push_back(*out.index_of(g));
    return out;
}

// ---------------------------------------------------------------------------
// Endomorphisms

GroupEndomorphism::GroupEndomorphism(const FiniteGroup& g, std::vector<Element> image)
    : image_(std::move(image)) {
    if (image_.size() != g.order()) throw NotAHomomorphism("image table has wrong size");
    for (auto x : image_)
        if (x >= g.order()) throw NotAHomomorphism("image table entry out of range");
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            if (image_[g.mul(a, b)] != g.mul(image_[a], image_[b]))
                throw NotAHomomorphism("phi(" + g.name(a) + " * " + g.name(b) +
                                       ") != phi(" + g.name(a) + ") * phi(" + g.name(b) + ")");
}

GroupEndomorphism GroupEndomorphism::identity(const FiniteGroup& g) {
    std::vector<Element> t(g.order());
    std::iota(t.begin(), t.end(), 0u);
    return GroupEndomorphism(std::move(t), Unchecked{});
}

GroupEndomorphism GroupEndomorphism::inner(const FiniteGroup& g, Element gamma) {
    std::vector<Element> t(g.order());
    for (Element x = 0; x < g.order(); ++x) t[x] = g.mul(g.mul(gamma, x), g.inv(gamma));
    return GroupEndomorphism(std::move(t), Unchecked{});
}

GroupEndomorphism GroupEndomorphism::trivial(const FiniteGroup& g) {
    return GroupEndomorphism(std::vector<Element>(g.order(), g.identity()), Unchecked{});
}

bool GroupEndomorphism::is_bijective() const {
    std::vector<bool> hit(image_.size(), false);
    for (auto x : image_) hit[x] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroupEndomorphism endo_from_generator_images(const FiniteGroup& g, const std::vector<Element>& generators,
                                             const std::vector<Element>& images) {
    if (generators.size() != images.size())
        throw NotAHomomorphism("got " + std::to_string(images.size()) + " images for " +
                               std::to_string(generators.size()) + " generators");
    for (auto x : generators)
        if (x >= g.order()) throw DoesNotGenerate("generator index out of range");
    for (auto x : images)
        if (x >= g.order()) throw NotAHomomorphism("image index out of range");

    // Breadth-first over the Cayley graph: every edge x -> x*s must satisfy
    // phi(x*s) = phi(x)*phi(s), which forces the homomorphism property.
    std::vector<Element> table(g.order(), kUnset);
    table[g.identity()] = g.identity();
    std::deque<Element> queue{g.identity()};
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const Element y = g.mul(x, generators[i]);
            const Element want = g.mul(table[x], images[i]);
            if (table[y] == kUnset) {
                table[y] = want;
                queue.push_back(y);
            } else if (table[y] != want) {
                throw NotAHomomorphism("two words for " + g.name(y) + " receive images " +
                                       g.name(table[y]) + " and " + g.name(want));
            }
        }
    }
    for (Element x = 0; x < g.order(); ++x)
        if (table[x] == kUnset) throw DoesNotGenerate("generators do not reach " + g.name(x));
    return GroupEndomorphism(std::move(table), GroupEndomorphism::Unchecked{});
}

GroupEndomorphism compose(const GroupEndomorphism& outer, const GroupEndomorphism& inner) {
    std::vector<Element> t(inner.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = outer(inner(static_cast<Element>(x)));
    return GroupEndomorphism(std::move(t), GroupEndomorphism::Unchecked{});
}

GroupEndomorphism iterate_endo(const GroupEndomorphism& phi, unsigned long n) {
    if (n == 0) throw BadIndex("iterate_endo requires n >= 1");
    GroupEndomorphism result = phi;
    for (unsigned long i = 1; i < n; ++i) result = compose(phi, result);
    return result;
}

std::vector<GroupEndomorphism> all_endomorphisms(const FiniteGroup& g, const std::vector<Element>& generators) {
    std::vector<GroupEndomorphism> out;
    std::vector<Element> images(generators.size(), 0);
    for (;;) {
        try {
            out.push_back(endo_from_generator_images(g, generators, images));
        } catch (const NotAHomomorphism&) {
        }
        std::size_t i = 0;
        while (i < images.size() && ++images[i] == g.order()) images[i++] = 0;
        if (i == images.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conjugacy

std::vector<std::size_t> ConjugacyPartition::class_sizes() const {
    std::vector<std::size_t> sizes(representatives.size(), 0);
    for (auto c : class_of) ++sizes[c];
    return sizes;
}

namespace {

// Orbits of the action gamma . a = gamma a twist(gamma)^-1.
ConjugacyPartition twisted_orbits(const FiniteGroup& g, const std::vector<Element>& twist) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    ConjugacyPartition part{std::vector<std::size_t>(g.order(), kNone), {}};
    for (Element a = 0; a < g.order(); ++a) {
        if (part.class_of[a] != kNone) continue;
        const std::size_t id = part.representatives.size();
        part.representatives.push_back(a);
        for (Element gamma = 0; gamma < g.order(); ++gamma)
            part.class_of[g.mul(g.mul(gamma, a), g.inv(twist[gamma]))] = id;
    }
    return part;
}

}  // namespace

ConjugacyPartition ordinary_conjugacy_classes(const FiniteGroup& g) {
    std::vector<Element> id(g.order());
    std::iota(id.begin(), id.end(), 0u);
    return twisted_orbits(g, id);
}

ConjugacyPartition phi_conjugacy_classes(const FiniteGroup& g, const GroupEndomorphism& phi) {
    if (phi.size() != g.order()) throw ValidationError("endomorphism does not match group order");
    return twisted_orbits(g, phi.table());
}

EventualImage eventual_image(const FiniteGroup& g, const GroupEndomorphism& phi) {
    std::vector<bool> in(g.order(), true);
    std::size_t size = g.order();
    for (;;) {
        std::vector<bool> next(g.order(), false);
        for (Element x = 0; x < g.order(); ++x)
            if (in[x]) next[phi(x)] = true;
        const auto next_size = static_cast<std::size_t>(std::count(next.begin(), next.end(), true));
        in = std::move(next);
        if (next_size == size) break;
        size = next_size;
    }

    std::vector<Element> embedding;
    std::vector<Element> local(g.order(), kUnset);
    for (Element x = 0; x < g.order(); ++x)
        if (in[x]) {
            local[x] = static_cast<Element>(embedding.size());
            embedding.push_back(x);
        }
    const std::size_t n = embedding.size();
    std::vector<Element> mult(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = local[g.mul(embedding[i], embedding[j])];
    std::vector<std::string> names;
    if (!g.names().empty())
        for (auto x : embedding) names.push_back(g.name(x));
    FiniteGroup h(n, std::move(mult), local[g.identity()], std::move(names));

    std::vector<Element> restricted(n);
    for (std::size_t i = 0; i < n; ++i) restricted[i] = local[phi(embedding[i])];
    GroupEndomorphism phi_h(h, std::move(restricted));
    return EventualImage{std::move(h), std::move(phi_h), std::move(embedding)};
}

}  // namespace rdm
