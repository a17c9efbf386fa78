#include "rdm/catalog.hpp"

#include <numeric>

namespace rdm::catalog {

namespace {

Permutation rotation(std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
    return p;
}

}  // namespace

PermutationGroup cyclic(std::size_t n) { return group_from_permutations(n, {rotation(n)}); }

PermutationGroup klein_four() { return group_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}); }

PermutationGroup symmetric(std::size_t n) {
    if (n < 2) return group_from_permutations(1, {});
    Permutation swap(n);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    return group_from_permutations(n, {rotation(n), swap});
}

PermutationGroup dihedral(std::size_t n) {
    Permutation reflection(n);
    for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<std::uint32_t>((n - i) % n);
    return group_from_permutations(n, {rotation(n), reflection});
}

PermutationGroup quaternion() {
    // Points 0..7 are 1, -1, i, -i, j, -j, k, -k; generators are left
    // multiplication by i and by j.
    return group_from_permutations(8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
}

std::vector<NamedGroup> standard_groups() {
    std::vector<NamedGroup> out;
    for (std::size_t n = 1; n <= 12; ++n) out.push_back({"C" + std::to_string(n), cyclic(n)});
    out.push_back({"V4", klein_four()});
    out.push_back({"S3", symmetric(3)});
    out.push_back({"S4", symmetric(4)});
    out.push_back({"D4", dihedral(4)});
    out.push_back({"Q8", quaternion()});
    return out;
}

}  // namespace rdm::catalog
