#pragma once

#include "rdm/finite_group.hpp"

#include <string>
#include <vector>

namespace rdm::catalog {

/// Cyclic group of order n acting on n points, generated by x -> x+1.
PermutationGroup cyclic(std::size_t n);
/// {e, (0 1)(2 3), (0 2)(1 3), (0 3)(1 2)}.
PermutationGroup klein_four();
/// Symmetric group on n letters, generated by an n-cycle and a transposition.
PermutationGroup symmetric(std::size_t n);
/// Dihedral group of order 2n acting on the vertices of an n-gon.
PermutationGroup dihedral(std::size_t n);
/// Quaternion group of order 8 in its left-regular representation.
PermutationGroup quaternion();

struct NamedGroup {
    std::string name;
    PermutationGroup group;
};

/// Cyclic groups of order 1..12, Klein four, S3, S4, D4 and Q8.
std::vector<NamedGroup> standard_groups();

}  // namespace rdm::catalog
