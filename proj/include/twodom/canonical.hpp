#pragma once

#include <string>
#include <vector>

#include "twodom/tree.hpp"

namespace twodom {

/// Center of the tree: one or two adjacent vertices, ascending.
std::vector<int> center(const Tree& t);

/// AHU code rooted at the center; bicentered trees take the lexicographic
/// minimum of the two rooted codes. Equal codes iff isomorphic.
std::string canonical_code(const Tree& t);

/// AHU code of the tree rooted at the given vertex.
std::string rooted_code(const Tree& t, int root);

}  // namespace twodom
