#pragma once

#include <functional>
#include <vector>

#include "twodom/tree.hpp"

namespace twodom {

/// Streams exactly one representative per isomorphism class of free trees of
/// order n, in a deterministic order (first appearance along the rooted
/// level-sequence generation).
void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn);

std::vector<Tree> free_trees(int n);

/// Number of free trees of order n (runs the enumerator).
long long count_free_trees(int n);

}  // namespace twodom
