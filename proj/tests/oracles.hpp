#pragma once

#include <vector>

#include "twodom/patterns.hpp"
#include "twodom/tree.hpp"

namespace twodom::testing {

/// Labeled tree from a Pruefer sequence over ids 0..n-1 (n >= 3).
Tree prufer_decode(int n, const std::vector<int>& seq);

/// Number of isomorphism classes among all n^(n-2) labeled trees, by
/// canonical-code dedup. Feasible for n <= 9.
long long prufer_class_count(int n);

/// All PDI embeddings by exhaustive injective-map search (independent of the
/// production matcher), deduplicated and sorted with the same key.
std::vector<Embedding> brute_embeddings(const Tree& host, const Pattern& p);

}  // namespace twodom::testing
