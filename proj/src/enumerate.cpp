#include "twodom/enumerate.hpp"

#include <string>
#include <unordered_set>

#include "twodom/canonical.hpp"
#include "twodom/errors.hpp"

namespace twodom {

namespace {

Tree tree_from_level_sequence(const std::vector<int>& level) {
    int n = static_cast<int>(level.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::vector<int> last_at_depth(n + 2, -1);
    for (int i = 0; i < n; ++i) {
        last_at_depth[level[i]] = i;
        if (level[i] > 1) edges.emplace_back(last_at_depth[level[i] - 1], i);
    }
    return Tree::from_edges(n, edges);
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn) {
    if (n < 1) return;
    if (n == 1) {
        fn(Tree::from_edges(1, {}));
        return;
    }
    // Beyer-Hedetniemi successor over canonical level sequences of rooted
    // trees, in decreasing lexicographic order from the path to the star.
    // Free-tree classes are deduplicated by center-rooted canonical code.
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    std::unordered_set<std::string> seen;
    while (true) {
        Tree t = tree_from_level_sequence(level);
        if (seen.insert(canonical_code(t)).second) fn(t);
        int p = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (level[i] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
}

std::vector<Tree> free_trees(int n) {
    std::vector<Tree> out;
    for_each_free_tree(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

long long count_free_trees(int n) {
    long long count = 0;
    for_each_free_tree(n, [&](const Tree&) { ++count; });
    return count;
}

}  // namespace twodom
