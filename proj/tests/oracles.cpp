#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "twodom/canonical.hpp"

namespace twodom::testing {

Tree prufer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<int> rest = seq;
    for (int v : rest) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Tree::from_edges(n, edges);
}

long long prufer_class_count(int n) {
    if (n <= 2) return 1;
    std::set<std::string> codes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        codes.insert(canonical_code(prufer_decode(n, seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return static_cast<long long>(codes.size());
}

std::vector<Embedding> brute_embeddings(const Tree& host, const Pattern& p) {
    int k = p.shape.order();
    std::vector<Embedding> out;
    if (k > host.order()) return out;
    std::vector<int> map(k, -1);
    std::vector<char> used(host.order(), 0);
    std::set<std::vector<int>> dedup;

    auto valid_complete = [&]() {
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (p.shape.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
        for (int v = 0; v < k; ++v)
            if (v != p.white && host.degree(map[v]) != p.shape.degree(v)) return false;
        return true;
    };

    std::function<void(int)> place = [&](int v) {
        if (v == k) {
            if (!valid_complete()) return;
            std::vector<int> key(map.begin(), map.end());
            std::sort(key.begin(), key.end());
            for (auto& [name, vertex] : p.roles) key.push_back(map[vertex]);
            for (int vertex : p.added) key.push_back(map[vertex]);
            if (dedup.insert(key).second) out.push_back({p.id, map});
            return;
        }
        for (int cand = 0; cand < host.order(); ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int w = 0; w < v; ++w) {
                if (p.shape.adjacent(v, w) && !host.adjacent(cand, map[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            place(v + 1);
            used[cand] = 0;
            map[v] = -1;
        }
    };
    place(0);
    std::sort(out.begin(), out.end(),
              [](const Embedding& a, const Embedding& b) { return a.map < b.map; });
    return out;
}

}  // namespace twodom::testing
