#include "twodom/canonical.hpp"

#include <algorithm>

namespace twodom {

std::vector<int> center(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};
    std::vector<int> degree(n), peel;
    peel.reserve(n);
    for (int v = 0; v < n; ++v) {
        degree[v] = t.degree(v);
        if (degree[v] == 1) peel.push_back(v);
    }
    int remaining = n;
    std::vector<int> layer = peel;
    std::vector<int> current;
    while (remaining > 2) {
        std::sort(layer.begin(), layer.end());
        current = layer;
        layer.clear();
        remaining -= static_cast<int>(current.size());
        for (int v : current) {
            for (int w : t.neighbors(v)) {
                if (--degree[w] == 1) layer.push_back(w);
            }
            degree[v] = 0;
        }
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Tree& t, int root) {
    RootedView rv(t, root);
    const auto& order = rv.bfs_order();
    std::vector<std::string> code(t.order());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> parts;
        parts.reserve(rv.children(v).size());
        for (int c : rv.children(v)) parts.push_back(std::move(code[c]));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& p : parts) s += p;
        s += ")";
        code[v] = std::move(s);
    }
    return code[root];
}

std::string canonical_code(const Tree& t) {
    auto c = center(t);
    std::string best = rooted_code(t, c[0]);
    if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));
    return best;
}

}  // namespace twodom
