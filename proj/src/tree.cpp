#include "twodom/tree.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "twodom/errors.hpp"

namespace twodom {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw NotATree("order must be at least 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw NotATree("edge count " + std::to_string(edges.size()) + " != n-1");
    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw NotATree("vertex id out of range");
        if (u == v) throw NotATree("self-loop");
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    for (auto& list : t.adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw NotATree("duplicate edge");
    }
    // n-1 edges, no duplicates: connectivity from 0 implies acyclicity.
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : t.adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != n) throw NotATree("disconnected");
    return t;
}

bool Tree::adjacent(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

RootedView::RootedView(const Tree& tree, int root) : tree_(&tree), root_(root) {
    int n = tree.order();
    parent_.assign(n, -1);
    children_.assign(n, {});
    depth_.assign(n, 0);
    order_.reserve(n);
    std::deque<int> queue{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (int w : tree.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                parent_[w] = v;
                depth_[w] = depth_[v] + 1;
                children_[v].push_back(w);
                queue.push_back(w);
            }
        }
    }
}

std::optional<int> RootedView::parent(int v) const {
    if (parent_[v] < 0) return std::nullopt;
    return parent_[v];
}

VertexSet boundary(const Tree& t, const VertexSet& u) {
    VertexSet out;
    for (int v : u) {
        for (int w : t.neighbors(v)) {
            if (!u.contains(w)) {
                out.insert(v);
                break;
            }
        }
    }
    return out;
}

int eccentric_leaf(const RootedView& rv, int w) {
    // BFS within the maximal subtree at w.
    int best = w, best_dist = 0;
    std::deque<std::pair<int, int>> queue{{w, 0}};
    while (!queue.empty()) {
        auto [v, d] = queue.front();
        queue.pop_front();
        if (d > best_dist || (d == best_dist && v < best)) {
            best = v;
            best_dist = d;
        }
        for (int c : rv.children(v)) queue.emplace_back(c, d + 1);
    }
    return best;
}

Tree remove_vertices(const Tree& t, const std::vector<int>& removed,
                     std::optional<std::pair<int, int>> restore_edge,
                     std::vector<int>* old_to_new) {
    int n = t.order();
    std::vector<char> gone(n, 0);
    for (int v : removed) gone[v] = 1;
    std::vector<int> map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) map[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges())
        if (!gone[u] && !gone[v]) edges.emplace_back(map[u], map[v]);
    if (restore_edge) edges.emplace_back(map[restore_edge->first], map[restore_edge->second]);
    if (old_to_new) *old_to_new = map;
    return Tree::from_edges(next, edges);
}

Tree read_edge_list(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw NotATree("edge list: missing order");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    return Tree::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Tree& t) {
    out << t.order() << "\n";
    for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
}

}  // namespace twodom
