#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace twodom {

/// Sorted set of vertex ids of some host tree.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_;  // sorted, unique
};

/// Immutable tree on dense vertex ids 0..n-1 with sorted adjacency lists.
class Tree {
public:
    /// Validates connectivity, acyclicity, id range; throws NotATree.
    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    bool is_leaf(int v) const { return degree(v) == 1; }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Tree&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Rooted orientation of a tree: parents and children per BFS from the root.
class RootedView {
public:
    RootedView(const Tree& tree, int root);

    const Tree& tree() const { return *tree_; }
    int root() const { return root_; }
    std::optional<int> parent(int v) const;
    const std::vector<int>& children(int v) const { return children_[v]; }
    int depth(int v) const { return depth_[v]; }
    /// Vertices in BFS order from the root.
    const std::vector<int>& bfs_order() const { return order_; }

private:
    const Tree* tree_;
    int root_;
    std::vector<int> parent_;  // -1 at root
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    std::vector<int> order_;
};

/// Members of u having a neighbor outside u.
VertexSet boundary(const Tree& t, const VertexSet& u);

/// Leaf of the maximal subtree at w (in rv) at maximum distance from w;
/// ties broken by smallest id. Returns w itself when w has no descendants.
int eccentric_leaf(const RootedView& rv, int w);

/// Removes `removed` (ordered list of distinct ids), optionally restores one
/// edge between survivors, and compacts ids. old_to_new gets -1 for removed.
Tree remove_vertices(const Tree& t, const std::vector<int>& removed,
                     std::optional<std::pair<int, int>> restore_edge,
                     std::vector<int>* old_to_new = nullptr);

/// Edge-list text format: first line "n", then one "u v" per line.
Tree read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Tree& t);

}  // namespace twodom
