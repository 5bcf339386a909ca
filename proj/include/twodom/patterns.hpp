#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twodom/tree.hpp"

namespace twodom {

enum class OpId { O1, O2, O3, O4, O5, O6 };

const char* op_name(OpId op);
std::optional<OpId> op_from_name(const std::string& name);

/// A special tree with its coloring, role vertices and witness marks, or an
/// operation-augmented copy of one (then `added` lists the new vertices X in
/// u-order and `op` names the operation).
struct Pattern {
    std::string id;  // T1..T15, B1..B10; augmented: e.g. "T2+O4"
    Tree shape{Tree::from_edges(1, {})};
    int white = 0;
    VertexSet blacks;
    std::map<std::string, int> roles;  // subset of {v, v1, v2, w}
    VertexSet squares;
    VertexSet diamonds;
    std::optional<int> b_family;
    std::vector<int> added;  // X, empty for the 25 base patterns
    std::optional<OpId> op;

    bool is_black(int vertex) const { return blacks.contains(vertex); }
};

/// Injective role- and degree-preserving map of a pattern into a host tree.
struct Embedding {
    std::string pattern_id;
    std::vector<int> map;  // pattern vertex i -> host vertex

    bool operator==(const Embedding&) const = default;
};

/// The 25 special trees, self-checked on first use (throws SelfCheckFailed
/// naming the offending pattern and invariant).
const std::vector<Pattern>& registry();

const Pattern& pattern_by_id(const std::string& id);

/// All embeddings of p into host where every black vertex keeps its degree
/// and the single white vertex is unconstrained. Deduplicated: embeddings are
/// distinct iff they differ on the image set, on a role vertex image, or on
/// an added vertex image. Sorted by image tuple.
std::vector<Embedding> find_pdi_embeddings(const Tree& host, const Pattern& p);

/// True iff e is a valid PDI embedding of p into host (adjacency preserved,
/// induced, black degrees exact, injective).
bool check_embedding(const Tree& host, const Pattern& p, const Embedding& e);

/// Base patterns an operation may act on, in registry order. O4 optionally
/// includes T14 (see construct module notes); O3 acts on bare vertices and
/// has no patterns.
std::vector<std::string> admissible_base_ids(OpId op, bool o4_includes_t14 = true);

/// The augmented pattern: p plus the vertices X added by op, X colored black,
/// original colors and roles unchanged. Throws InadmissiblePattern.
Pattern augment(const Pattern& p, OpId op);

/// Patterns whose diamond count differs from brute-force alpha2 of the
/// shape. The catalogued diamond marks are kept as-is and reported here
/// rather than silently adjusted; see the patterns-selfcheck command.
std::vector<std::string> diamond_discrepancies();

/// Parses the plain-text fixture format (one record per line:
/// id n=.. edges=.. white=.. roles=.. squares=.. diamonds=.. [bfam=..]).
std::vector<Pattern> parse_patterns(std::istream& in);

/// The built-in fixture text the registry is loaded from.
const char* builtin_fixture_text();

}  // namespace twodom
