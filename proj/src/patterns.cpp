#include "twodom/patterns.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twodom/errors.hpp"
#include "twodom/solvers.hpp"

namespace twodom {

namespace {

// The 25 special trees: adjacency, the single white vertex, role labels,
// square (gamma2 witness) and diamond (2-independent witness) marks, and the
// B-family index.
constexpr const char* kFixtureText = R"(# special-tree fixture, version 1
T1  n=3 edges=0-1,1-2 white=1 roles=v:1 squares=0,2 diamonds=0,2
T2  n=3 edges=0-1,1-2 white=2 roles=v:2 squares=0,2 diamonds=0,1
T3  n=4 edges=0-1,1-2,2-3 white=3 roles=v:1 squares=0,2,3 diamonds=0,1,3
T4  n=4 edges=0-1,1-2,2-3 white=1 roles=v:3 squares=0,1,3 diamonds=0,2,3
T5  n=5 edges=0-1,1-2,2-3,3-4 white=1 roles=v:1 squares=0,2,4 diamonds=0,1,3,4
T6  n=5 edges=0-1,1-2,2-3,3-4 white=0 roles=v:0,v1:4,v2:0 squares=0,2,4 diamonds=0,1,3,4
T7  n=6 edges=0-1,1-2,2-3,3-4,4-5 white=5 roles=v:3 squares=0,2,4,5 diamonds=0,1,3,4
T8  n=6 edges=0-1,1-2,2-3,3-4,4-5 white=1 roles=v:1 squares=0,1,3,5 diamonds=0,2,4,5
T9  n=7 edges=0-1,1-2,2-3,3-4,4-5,5-6 white=0 roles=v:0 squares=0,2,4,6 diamonds=0,2,3,5,6
T10 n=7 edges=0-1,1-2,2-3,3-4,4-5,5-6 white=3 roles=v:3 squares=0,2,4,6 diamonds=0,1,3,5,6
T11 n=7 edges=0-1,0-2,0-3,3-4,4-5,5-6 white=0 roles=v:6 squares=0,1,2,4,6 diamonds=1,2,3,5,6
T12 n=7 edges=0-1,1-2,2-3,3-4,1-5,0-6 white=0 roles=v:5 squares=0,2,4,5,6 diamonds=1,3,4,5,6
T13 n=7 edges=0-1,1-2,2-3,3-4,1-5,0-6 white=0 roles=v:6 squares=0,2,4,5,6 diamonds=1,3,4,5,6
T14 n=8 edges=0-1,1-2,2-3,3-4,4-5,1-6,2-7 white=0 roles=v:0,v1:0,v2:1 squares=0,3,5,6,7 diamonds=0,2,4,5,6,7
T15 n=8 edges=0-1,1-2,2-3,1-4,2-5,3-6,3-7 white=3 roles=v:0 squares=0,3,4,5,6,7 diamonds=0,2,4,5,6,7
B1  n=1 edges= white=0 roles=w:0 squares=0 diamonds=0 bfam=0
B2  n=2 edges=0-1 white=1 roles=w:1 squares=0,1 diamonds=0,1 bfam=1
B3  n=3 edges=0-1,1-2 white=2 roles=w:2 squares=0,2 diamonds=0,1 bfam=2
B4  n=4 edges=0-1,1-2,2-3 white=3 roles=w:3 squares=0,2,3 diamonds=0,1,3 bfam=3
B5  n=5 edges=0-1,1-2,2-3,3-4 white=3 roles=w:3 squares=0,2,4 diamonds=0,1,3,4 bfam=3
B6  n=7 edges=0-1,1-2,2-3,3-4,4-5,5-6 white=3 roles=w:3 squares=0,2,4,6 diamonds=0,1,3,5,6 bfam=3
B7  n=5 edges=0-1,1-2,2-3,3-4 white=4 roles=w:4 squares=0,2,4 diamonds=0,1,3 bfam=4
B8  n=7 edges=0-1,1-2,2-3,3-4,3-5,4-6 white=4 roles=w:4 squares=0,2,4,5,6 diamonds=0,1,5,6 bfam=4
B9  n=6 edges=0-1,1-2,2-3,3-4,4-5 white=5 roles=w:5 squares=0,2,4,5 diamonds=0,1,3,4 bfam=5
B10 n=9 edges=0-1,1-2,2-3,3-4,4-5,3-6,4-7,5-8 white=5 roles=w:5 squares=0,2,5,6,7,8 diamonds=0,1,5,6,7,8 bfam=5
)";

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

void self_check(const Pattern& p) {
    auto fail = [&](const std::string& what) { throw SelfCheckFailed(p.id + ": " + what); };
    int n = p.shape.order();
    if (p.white < 0 || p.white >= n) fail("white vertex out of range");
    if (p.blacks.contains(p.white)) fail("white vertex colored black");
    if (p.blacks.size() != n - 1) fail("blacks must be all non-white vertices");
    for (auto& [name, vertex] : p.roles)
        if (vertex < 0 || vertex >= n) fail("role " + name + " out of range");
    if (p.id[0] == 'B') {
        if (!p.roles.contains("w")) fail("B pattern missing role w");
        if (!p.b_family) fail("B pattern missing family index");
    } else {
        if (!p.roles.contains("v")) fail("T pattern missing role v");
        bool both = p.roles.contains("v1") && p.roles.contains("v2");
        if ((p.id == "T6" || p.id == "T14") != both) fail("v1/v2 roles only on T6 and T14");
    }
    if (!is_2dominating(p.shape, p.squares)) fail("squares are not 2-dominating");
    if (p.squares.size() != brute_gamma2(p.shape)) fail("square count differs from gamma2");
    if (!is_2independent(p.shape, p.diamonds)) fail("diamonds are not 2-independent");
}

}  // namespace

const char* op_name(OpId op) {
    switch (op) {
        case OpId::O1: return "O1";
        case OpId::O2: return "O2";
        case OpId::O3: return "O3";
        case OpId::O4: return "O4";
        case OpId::O5: return "O5";
        case OpId::O6: return "O6";
    }
    return "?";
}

std::optional<OpId> op_from_name(const std::string& name) {
    for (OpId op : {OpId::O1, OpId::O2, OpId::O3, OpId::O4, OpId::O5, OpId::O6})
        if (name == op_name(op)) return op;
    return std::nullopt;
}

std::vector<Pattern> parse_patterns(std::istream& in) {
    std::vector<Pattern> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        Pattern p;
        fields >> p.id;
        int n = -1;
        std::vector<std::pair<int, int>> edges;
        std::string field;
        while (fields >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) throw SelfCheckFailed(p.id + ": bad field " + field);
            std::string key = field.substr(0, eq);
            std::string value = field.substr(eq + 1);
            if (key == "n") {
                n = std::stoi(value);
            } else if (key == "edges") {
                std::istringstream items(value);
                std::string item;
                while (std::getline(items, item, ',')) {
                    auto dash = item.find('-');
                    if (dash == std::string::npos)
                        throw SelfCheckFailed(p.id + ": bad edge " + item);
                    edges.emplace_back(std::stoi(item.substr(0, dash)),
                                       std::stoi(item.substr(dash + 1)));
                }
            } else if (key == "white") {
                p.white = std::stoi(value);
            } else if (key == "roles") {
                std::istringstream items(value);
                std::string item;
                while (std::getline(items, item, ',')) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw SelfCheckFailed(p.id + ": bad role " + item);
                    p.roles[item.substr(0, colon)] = std::stoi(item.substr(colon + 1));
                }
            } else if (key == "squares") {
                p.squares = VertexSet(parse_id_list(value));
            } else if (key == "diamonds") {
                p.diamonds = VertexSet(parse_id_list(value));
            } else if (key == "bfam") {
                p.b_family = std::stoi(value);
            } else {
                throw SelfCheckFailed(p.id + ": unknown field " + key);
            }
        }
        p.shape = Tree::from_edges(n, edges);
        std::vector<int> blacks;
        for (int v = 0; v < n; ++v)
            if (v != p.white) blacks.push_back(v);
        p.blacks = VertexSet(blacks);
        out.push_back(std::move(p));
    }
    return out;
}

const char* builtin_fixture_text() { return kFixtureText; }

const std::vector<Pattern>& registry() {
    static const std::vector<Pattern> patterns = [] {
        std::istringstream in(kFixtureText);
        auto list = parse_patterns(in);
        if (list.size() != 25) throw SelfCheckFailed("expected 25 patterns");
        for (const auto& p : list) self_check(p);
        return list;
    }();
    return patterns;
}

const Pattern& pattern_by_id(const std::string& id) {
    for (const auto& p : registry())
        if (p.id == id) return p;
    throw SelfCheckFailed("unknown pattern id " + id);
}

bool check_embedding(const Tree& host, const Pattern& p, const Embedding& e) {
    int k = p.shape.order();
    if (static_cast<int>(e.map.size()) != k) return false;
    std::set<int> used;
    for (int img : e.map) {
        if (img < 0 || img >= host.order()) return false;
        if (!used.insert(img).second) return false;
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (p.shape.adjacent(a, b) != host.adjacent(e.map[a], e.map[b])) return false;
    for (int v = 0; v < k; ++v)
        if (v != p.white && host.degree(e.map[v]) != p.shape.degree(v)) return false;
    return true;
}

std::vector<Embedding> find_pdi_embeddings(const Tree& host, const Pattern& p) {
    int k = p.shape.order();
    std::vector<Embedding> out;
    if (k > host.order()) return out;

    // Search order: BFS from the white vertex, so every vertex after the
    // first has an already-mapped pattern neighbor.
    RootedView order(p.shape, p.white);
    const auto& seq = order.bfs_order();

    std::vector<int> map(k, -1);
    std::vector<char> used(host.order(), 0);
    std::set<std::vector<int>> dedup;

    auto key_of = [&]() {
        std::vector<int> key(map.begin(), map.end());
        std::sort(key.begin(), key.end());
        for (auto& [name, vertex] : p.roles) key.push_back(map[vertex]);
        for (int vertex : p.added) key.push_back(map[vertex]);
        return key;
    };

    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == seq.size()) {
            if (dedup.insert(key_of()).second) out.push_back({p.id, map});
            return;
        }
        int pv = seq[depth];
        int parent = *order.parent(pv);
        bool black = pv != p.white;
        int want = p.shape.degree(pv);
        for (int cand : host.neighbors(map[parent])) {
            if (used[cand]) continue;
            if (black && host.degree(cand) != want) continue;
            if (!black && host.degree(cand) < want) continue;
            map[pv] = cand;
            used[cand] = 1;
            extend(depth + 1);
            used[cand] = 0;
            map[pv] = -1;
        }
    };

    int white_deg = p.shape.degree(p.white);
    for (int cand = 0; cand < host.order(); ++cand) {
        if (host.degree(cand) < white_deg) continue;
        map[p.white] = cand;
        used[cand] = 1;
        extend(1);
        used[cand] = 0;
        map[p.white] = -1;
    }
    std::sort(out.begin(), out.end(),
              [](const Embedding& a, const Embedding& b) { return a.map < b.map; });
    return out;
}

std::vector<std::string> admissible_base_ids(OpId op, bool o4_includes_t14) {
    switch (op) {
        case OpId::O1: return {"T1", "T2", "T8"};
        case OpId::O2: return {"T4", "T11", "T12", "T13", "T15"};
        case OpId::O3: return {};
        case OpId::O4: {
            std::vector<std::string> ids{"T1", "T2", "T3", "T5", "T6", "T7", "T9", "T10"};
            if (o4_includes_t14) ids.push_back("T14");
            return ids;
        }
        case OpId::O5: return {"T6"};
        case OpId::O6: return {"T14"};
    }
    return {};
}

Pattern augment(const Pattern& p, OpId op) {
    auto admissible = admissible_base_ids(op, true);
    if (std::find(admissible.begin(), admissible.end(), p.id) == admissible.end())
        throw InadmissiblePattern(p.id + " under " + op_name(op));

    Pattern a;
    a.id = p.id + "+" + op_name(op);
    a.white = p.white;
    a.roles = p.roles;
    a.op = op;
    int n = p.shape.order();
    auto edges = p.shape.edges();
    switch (op) {
        case OpId::O1: {
            edges.emplace_back(p.roles.at("v"), n);
            a.added = {n};
            break;
        }
        case OpId::O2: {
            edges.emplace_back(p.roles.at("v"), n);
            edges.emplace_back(n, n + 1);
            a.added = {n, n + 1};
            break;
        }
        case OpId::O4: {
            edges.emplace_back(p.roles.at("v"), n);
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, n + 2);
            a.added = {n, n + 1, n + 2};
            break;
        }
        case OpId::O5: {
            // u1 adjacent to v1 and u3; u2 a new leaf on v2.
            edges.emplace_back(p.roles.at("v1"), n);
            edges.emplace_back(n, n + 2);
            edges.emplace_back(p.roles.at("v2"), n + 1);
            a.added = {n, n + 1, n + 2};
            break;
        }
        case OpId::O6: {
            int v1 = p.roles.at("v1"), v2 = p.roles.at("v2");
            std::erase_if(edges, [&](const std::pair<int, int>& e) {
                return e == std::make_pair(std::min(v1, v2), std::max(v1, v2));
            });
            edges.emplace_back(v1, n);
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, n + 2);
            edges.emplace_back(v2, n + 1);
            a.added = {n, n + 1, n + 2};
            break;
        }
        case OpId::O3: throw InadmissiblePattern("O3 attaches to a bare vertex");
    }
    a.shape = Tree::from_edges(n + static_cast<int>(a.added.size()), edges);
    std::vector<int> blacks(p.blacks.ids());
    blacks.insert(blacks.end(), a.added.begin(), a.added.end());
    a.blacks = VertexSet(blacks);
    return a;
}

std::vector<std::string> diamond_discrepancies() {
    std::vector<std::string> out;
    for (const auto& p : registry())
        if (p.diamonds.size() != brute_alpha2(p.shape)) out.push_back(p.id);
    return out;
}

}  // namespace twodom
