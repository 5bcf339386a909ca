#include "twodom/construct.hpp"

#include <algorithm>

#include "twodom/errors.hpp"
#include "twodom/rng.hpp"
#include "twodom/solvers.hpp"

namespace twodom {

namespace {

int op_arity(OpId op) { return op == OpId::O1 ? 1 : op == OpId::O2 ? 2 : 3; }

bool added_are_next_ids(const Tree& t, const std::vector<int>& added) {
    for (std::size_t i = 0; i < added.size(); ++i)
        if (added[i] != t.order() + static_cast<int>(i)) return false;
    return true;
}

int gamma2_value_minus(const Tree& t, int w) {
    VertexSet removed;
    removed.insert(w);
    auto r = solve_gamma2(t, {}, removed);
    return r ? r->value : -1;  // unconstrained gamma2 of a forest always exists
}

bool in_some_gamma2_set_minus(const Tree& t, int w, int x) {
    VertexSet removed;
    removed.insert(w);
    Constraint c;
    c.forced_in.insert(x);
    auto base = solve_gamma2(t, {}, removed);
    auto constrained = solve_gamma2(t, c, removed);
    return constrained && base && constrained->value == base->value;
}

}  // namespace

std::optional<std::string> validate_o_step(const Tree& t, const OpStep& step) {
    if (static_cast<int>(step.added.size()) != op_arity(step.op))
        return std::string("added-vertex count does not match ") + op_name(step.op);
    if (!added_are_next_ids(t, step.added)) return "added vertices are not the next free ids";
    if (step.removed_edge.has_value() != (step.op == OpId::O6))
        return "removed_edge present iff operation is O6";

    if (step.op == OpId::O3) {
        if (step.embedding) return "O3 takes a bare attacher, not an embedding";
        if (step.attacher < 0 || step.attacher >= t.order()) return "attacher out of range";
        return std::nullopt;
    }

    if (!step.embedding) return "missing embedding";
    auto admissible = admissible_base_ids(step.op, true);
    if (std::find(admissible.begin(), admissible.end(), step.embedding->pattern_id) ==
        admissible.end())
        return "pattern " + step.embedding->pattern_id + " not admissible for " +
               op_name(step.op);
    const Pattern& p = pattern_by_id(step.embedding->pattern_id);
    if (!check_embedding(t, p, *step.embedding))
        return "embedding of " + p.id + " is not a prescribed-degree induced subtree";
    if (step.op == OpId::O6) {
        int v1 = step.embedding->map[p.roles.at("v1")];
        int v2 = step.embedding->map[p.roles.at("v2")];
        auto e = *step.removed_edge;
        if (std::min(e.first, e.second) != std::min(v1, v2) ||
            std::max(e.first, e.second) != std::max(v1, v2))
            return "removed_edge does not match the v1v2 image";
    }
    return std::nullopt;
}

Tree apply_O(const Tree& t, const OpStep& step) {
    if (auto reason = validate_o_step(t, step)) {
        if (step.op == OpId::O3) throw InvalidAttacher(*reason);
        throw NoSuchEmbedding(*reason);
    }
    int n = t.order();
    auto edges = t.edges();
    auto role = [&](const char* name) {
        const Pattern& p = pattern_by_id(step.embedding->pattern_id);
        return step.embedding->map[p.roles.at(name)];
    };
    switch (step.op) {
        case OpId::O1:
            edges.emplace_back(role("v"), n);
            break;
        case OpId::O2:
            edges.emplace_back(role("v"), n);
            edges.emplace_back(n, n + 1);
            break;
        case OpId::O3:
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, n + 2);
            edges.emplace_back(step.attacher, n + 1);
            break;
        case OpId::O4:
            edges.emplace_back(role("v"), n);
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, n + 2);
            break;
        case OpId::O5:
            edges.emplace_back(role("v1"), n);
            edges.emplace_back(n, n + 2);
            edges.emplace_back(role("v2"), n + 1);
            break;
        case OpId::O6: {
            std::pair<int, int> drop{std::min(step.removed_edge->first, step.removed_edge->second),
                                     std::max(step.removed_edge->first, step.removed_edge->second)};
            std::erase_if(edges, [&](const std::pair<int, int>& e) { return e == drop; });
            edges.emplace_back(role("v1"), n);
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, n + 2);
            edges.emplace_back(role("v2"), n + 1);
            break;
        }
    }
    return Tree::from_edges(n + op_arity(step.op), edges);
}

OpStep make_o_step(const Tree& t, OpId op, const Embedding& embedding) {
    OpStep step;
    step.op = op;
    step.embedding = embedding;
    for (int i = 0; i < op_arity(op); ++i) step.added.push_back(t.order() + i);
    if (op == OpId::O6) {
        const Pattern& p = pattern_by_id(embedding.pattern_id);
        step.removed_edge = {embedding.map[p.roles.at("v1")], embedding.map[p.roles.at("v2")]};
    }
    return step;
}

OpStep make_o3_step(const Tree& t, int attacher) {
    OpStep step;
    step.op = OpId::O3;
    step.attacher = attacher;
    step.added = {t.order(), t.order() + 1, t.order() + 2};
    return step;
}

Tree apply_R(const Tree& t, RId r, const RParams& params) {
    int n = t.order();
    int w = params.attach;
    if (w < 0 || w >= n) throw PreconditionViolated("attachment vertex out of range");
    auto edges = t.edges();
    auto neighbor_condition = [&](const char* tag) {
        // Binds only when gamma2(T-w) = gamma2(T)-1: no neighbor of w in T
        // may belong to a gamma2(T-w)-set.
        int g = solve_gamma2(t)->value;
        if (gamma2_value_minus(t, w) != g - 1) return;
        for (int x : t.neighbors(w))
            if (in_some_gamma2_set_minus(t, w, x))
                throw PreconditionViolated(std::string(tag) +
                                           ": a neighbor of w lies in a gamma2(T-w)-set");
    };
    switch (r) {
        case RId::R1: {
            if (params.p < 2) throw PreconditionViolated("R1: star needs p >= 2");
            edges.emplace_back(w, n);
            for (int i = 1; i <= params.p; ++i) edges.emplace_back(n, n + i);
            return Tree::from_edges(n + params.p + 1, edges);
        }
        case RId::R2: {
            if (params.p < 1) throw PreconditionViolated("R2: double star needs p >= 1");
            neighbor_condition("R2");
            // Double star S_{1,p}: support u with one leaf, support v with p
            // leaves; v is joined to w.
            int u = n, v = n + 1;
            edges.emplace_back(u, v);
            edges.emplace_back(u, n + 2);
            for (int i = 0; i < params.p; ++i) edges.emplace_back(v, n + 3 + i);
            edges.emplace_back(v, w);
            return Tree::from_edges(n + params.p + 3, edges);
        }
        case RId::R3: {
            if (!t.is_leaf(w)) throw PreconditionViolated("R3: attachment vertex is not a leaf");
            if (!in_every_alpha2_set(t, w))
                throw PreconditionViolated("R3: leaf does not belong to every alpha2-set");
            VertexSet removed;
            removed.insert(w);
            int a = solve_alpha2(t)->value;
            int aw = solve_alpha2(t, {}, removed)->value;
            if (aw + 1 != a) throw PreconditionViolated("R3: alpha2(T-v)+1 != alpha2(T)");
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, w);
            return Tree::from_edges(n + 2, edges);
        }
        case RId::R4: {
            if (!in_some_gamma2_set(t, w))
                throw PreconditionViolated("R4: w does not belong to a gamma2-set");
            if (gamma2_value_minus(t, w) > solve_gamma2(t)->value)
                throw PreconditionViolated("R4: gamma2(T-w) > gamma2(T)");
            neighbor_condition("R4");
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, n + 2);
            edges.emplace_back(n + 2, w);
            return Tree::from_edges(n + 3, edges);
        }
    }
    throw PreconditionViolated("unknown operation");
}

const std::vector<Tree>& base_trees() {
    static const std::vector<Tree> trees = {
        Tree::from_edges(1, {}),
        Tree::from_edges(2, {{0, 1}}),
        Tree::from_edges(3, {{0, 1}, {1, 2}}),
        Tree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}),
        Tree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}),
    };
    return trees;
}

std::pair<Tree, Certificate> random_member(std::uint64_t seed, int steps,
                                           const OpWeights& weights) {
    CounterRng rng(seed);
    Tree t = base_trees()[rng.next_below(base_trees().size())];
    Certificate cert;
    cert.base = t;

    constexpr OpId kOps[6] = {OpId::O1, OpId::O2, OpId::O3, OpId::O4, OpId::O5, OpId::O6};
    long long total = 0;
    for (int x : weights.w) total += std::max(x, 0);

    for (int s = 0; s < steps; ++s) {
        for (int attempt = 0;; ++attempt) {
            OpId op = OpId::O3;
            if (attempt < 200 && total > 0) {
                long long pick = static_cast<long long>(rng.next_below(total));
                for (int i = 0; i < 6; ++i) {
                    pick -= std::max(weights.w[i], 0);
                    if (pick < 0) {
                        op = kOps[i];
                        break;
                    }
                }
            }
            OpStep step;
            if (op == OpId::O3) {
                step = make_o3_step(t, static_cast<int>(rng.next_below(t.order())));
            } else {
                std::vector<Embedding> candidates;
                for (const auto& id : admissible_base_ids(op, true)) {
                    auto embs = find_pdi_embeddings(t, pattern_by_id(id));
                    candidates.insert(candidates.end(), embs.begin(), embs.end());
                }
                if (candidates.empty()) continue;
                step = make_o_step(t, op, candidates[rng.next_below(candidates.size())]);
            }
            t = apply_O(t, step);
            cert.steps.push_back(step);
            break;
        }
    }
    return {t, cert};
}

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["base"]["n"] = c.base.order();
    auto& base_edges = j["base"]["edges"] = nlohmann::json::array();
    for (auto [u, v] : c.base.edges()) base_edges.push_back({u, v});
    auto& steps = j["steps"] = nlohmann::json::array();
    for (const auto& s : c.steps) {
        nlohmann::json step;
        step["op"] = op_name(s.op);
        nlohmann::json roles = nlohmann::json::object();
        if (s.op == OpId::O3) {
            step["pattern_id"] = nullptr;
            step["image"] = nlohmann::json::array();
            roles["v"] = s.attacher;
        } else {
            const Pattern& p = pattern_by_id(s.embedding->pattern_id);
            step["pattern_id"] = p.id;
            step["image"] = s.embedding->map;
            if (s.op == OpId::O5 || s.op == OpId::O6) {
                roles["v1"] = s.embedding->map[p.roles.at("v1")];
                roles["v2"] = s.embedding->map[p.roles.at("v2")];
            } else {
                roles["v"] = s.embedding->map[p.roles.at("v")];
            }
        }
        step["roles"] = roles;
        step["added"] = s.added;
        if (s.removed_edge)
            step["removed_edge"] = {s.removed_edge->first, s.removed_edge->second};
        else
            step["removed_edge"] = nullptr;
        steps.push_back(std::move(step));
    }
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    int n = j.at("base").at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("base").at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    c.base = Tree::from_edges(n, edges);
    for (const auto& js : j.at("steps")) {
        OpStep s;
        auto op = op_from_name(js.at("op").get<std::string>());
        if (!op) throw NotATree("certificate: unknown operation " + js.at("op").dump());
        s.op = *op;
        if (!js.at("pattern_id").is_null()) {
            Embedding e;
            e.pattern_id = js.at("pattern_id").get<std::string>();
            e.map = js.at("image").get<std::vector<int>>();
            s.embedding = std::move(e);
        }
        if (s.op == OpId::O3) s.attacher = js.at("roles").at("v").get<int>();
        s.added = js.at("added").get<std::vector<int>>();
        if (!js.at("removed_edge").is_null())
            s.removed_edge = {js.at("removed_edge").at(0).get<int>(),
                              js.at("removed_edge").at(1).get<int>()};
        c.steps.push_back(std::move(s));
    }
    return c;
}

}  // namespace twodom
