#include "twodom/recognize.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "twodom/canonical.hpp"
#include "twodom/errors.hpp"
#include "twodom/solvers.hpp"

namespace twodom {

namespace {

const Pattern& augmented_pattern(OpId op, const std::string& base_id) {
    static const auto cache = [] {
        std::unordered_map<std::string, Pattern> map;
        for (OpId op : {OpId::O1, OpId::O2, OpId::O4, OpId::O5, OpId::O6})
            for (const auto& id : admissible_base_ids(op, true)) {
                Pattern a = augment(pattern_by_id(id), op);
                map.emplace(a.id, std::move(a));
            }
        return map;
    }();
    return cache.at(base_id + "+" + op_name(op));
}

std::optional<ReductionStep> o3_candidate(const Tree& t, int attacher) {
    for (int c : t.neighbors(attacher)) {
        if (t.degree(c) != 3) continue;
        std::vector<int> leaves;
        bool ok = true;
        for (int x : t.neighbors(c)) {
            if (x == attacher) continue;
            if (t.is_leaf(x))
                leaves.push_back(x);
            else
                ok = false;
        }
        if (!ok || leaves.size() != 2) continue;
        ReductionStep step;
        step.op = OpId::O3;
        step.attacher = attacher;
        step.removed = {leaves[0], c, leaves[1]};  // u1, u2, u3
        return step;
    }
    return std::nullopt;
}

ReductionStep step_from_embedding(OpId op, const Pattern& aug, const Embedding& e) {
    ReductionStep step;
    step.op = op;
    step.augmented_pattern_id = aug.id;
    step.embedding = e;
    for (int x : aug.added) step.removed.push_back(e.map[x]);
    if (op == OpId::O6)
        step.restored_edge = {e.map[aug.roles.at("v1")], e.map[aug.roles.at("v2")]};
    return step;
}

void scan_reductions(const Tree& t, const RecognizeOptions& opts,
                     const std::function<bool(ReductionStep)>& sink) {
    if (t.order() <= 4) return;
    for (OpId op : {OpId::O1, OpId::O2, OpId::O3, OpId::O4, OpId::O5, OpId::O6}) {
        if (op == OpId::O3) {
            for (int v = 0; v < t.order(); ++v) {
                // Deduplicate: scanning by attacher, each qualifying middle
                // vertex has a unique non-leaf neighbor at order >= 5.
                if (auto step = o3_candidate(t, v)) {
                    if (sink(std::move(*step))) return;
                }
            }
            continue;
        }
        for (const auto& base_id : admissible_base_ids(op, opts.o4_includes_t14)) {
            const Pattern& aug = augmented_pattern(op, base_id);
            for (const auto& e : find_pdi_embeddings(t, aug)) {
                if (sink(step_from_embedding(op, aug, e))) return;
            }
        }
    }
}

Tree reduce_tree(const Tree& t, const ReductionStep& step, std::vector<int>* old_to_new) {
    return remove_vertices(t, step.removed, step.restored_edge, old_to_new);
}

struct Stage {
    ReductionStep step;
    std::vector<int> old_to_new;
};

/// Reverses the reduction trace into a replayable forward certificate.
Certificate forward_certificate(const Tree& base, const std::vector<Stage>& stages) {
    Certificate cert;
    cert.base = base;
    Tree forward = base;
    std::vector<int> to_forward(base.order());
    for (std::size_t i = 0; i < to_forward.size(); ++i) to_forward[i] = static_cast<int>(i);

    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const Stage& stage = *it;
        OpStep s;
        s.op = stage.step.op;
        int fn = forward.order();
        for (std::size_t i = 0; i < stage.step.removed.size(); ++i)
            s.added.push_back(fn + static_cast<int>(i));

        if (stage.step.op == OpId::O3) {
            s.attacher = to_forward[stage.old_to_new[stage.step.attacher]];
        } else {
            const Pattern& aug = augmented_pattern(stage.step.op, [&] {
                auto id = stage.step.augmented_pattern_id;
                return id.substr(0, id.find('+'));
            }());
            int base_order = aug.shape.order() - static_cast<int>(aug.added.size());
            Embedding fe;
            fe.pattern_id = aug.id.substr(0, aug.id.find('+'));
            fe.map.resize(base_order);
            for (int i = 0; i < base_order; ++i)
                fe.map[i] = to_forward[stage.old_to_new[stage.step.embedding.map[i]]];
            s.embedding = std::move(fe);
            if (stage.step.op == OpId::O6) {
                const Pattern& p = pattern_by_id(s.embedding->pattern_id);
                s.removed_edge = {s.embedding->map[p.roles.at("v1")],
                                  s.embedding->map[p.roles.at("v2")]};
            }
        }

        std::vector<int> next(stage.old_to_new.size(), -1);
        for (std::size_t old = 0; old < stage.old_to_new.size(); ++old)
            if (stage.old_to_new[old] >= 0) next[old] = to_forward[stage.old_to_new[old]];
        for (std::size_t i = 0; i < stage.step.removed.size(); ++i)
            next[stage.step.removed[i]] = fn + static_cast<int>(i);
        to_forward = std::move(next);

        forward = apply_O(forward, s);
        cert.steps.push_back(std::move(s));
    }
    return cert;
}

int delta(const Tree& t) {
    return solve_alpha2(t)->value - solve_gamma2(t)->value;
}

bool paranoid_search(const Tree& t, const RecognizeOptions& opts,
                     std::unordered_set<std::string>& dead, std::vector<Stage>& path,
                     Tree& base_out) {
    if (t.order() <= 4) {
        base_out = t;
        return true;
    }
    std::string key = canonical_code(t);
    if (dead.contains(key)) return false;
    for (auto& step : all_reductions(t, opts)) {
        std::vector<int> map;
        Tree next = reduce_tree(t, step, &map);
        path.push_back({std::move(step), std::move(map)});
        if (paranoid_search(next, opts, dead, path, base_out)) return true;
        path.pop_back();
    }
    dead.insert(key);
    return false;
}

}  // namespace

std::optional<ReductionStep> reduce_once(const Tree& t, const RecognizeOptions& opts) {
    std::optional<ReductionStep> found;
    scan_reductions(t, opts, [&](ReductionStep step) {
        found = std::move(step);
        return true;
    });
    return found;
}

std::vector<ReductionStep> all_reductions(const Tree& t, const RecognizeOptions& opts) {
    std::vector<ReductionStep> out;
    scan_reductions(t, opts, [&](ReductionStep step) {
        out.push_back(std::move(step));
        return false;
    });
    return out;
}

Verdict recognize(const Tree& t, const RecognizeOptions& opts) {
    Verdict verdict;
    verdict.gamma2 = solve_gamma2(t)->value;
    verdict.alpha2 = solve_alpha2(t)->value;

    if (t.order() <= 4) {
        verdict.accepted = true;
        verdict.certificate = Certificate{t, {}};
        return verdict;
    }

    if (opts.paranoid) {
        std::unordered_set<std::string> dead;
        std::vector<Stage> path;
        Tree base = t;
        verdict.accepted = paranoid_search(t, opts, dead, path, base);
        if (verdict.accepted) verdict.certificate = forward_certificate(base, path);
    } else {
        Tree cur = t;
        int cur_delta = verdict.alpha2 - verdict.gamma2;
        std::vector<Stage> stages;
        while (cur.order() > 4) {
            auto step = reduce_once(cur, opts);
            if (!step) break;
            std::vector<int> map;
            Tree next = reduce_tree(cur, *step, &map);
            if (opts.raise_on_mismatch) {
                int next_delta = delta(next);
                if (next_delta != cur_delta)
                    throw InternalInconsistency(
                        std::string("reduction via ") + op_name(step->op) +
                        " changed alpha2 - gamma2");
                cur_delta = next_delta;
            }
            stages.push_back({std::move(*step), std::move(map)});
            cur = next;
        }
        verdict.accepted = cur.order() <= 4;
        if (verdict.accepted) verdict.certificate = forward_certificate(cur, stages);
    }

    if (opts.raise_on_mismatch && verdict.accepted != (verdict.gamma2 == verdict.alpha2))
        throw InternalInconsistency("recognition disagrees with gamma2 == alpha2");
    return verdict;
}

VerifyResult verify_certificate(const Certificate& c, const Tree& t) {
    if (c.base.order() > 4) return {false, "base order exceeds 4"};
    Tree cur = c.base;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        if (auto reason = validate_o_step(cur, c.steps[i]))
            return {false, "BadStep " + std::to_string(i) + ": " + *reason};
        cur = apply_O(cur, c.steps[i]);
    }
    if (canonical_code(cur) != canonical_code(t)) return {false, "canonical code mismatch"};
    return {true, ""};
}

}  // namespace twodom
