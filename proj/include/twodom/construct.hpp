#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twodom/patterns.hpp"
#include "twodom/tree.hpp"

#include "json.hpp"

namespace twodom {

/// One forward application of an O-operation. `added` lists the new vertex
/// ids in u-order; appended vertices always take the next free ids.
struct OpStep {
    OpId op = OpId::O1;
    std::optional<Embedding> embedding;  // base-pattern embedding; absent for O3
    int attacher = -1;                   // O3 only
    std::vector<int> added;
    std::optional<std::pair<int, int>> removed_edge;  // O6 only
};

/// Base tree of order <= 4 plus the operation sequence rebuilding a member.
struct Certificate {
    Tree base{Tree::from_edges(1, {})};
    std::vector<OpStep> steps;
};

/// Reason the step cannot be applied to t, or empty when it can.
std::optional<std::string> validate_o_step(const Tree& t, const OpStep& step);

/// Applies one operation; throws NoSuchEmbedding / InvalidAttacher.
Tree apply_O(const Tree& t, const OpStep& step);

/// Builds a step for op at the given base-pattern embedding, assigning the
/// next free ids to the new vertices.
OpStep make_o_step(const Tree& t, OpId op, const Embedding& embedding);
OpStep make_o3_step(const Tree& t, int attacher);

enum class RId { R1, R2, R3, R4 };

struct RParams {
    int p = 2;       // star / double-star leaf count (R1, R2)
    int attach = 0;  // attachment vertex (w for R2/R4, any for R1, leaf v for R3)
};

/// Applies an R-operation with its solver-checked global preconditions;
/// throws PreconditionViolated naming the failing clause.
Tree apply_R(const Tree& t, RId r, const RParams& params);

/// The five trees of order <= 4: K1, K2, P3, P4, K_{1,3}.
const std::vector<Tree>& base_trees();

struct OpWeights {
    std::array<int, 6> w{1, 1, 1, 1, 1, 1};
};

/// Deterministic random member of the family: uniformly chosen base tree of
/// order <= 4, then `steps` weighted random applicable operations at random
/// embeddings. Inapplicable draws are re-drawn (O3 is always applicable).
std::pair<Tree, Certificate> random_member(std::uint64_t seed, int steps,
                                           const OpWeights& weights = {});

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace twodom
