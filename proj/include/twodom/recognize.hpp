#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twodom/construct.hpp"
#include "twodom/patterns.hpp"
#include "twodom/tree.hpp"

namespace twodom {

struct RecognizeOptions {
    bool o4_includes_t14 = true;
    bool paranoid = false;           // full backtracking over all reductions
    bool raise_on_mismatch = true;   // throw InternalInconsistency when the
                                     // reduction outcome disagrees with
                                     // gamma2 == alpha2, and check the delta
                                     // conservation per reduction step
};

/// One inverse operation: removing the image of X (and restoring v1v2 for
/// O6) leaves a smaller tree. `removed` is ordered by the added-vertex roles.
struct ReductionStep {
    OpId op = OpId::O1;
    std::string augmented_pattern_id;  // empty for O3
    Embedding embedding;               // augmented pattern into the current tree
    std::vector<int> removed;
    int attacher = -1;  // O3 only
    std::optional<std::pair<int, int>> restored_edge;  // inverse O6
};

/// First reduction in scan order: operations O1..O6, admissible base patterns
/// in registry order, embeddings in image order. Empty when none applies
/// (always for order <= 4).
std::optional<ReductionStep> reduce_once(const Tree& t, const RecognizeOptions& opts = {});

/// Every applicable reduction (for auditing and the paranoid mode).
std::vector<ReductionStep> all_reductions(const Tree& t, const RecognizeOptions& opts = {});

struct Verdict {
    bool accepted = false;
    std::optional<Certificate> certificate;
    int gamma2 = 0;
    int alpha2 = 0;
};

/// Membership in the family by greedy inverse reduction; trees of order <= 4
/// are accepted with an empty-step certificate.
Verdict recognize(const Tree& t, const RecognizeOptions& opts = {});

struct VerifyResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// True iff the base has order <= 4, every step applies at its stage, and the
/// replayed tree has the same canonical code as t.
VerifyResult verify_certificate(const Certificate& c, const Tree& t);

}  // namespace twodom
