#pragma once

#include <optional>

#include "twodom/tree.hpp"

namespace twodom {

/// Forced membership constraints; the two sets must be disjoint.
struct Constraint {
    VertexSet forced_in;
    VertexSet forced_out;
};

struct SolveOutcome {
    int value = 0;
    VertexSet witness;
};

/// Minimum 2-dominating set respecting c. Empty result when the constraints
/// admit no 2-dominating set (e.g. a leaf forced out). Witnesses are
/// deterministic: backtracking prefers lower state index, then smaller child.
std::optional<SolveOutcome> solve_gamma2(const Tree& t, const Constraint& c = {});

/// Maximum 2-independent set respecting c. Empty result only when forced_in
/// itself violates 2-independence.
std::optional<SolveOutcome> solve_alpha2(const Tree& t, const Constraint& c = {});

/// Same solvers on the forest t minus `removed`; values and witnesses are
/// componentwise sums/unions.
std::optional<SolveOutcome> solve_gamma2(const Tree& t, const Constraint& c,
                                         const VertexSet& removed);
std::optional<SolveOutcome> solve_alpha2(const Tree& t, const Constraint& c,
                                         const VertexSet& removed);

bool is_2dominating(const Tree& t, const VertexSet& s);
bool is_2independent(const Tree& t, const VertexSet& s);

/// Subset-enumeration oracles; order capped at 22 (throws TooLarge).
int brute_gamma2(const Tree& t);
int brute_alpha2(const Tree& t);

/// First set that is simultaneously 2-dominating and 2-independent, found by
/// depth-first subset enumeration that prefers including smaller ids first.
/// Exists for every graph; order capped at 22 (throws TooLarge).
VertexSet find_2dom_2ind_set(const Tree& t);

bool in_every_gamma2_set(const Tree& t, int v);
bool in_some_gamma2_set(const Tree& t, int v);
bool in_every_alpha2_set(const Tree& t, int v);

}  // namespace twodom
