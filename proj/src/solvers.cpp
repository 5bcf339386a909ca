#include "twodom/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

#include "twodom/errors.hpp"

namespace twodom {

namespace {

constexpr int kInf = 1 << 28;
constexpr int kBruteCap = 22;

int sat_add(int a, int b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

void check_constraint(const Tree& t, const Constraint& c, const VertexSet& removed) {
    for (int v : c.forced_in) {
        if (v < 0 || v >= t.order()) throw PreconditionViolated("constraint id out of range");
        if (c.forced_out.contains(v))
            throw PreconditionViolated("constraint sets overlap at vertex " + std::to_string(v));
        if (removed.contains(v)) throw PreconditionViolated("constraint names a removed vertex");
    }
    for (int v : c.forced_out) {
        if (v < 0 || v >= t.order()) throw PreconditionViolated("constraint id out of range");
        if (removed.contains(v)) throw PreconditionViolated("constraint names a removed vertex");
    }
}

struct RootedForest {
    std::vector<int> order;                  // BFS order, roots first per component
    std::vector<int> parent;                 // -1 at roots
    std::vector<std::vector<int>> children;  // ascending ids
    std::vector<int> roots;
};

RootedForest root_forest(const Tree& t, const VertexSet& removed) {
    int n = t.order();
    RootedForest f;
    f.parent.assign(n, -1);
    f.children.assign(n, {});
    std::vector<char> seen(n, 0);
    for (int v : removed) seen[v] = 1;
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        f.roots.push_back(r);
        std::vector<int> queue{r};
        seen[r] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            f.order.push_back(v);
            for (int w : t.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    f.parent[w] = v;
                    f.children[v].push_back(w);
                    queue.push_back(w);
                }
            }
        }
    }
    return f;
}

// gamma2 states: IN = in S; OUT_NEED = out, exactly one child in S, needs the
// parent in S; OUT_SAT = out, at least two children in S.
enum GState : int { G_IN = 0, G_OUT_NEED = 1, G_OUT_SAT = 2 };

struct Gamma2Dp {
    const Tree& t;
    const Constraint& c;
    RootedForest f;
    std::vector<std::array<int, 3>> cost;
    // Chosen child states per (vertex, state), aligned with children lists.
    std::vector<std::array<std::vector<signed char>, 3>> choice;

    Gamma2Dp(const Tree& tree, const Constraint& cons, const VertexSet& removed)
        : t(tree), c(cons), f(root_forest(tree, removed)) {
        cost.assign(t.order(), {kInf, kInf, kInf});
        choice.assign(t.order(), {});
        for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) compute(*it);
    }

    void compute(int v) {
        const auto& ch = f.children[v];
        int deg = static_cast<int>(ch.size());
        for (int s = 0; s < 3; ++s) choice[v][s].assign(deg, -1);

        if (!c.forced_out.contains(v)) {
            int total = 1;
            for (int i = 0; i < deg; ++i) {
                int best_state = 0, best = cost[ch[i]][0];
                for (int s = 1; s < 3; ++s) {
                    if (cost[ch[i]][s] < best) {
                        best = cost[ch[i]][s];
                        best_state = s;
                    }
                }
                total = sat_add(total, best);
                choice[v][G_IN][i] = static_cast<signed char>(best_state);
            }
            cost[v][G_IN] = total;
        }

        if (!c.forced_in.contains(v) && deg > 0) {
            // Children of an out vertex may be IN or OUT_SAT only.
            std::vector<int> a(deg), b(deg);
            for (int i = 0; i < deg; ++i) {
                a[i] = cost[ch[i]][G_IN];
                b[i] = cost[ch[i]][G_OUT_SAT];
            }
            // OUT_NEED: exactly one child IN, the rest OUT_SAT.
            int inf_b = 0;
            long long sum_b = 0;
            for (int i = 0; i < deg; ++i) {
                if (b[i] >= kInf)
                    ++inf_b;
                else
                    sum_b += b[i];
            }
            int best_i = -1, best_cost = kInf;
            for (int i = 0; i < deg; ++i) {
                if (a[i] >= kInf) continue;
                int others_inf = inf_b - (b[i] >= kInf ? 1 : 0);
                if (others_inf > 0) continue;
                long long others = sum_b - (b[i] >= kInf ? 0 : b[i]);
                long long cand = others + a[i];
                if (cand < best_cost) {
                    best_cost = static_cast<int>(cand);
                    best_i = i;
                }
            }
            if (best_i >= 0) {
                cost[v][G_OUT_NEED] = best_cost;
                for (int i = 0; i < deg; ++i)
                    choice[v][G_OUT_NEED][i] =
                        static_cast<signed char>(i == best_i ? G_IN : G_OUT_SAT);
            }
            // OUT_SAT: at least two children IN. Start from per-child optimum
            // (IN preferred on ties), then flip the cheapest children to IN.
            if (deg >= 2) {
                std::vector<signed char> pick(deg);
                long long base = 0;
                int count_in = 0;
                bool feasible = true;
                for (int i = 0; i < deg; ++i) {
                    int m = std::min(a[i], b[i]);
                    if (m >= kInf) {
                        feasible = false;
                        break;
                    }
                    base += m;
                    if (a[i] <= b[i]) {
                        pick[i] = G_IN;
                        ++count_in;
                    } else {
                        pick[i] = G_OUT_SAT;
                    }
                }
                if (feasible) {
                    std::vector<std::pair<int, int>> flips;  // (penalty, child index)
                    for (int i = 0; i < deg && count_in < 2; ++i) {
                        if (pick[i] == G_OUT_SAT && a[i] < kInf) flips.emplace_back(a[i] - b[i], i);
                    }
                    std::sort(flips.begin(), flips.end());
                    int need = 2 - count_in;
                    if (need <= 0 || static_cast<int>(flips.size()) >= need) {
                        for (int k = 0; k < std::max(need, 0); ++k) {
                            base += flips[k].first;
                            pick[flips[k].second] = G_IN;
                        }
                        cost[v][G_OUT_SAT] = static_cast<int>(base);
                        choice[v][G_OUT_SAT] = pick;
                    }
                }
            }
        }
    }

    std::optional<SolveOutcome> result() const {
        SolveOutcome out;
        std::vector<std::pair<int, int>> stack;  // (vertex, state)
        for (int r : f.roots) {
            int s = (cost[r][G_IN] <= cost[r][G_OUT_SAT]) ? G_IN : G_OUT_SAT;
            if (cost[r][s] >= kInf) return std::nullopt;
            out.value += cost[r][s];
            stack.emplace_back(r, s);
        }
        while (!stack.empty()) {
            auto [v, s] = stack.back();
            stack.pop_back();
            if (s == G_IN) out.witness.insert(v);
            const auto& ch = f.children[v];
            for (std::size_t i = 0; i < ch.size(); ++i)
                stack.emplace_back(ch[i], choice[v][s][i]);
        }
        return out;
    }
};

// alpha2 states: OUT = not in S; IN_FREE = in S with no child in S (the
// parent may be in S); IN_USED = in S with exactly one child in S, of state
// IN_FREE — the parent must stay out.
enum AState : int { A_OUT = 0, A_IN_FREE = 1, A_IN_USED = 2 };

struct Alpha2Dp {
    const Tree& t;
    const Constraint& c;
    RootedForest f;
    std::vector<std::array<int, 3>> gain;
    std::vector<std::array<std::vector<signed char>, 3>> choice;

    Alpha2Dp(const Tree& tree, const Constraint& cons, const VertexSet& removed)
        : t(tree), c(cons), f(root_forest(tree, removed)) {
        gain.assign(t.order(), {-kInf, -kInf, -kInf});
        choice.assign(t.order(), {});
        for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) compute(*it);
    }

    void compute(int v) {
        const auto& ch = f.children[v];
        int deg = static_cast<int>(ch.size());
        for (int s = 0; s < 3; ++s) choice[v][s].assign(deg, -1);

        if (!c.forced_in.contains(v)) {
            int total = 0;
            for (int i = 0; i < deg; ++i) {
                int best_state = 0, best = gain[ch[i]][0];
                for (int s = 1; s < 3; ++s) {
                    if (gain[ch[i]][s] > best) {
                        best = gain[ch[i]][s];
                        best_state = s;
                    }
                }
                total = (best <= -kInf) ? -kInf : total + best;
                choice[v][A_OUT][i] = static_cast<signed char>(best_state);
            }
            gain[v][A_OUT] = total;
        }

        if (!c.forced_out.contains(v)) {
            int neg_out = 0;
            long long sum_out = 0;
            for (int i = 0; i < deg; ++i) {
                if (gain[ch[i]][A_OUT] <= -kInf)
                    ++neg_out;
                else
                    sum_out += gain[ch[i]][A_OUT];
            }
            if (neg_out == 0) {
                gain[v][A_IN_FREE] = 1 + static_cast<int>(sum_out);
                for (int i = 0; i < deg; ++i)
                    choice[v][A_IN_FREE][i] = static_cast<signed char>(A_OUT);
            }
            // IN_USED: one child switched from OUT to IN_FREE, the rest OUT.
            int best_i = -1, best_gain = -kInf;
            for (int i = 0; i < deg; ++i) {
                if (gain[ch[i]][A_IN_FREE] <= -kInf) continue;
                bool out_here = gain[ch[i]][A_OUT] <= -kInf;
                if (neg_out - (out_here ? 1 : 0) > 0) continue;
                long long others = sum_out - (out_here ? 0 : gain[ch[i]][A_OUT]);
                int cand = 1 + gain[ch[i]][A_IN_FREE] + static_cast<int>(others);
                if (cand > best_gain) {
                    best_gain = cand;
                    best_i = i;
                }
            }
            if (best_i >= 0) {
                gain[v][A_IN_USED] = best_gain;
                for (int i = 0; i < deg; ++i)
                    choice[v][A_IN_USED][i] =
                        static_cast<signed char>(i == best_i ? A_IN_FREE : A_OUT);
            }
        }
    }

    std::optional<SolveOutcome> result() const {
        SolveOutcome out;
        std::vector<std::pair<int, int>> stack;
        for (int r : f.roots) {
            int s = 0;
            for (int k = 1; k < 3; ++k)
                if (gain[r][k] > gain[r][s]) s = k;
            if (gain[r][s] <= -kInf) return std::nullopt;
            out.value += gain[r][s];
            stack.emplace_back(r, s);
        }
        while (!stack.empty()) {
            auto [v, s] = stack.back();
            stack.pop_back();
            if (s != A_OUT) out.witness.insert(v);
            const auto& ch = f.children[v];
            for (std::size_t i = 0; i < ch.size(); ++i)
                stack.emplace_back(ch[i], choice[v][s][i]);
        }
        return out;
    }
};

std::vector<std::uint32_t> adjacency_masks(const Tree& t) {
    std::vector<std::uint32_t> adj(t.order(), 0);
    for (auto [u, v] : t.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

}  // namespace

std::optional<SolveOutcome> solve_gamma2(const Tree& t, const Constraint& c) {
    return solve_gamma2(t, c, VertexSet{});
}

std::optional<SolveOutcome> solve_gamma2(const Tree& t, const Constraint& c,
                                         const VertexSet& removed) {
    check_constraint(t, c, removed);
    if (removed.size() >= t.order()) return SolveOutcome{0, {}};
    return Gamma2Dp(t, c, removed).result();
}

std::optional<SolveOutcome> solve_alpha2(const Tree& t, const Constraint& c) {
    return solve_alpha2(t, c, VertexSet{});
}

std::optional<SolveOutcome> solve_alpha2(const Tree& t, const Constraint& c,
                                         const VertexSet& removed) {
    check_constraint(t, c, removed);
    if (removed.size() >= t.order()) return SolveOutcome{0, {}};
    return Alpha2Dp(t, c, removed).result();
}

bool is_2dominating(const Tree& t, const VertexSet& s) {
    for (int v = 0; v < t.order(); ++v) {
        if (s.contains(v)) continue;
        int hits = 0;
        for (int w : t.neighbors(v))
            if (s.contains(w)) ++hits;
        if (hits < 2) return false;
    }
    return true;
}

bool is_2independent(const Tree& t, const VertexSet& s) {
    for (int v : s) {
        int hits = 0;
        for (int w : t.neighbors(v))
            if (s.contains(w)) ++hits;
        if (hits > 1) return false;
    }
    return true;
}

int brute_gamma2(const Tree& t) {
    int n = t.order();
    if (n > kBruteCap) throw TooLarge("brute_gamma2 capped at order " + std::to_string(kBruteCap));
    auto adj = adjacency_masks(t);
    int best = n;
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool ok = true;
        std::uint32_t outside = all & ~mask;
        while (outside) {
            int v = std::countr_zero(outside);
            outside &= outside - 1;
            if (std::popcount(adj[v] & mask) < 2) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

int brute_alpha2(const Tree& t) {
    int n = t.order();
    if (n > kBruteCap) throw TooLarge("brute_alpha2 capped at order " + std::to_string(kBruteCap));
    auto adj = adjacency_masks(t);
    int best = 0;
    std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        std::uint32_t inside = mask;
        while (inside) {
            int v = std::countr_zero(inside);
            inside &= inside - 1;
            if (std::popcount(adj[v] & mask) > 1) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

VertexSet find_2dom_2ind_set(const Tree& t) {
    int n = t.order();
    if (n > kBruteCap)
        throw TooLarge("find_2dom_2ind_set capped at order " + std::to_string(kBruteCap));
    std::vector<char> in_set(n, 0);
    std::vector<int> set_deg(n, 0);  // included neighbors among decided vertices

    std::function<bool(int)> search = [&](int d) -> bool {
        if (d == n) {
            for (int v = 0; v < n; ++v)
                if (!in_set[v] && set_deg[v] < 2) return false;
            return true;
        }
        // Include d first: d may have at most one included neighbor, and any
        // included neighbor must not already have an included neighbor.
        bool can_include = set_deg[d] <= 1;
        if (can_include) {
            for (int w : t.neighbors(d)) {
                if (w < d && in_set[w] && set_deg[w] >= 1) {
                    can_include = false;
                    break;
                }
            }
        }
        if (can_include) {
            in_set[d] = 1;
            for (int w : t.neighbors(d)) ++set_deg[w];
            if (search(d + 1)) return true;
            for (int w : t.neighbors(d)) --set_deg[w];
            in_set[d] = 0;
        }
        // Exclude d: it must still be able to collect two included neighbors,
        // and so must every decided excluded neighbor.
        auto open = [&](int v) {
            int potential = set_deg[v];
            for (int w : t.neighbors(v))
                if (w > d) ++potential;
            return potential >= 2;
        };
        if (!open(d)) return false;
        for (int w : t.neighbors(d))
            if (w < d && !in_set[w] && !open(w)) return false;
        return search(d + 1);
    };

    if (!search(0)) throw InternalInconsistency("no simultaneous 2-dominating 2-independent set");
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) ids.push_back(v);
    return VertexSet(ids);
}

bool in_every_gamma2_set(const Tree& t, int v) {
    auto base = solve_gamma2(t);
    Constraint c;
    c.forced_out.insert(v);
    auto constrained = solve_gamma2(t, c);
    return !constrained || constrained->value > base->value;
}

bool in_some_gamma2_set(const Tree& t, int v) {
    auto base = solve_gamma2(t);
    Constraint c;
    c.forced_in.insert(v);
    auto constrained = solve_gamma2(t, c);
    return constrained && constrained->value == base->value;
}

bool in_every_alpha2_set(const Tree& t, int v) {
    auto base = solve_alpha2(t);
    Constraint c;
    c.forced_out.insert(v);
    auto constrained = solve_alpha2(t, c);
    return !constrained || constrained->value < base->value;
}

}  // namespace twodom
