#pragma once

#include <cstdint>
#include <optional>

#include "weakdeg/scheme.hpp"

namespace weakdeg::solver {

struct SearchBudget {
    std::uint64_t max_nodes = 20'000'000;
    std::optional<double> time_limit_seconds;
};

enum class Verdict { Degenerate, NotDegenerate, BudgetExhausted };

struct SolveResult {
    Verdict verdict = Verdict::NotDegenerate;
    std::optional<RemovalScheme> scheme;  // present iff Degenerate; passes verify_certificate
    std::uint64_t nodes_explored = 0;
};

/// Pruning toggles. Each rule is verdict-neutral; the toggles exist so tests
/// can prove that.
struct SolverOptions {
    bool peel_shortcut = true;      // finish plainly degenerate states at once
    bool zero_cluster_prune = true; // f=0 vertex whose live neighborhood is all 0 is stuck
    bool memoize = true;            // cache failed (vertex set, potential) states, |V| <= 24
};

struct DegeneracyResult {
    int value = 0;
    /// Deleting in this order keeps potentials nonnegative under f = value.
    std::vector<VertexId> deletion_order;
};

/// Classical degeneracy d(G) by minimum-degree peeling.
DegeneracyResult degeneracy(const Graph& g);

struct PeelResult {
    bool degenerate = false;
    std::vector<VertexId> deletion_order;  // legal Delete order when degenerate
};

/// Plain f-degeneracy (Delete moves only). Polynomial: peel any vertex whose
/// remaining degree is at most its budget; feasibility is hereditary, so the
/// peel order cannot matter.
PeelResult is_f_degenerate(const Graph& g, const Potential& f);

/// Complete backtracking over legal moves. A Degenerate verdict carries a
/// verified scheme; NotDegenerate means the search was exhaustive.
SolveResult weak_degenerate_decide(const Graph& g, const Potential& f,
                                   const SearchBudget& budget = {},
                                   const SolverOptions& opts = {});

struct WeakDegeneracyResult {
    std::optional<int> exact;
    int lower = 0;  // wd is in [lower, upper] when exact is unset
    int upper = 0;
    std::optional<RemovalScheme> scheme;  // certificate at the exact level
    std::uint64_t nodes_explored = 0;
};

/// wd(G): ascends from the cheap lower bound; d(G) always succeeds, so the
/// result is exact unless some level exhausts the budget.
WeakDegeneracyResult weak_degeneracy(const Graph& g, const SearchBudget& budget = {});

/// Ground truth for cross-validation: plain depth-first enumeration of every
/// legal move with no pruning, ordering heuristics, or caching. |V| <= 10.
bool oracle_weak_degenerate(const Graph& g, const Potential& f);

/// Exact chromatic number for small graphs (|V| <= 16).
int chromatic_number(const Graph& g);

}  // namespace weakdeg::solver
