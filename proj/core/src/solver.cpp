#include "weakdeg/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <string>
#include <tuple>
#include <unordered_set>

namespace weakdeg::solver {

namespace {

constexpr int kMaxCompactVertices = 64;
constexpr int kMemoMaxVertices = 24;

struct BudgetExceeded {};

/// Index-compressed working copy of a state. Vertices map to bit positions in
/// id order, adjacency is one mask per vertex.
struct Compact {
    int n = 0;
    std::vector<VertexId> ids;
    std::vector<std::uint64_t> adj;
    std::vector<int> pot;
    std::uint64_t alive = 0;

    Compact(const Graph& g, const Potential& f) {
        auto vs = g.vertices();
        n = static_cast<int>(vs.size());
        if (n > kMaxCompactVertices)
            throw std::invalid_argument("weak_degenerate_decide supports at most 64 vertices");
        ids = vs;
        adj.assign(n, 0);
        pot.assign(n, 0);
        std::map<VertexId, int> index;
        for (int i = 0; i < n; ++i) index[ids[i]] = i;
        for (int i = 0; i < n; ++i) {
            pot[i] = f.get(ids[i]);
            for (VertexId w : g.neighbors(ids[i])) adj[i] |= 1ULL << index[w];
            alive |= 1ULL << i;
        }
    }

    std::uint64_t live_neighbors(int u) const { return adj[u] & alive; }
};

/// Peel by remaining degree <= current budget; returns the legal deletion
/// order (reverse of the peel order) when the live set empties.
bool compact_peel(const Compact& c, std::vector<int>* deletion_order) {
    std::uint64_t live = c.alive;
    std::vector<int> peel;
    bool progress = true;
    while (live && progress) {
        progress = false;
        for (std::uint64_t m = live; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (std::popcount(c.adj[u] & live) <= c.pot[u]) {
                peel.push_back(u);
                live &= ~(1ULL << u);
                progress = true;
            }
        }
    }
    if (live) return false;
    if (deletion_order) deletion_order->assign(peel.rbegin(), peel.rend());
    return true;
}

class DecideSearch {
public:
    DecideSearch(const Graph& g, const Potential& f, const SearchBudget& budget,
                 const SolverOptions& opts)
        : c_(g, f), budget_(budget), opts_(opts) {
        use_memo_ = opts.memoize && c_.n <= kMemoMaxVertices;
        for (int v : c_.pot) use_memo_ = use_memo_ && v >= -100 && v <= 100;
        deadline_.reset();
        if (budget.time_limit_seconds)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*budget.time_limit_seconds));
    }

    SolveResult run() {
        SolveResult res;
        try {
            bool found = c_.alive == 0 || (root_feasible() && dfs());
            res.verdict = found ? Verdict::Degenerate : Verdict::NotDegenerate;
            if (found) {
                RemovalScheme scheme;
                for (const auto& [kind, u, w] : path_)
                    scheme.moves.push_back(kind == 'd' ? Move::del(c_.ids[u])
                                                       : Move::del_save(c_.ids[u], c_.ids[w]));
                res.scheme = std::move(scheme);
            }
        } catch (const BudgetExceeded&) {
            res.verdict = Verdict::BudgetExhausted;
        }
        res.nodes_explored = nodes_;
        return res;
    }

private:
    bool root_feasible() const {
        for (int i = 0; i < c_.n; ++i)
            if (c_.pot[i] < 0) return false;
        return true;
    }

    void tick() {
        if (++nodes_ > budget_.max_nodes) throw BudgetExceeded{};
        if (deadline_ && (nodes_ & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded{};
    }

    bool zero_cluster_stuck() const {
        // A live u with pot 0, at least one live neighbor, and every live
        // neighbor at 0 can never be removed: potentials only decrease, its
        // neighbors cannot be deleted past it, and no save can reach it.
        for (std::uint64_t m = c_.alive; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (c_.pot[u] != 0) continue;
            std::uint64_t nb = c_.live_neighbors(u);
            if (!nb) continue;
            bool all_zero = true;
            for (std::uint64_t t = nb; t && all_zero;) {
                int x = std::countr_zero(t);
                t &= t - 1;
                all_zero = c_.pot[x] == 0;
            }
            if (all_zero) return true;
        }
        return false;
    }

    std::string memo_key() const {
        std::string key(reinterpret_cast<const char*>(&c_.alive), sizeof(c_.alive));
        for (std::uint64_t m = c_.alive; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            key.push_back(static_cast<char>(c_.pot[u]));
        }
        return key;
    }

    bool delete_legal(int u) const {
        for (std::uint64_t t = c_.live_neighbors(u); t;) {
            int x = std::countr_zero(t);
            t &= t - 1;
            if (c_.pot[x] == 0) return false;
        }
        return true;
    }

    bool delete_save_legal(int u, int w) const {
        if (c_.pot[u] <= c_.pot[w]) return false;
        for (std::uint64_t t = c_.live_neighbors(u); t;) {
            int x = std::countr_zero(t);
            t &= t - 1;
            if (x != w && c_.pot[x] == 0) return false;
        }
        return true;
    }

    void apply(int u, int w) {  // w = -1 for Delete
        for (std::uint64_t t = c_.live_neighbors(u); t;) {
            int x = std::countr_zero(t);
            t &= t - 1;
            if (x != w) --c_.pot[x];
        }
        c_.alive &= ~(1ULL << u);
    }

    void undo(int u, int w) {
        c_.alive |= 1ULL << u;
        for (std::uint64_t t = c_.live_neighbors(u); t;) {
            int x = std::countr_zero(t);
            t &= t - 1;
            if (x != w) ++c_.pot[x];
        }
    }

    bool dfs() {
        tick();
        if (!c_.alive) return true;
        if (opts_.zero_cluster_prune && zero_cluster_stuck()) return false;

        std::string key;
        if (use_memo_) {
            key = memo_key();
            if (failed_.count(key)) return false;
        }

        if (opts_.peel_shortcut) {
            std::vector<int> order;
            if (compact_peel(c_, &order)) {
                for (int u : order) {
                    path_.emplace_back('d', u, -1);
                    apply(u, -1);
                }
                return true;
            }
        }

        // Deletes first, ascending index.
        for (std::uint64_t m = c_.alive; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (!delete_legal(u)) continue;
            path_.emplace_back('d', u, -1);
            apply(u, -1);
            if (dfs()) return true;
            undo(u, -1);
            path_.pop_back();
        }
        // DeleteSaves: neighbors in ascending potential so shallow failures
        // show up early.
        for (std::uint64_t m = c_.alive; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            std::vector<int> targets;
            for (std::uint64_t t = c_.live_neighbors(u); t;) {
                int w = std::countr_zero(t);
                t &= t - 1;
                targets.push_back(w);
            }
            std::stable_sort(targets.begin(), targets.end(),
                             [&](int a, int b) { return c_.pot[a] < c_.pot[b]; });
            for (int w : targets) {
                if (!delete_save_legal(u, w)) continue;
                path_.emplace_back('s', u, w);
                apply(u, w);
                if (dfs()) return true;
                undo(u, w);
                path_.pop_back();
            }
        }

        if (use_memo_) failed_.insert(std::move(key));
        return false;
    }

    Compact c_;
    SearchBudget budget_;
    SolverOptions opts_;
    bool use_memo_ = false;
    std::uint64_t nodes_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<std::tuple<char, int, int>> path_;
    std::unordered_set<std::string> failed_;
};

}  // namespace

DegeneracyResult degeneracy(const Graph& g) {
    DegeneracyResult res;
    Graph work = g;
    std::vector<VertexId> peel;
    while (!work.empty()) {
        VertexId best = -1;
        int best_deg = -1;
        for (VertexId v : work.vertices()) {
            int d = work.degree(v);
            if (best < 0 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        res.value = std::max(res.value, best_deg);
        peel.push_back(best);
        work.remove_vertex(best);
    }
    res.deletion_order.assign(peel.rbegin(), peel.rend());
    return res;
}

PeelResult is_f_degenerate(const Graph& g, const Potential& f) {
    if (!f.domain_matches(g)) throw std::invalid_argument("potential domain mismatch");
    Compact c(g, f);
    std::vector<int> order;
    if (!compact_peel(c, &order)) return {false, {}};
    PeelResult res;
    res.degenerate = true;
    for (int u : order) res.deletion_order.push_back(c.ids[u]);
    return res;
}

SolveResult weak_degenerate_decide(const Graph& g, const Potential& f,
                                   const SearchBudget& budget, const SolverOptions& opts) {
    if (!f.domain_matches(g)) throw std::invalid_argument("potential domain mismatch");
    DecideSearch search(g, f, budget, opts);
    SolveResult res = search.run();
    if (res.verdict == Verdict::Degenerate) {
        if (!res.scheme || !verify_certificate(g, f, *res.scheme))
            throw std::logic_error("decide produced a scheme that fails verification");
    }
    return res;
}

WeakDegeneracyResult weak_degeneracy(const Graph& g, const SearchBudget& budget) {
    WeakDegeneracyResult res;
    if (g.empty()) {
        res.exact = 0;
        res.scheme = RemovalScheme{};
        return res;
    }
    DegeneracyResult deg = degeneracy(g);
    int lower = 0;
    if (g.num_vertices() <= 16) lower = std::max(0, chromatic_number(g) - 1);
    res.lower = lower;
    res.upper = deg.value;
    for (int k = lower; k <= deg.value; ++k) {
        SolveResult step = weak_degenerate_decide(g, Potential::constant(g, k), budget);
        res.nodes_explored += step.nodes_explored;
        if (step.verdict == Verdict::Degenerate) {
            res.exact = k;
            res.lower = res.upper = k;
            res.scheme = std::move(step.scheme);
            return res;
        }
        if (step.verdict == Verdict::BudgetExhausted) {
            res.lower = k;
            return res;
        }
    }
    throw std::logic_error("constant-d(G) level must be degenerate");
}

namespace {

bool oracle_dfs(const State& s) {
    if (s.graph.empty()) return true;
    for (VertexId u : s.graph.vertices()) {
        Move m = Move::del(u);
        if (is_legal_move(s, m) && oracle_dfs(apply_move(s, m))) return true;
    }
    for (VertexId u : s.graph.vertices()) {
        for (VertexId w : s.graph.neighbors(u)) {
            Move m = Move::del_save(u, w);
            if (is_legal_move(s, m) && oracle_dfs(apply_move(s, m))) return true;
        }
    }
    return false;
}

}  // namespace

bool oracle_weak_degenerate(const Graph& g, const Potential& f) {
    if (g.num_vertices() > 10)
        throw std::invalid_argument("oracle_weak_degenerate is capped at 10 vertices");
    if (!f.domain_matches(g)) throw std::invalid_argument("potential domain mismatch");
    return oracle_dfs(State(g, f));
}

namespace {

/// Max clique by branch and bound over bitmasks; candidates are consumed in
/// index order so each clique is enumerated once.
int max_clique(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int depth) {
    int best = depth;
    std::uint64_t m = cand;
    while (m) {
        if (depth + std::popcount(m) <= best) break;
        int v = std::countr_zero(m);
        m &= m - 1;
        best = std::max(best, max_clique(adj, m & adj[v], depth + 1));
    }
    return best;
}

bool k_colorable(const std::vector<std::uint64_t>& adj, int n, int k) {
    std::vector<int> color(n, -1);
    // New colors are introduced one at a time to break color symmetry.
    std::function<bool(int, int)> go = [&](int v, int used) -> bool {
        if (v == n) return true;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (std::uint64_t t = adj[v]; t && !clash;) {
                int x = std::countr_zero(t);
                t &= t - 1;
                clash = x < v && color[x] == c;
            }
            if (clash) continue;
            color[v] = c;
            if (go(v + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
    int n = static_cast<int>(g.num_vertices());
    if (n == 0) return 0;
    if (n > 16) throw std::invalid_argument("chromatic_number is capped at 16 vertices");
    auto vs = g.vertices();
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[vs[i]] = i;
    // Order by descending degree; helps both bounds.
    std::stable_sort(vs.begin(), vs.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    std::map<VertexId, int> order;
    for (int i = 0; i < n; ++i) order[vs[i]] = i;
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[order[u]] |= 1ULL << order[v];
        adj[order[v]] |= 1ULL << order[u];
    }
    std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    int lower = std::max(1, max_clique(adj, all, 0));
    for (int k = lower; k <= n; ++k)
        if (k_colorable(adj, n, k)) return k;
    return n;
}

}  // namespace weakdeg::solver
