#include "weakdeg/scheme.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace weakdeg {

Move Move::del_save(VertexId u, VertexId w) {
    if (u == w) throw std::invalid_argument("DeleteSave requires u != w");
    return {Kind::DeleteSave, u, w};
}

std::string Move::to_string() const {
    if (is_delete()) return "<" + std::to_string(u) + ">";
    return "<" + std::to_string(u) + "," + std::to_string(w) + ">";
}

std::vector<VertexId> RemovalScheme::removed_vertices() const {
    std::vector<VertexId> out;
    out.reserve(moves.size());
    for (const Move& m : moves) out.push_back(m.u);
    return out;
}

bool RemovalScheme::removed_distinct() const {
    auto removed = removed_vertices();
    std::sort(removed.begin(), removed.end());
    return std::adjacent_find(removed.begin(), removed.end()) == removed.end();
}

RemovalScheme RemovalScheme::concat(const RemovalScheme& tail) const {
    RemovalScheme out = *this;
    out.moves.insert(out.moves.end(), tail.moves.begin(), tail.moves.end());
    return out;
}

std::string RemovalScheme::to_string() const {
    std::string out = "Del(";
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (i) out += ",";
        out += moves[i].to_string();
    }
    return out + ")";
}

State::State(Graph g, Potential f) : graph(std::move(g)), potential(std::move(f)) {
    if (!potential.domain_matches(graph))
        throw std::invalid_argument("potential domain does not match vertex set");
    nonneg_ = potential.all_nonnegative();
}

Potential f_minus_U(const Graph& g, const Potential& f, const std::set<VertexId>& U) {
    for (VertexId v : U)
        if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex in U: " + std::to_string(v));
    std::map<VertexId, int> vals;
    for (const auto& [v, fv] : f.values()) {
        if (U.count(v)) continue;
        int lost = 0;
        for (VertexId w : g.neighbors(v)) lost += U.count(w) ? 1 : 0;
        vals[v] = fv - lost;
    }
    return Potential(std::move(vals));
}

Legality is_legal_move(const State& s, const Move& m) {
    if (!s.graph.has_vertex(m.u))
        return Legality::illegal("vertex " + std::to_string(m.u) + " not in graph");
    // The cached flag covers every vertex; per-move checks below only need to
    // look at u's neighborhood. Debug builds re-scan.
    assert(s.all_nonnegative() == s.potential.all_nonnegative());
    if (!s.all_nonnegative()) return Legality::illegal("negative potential present");

    if (m.is_delete()) {
        for (VertexId x : s.graph.neighbors(m.u)) {
            if (s.potential.get(x) - 1 < 0)
                return Legality::illegal("f_{-" + std::to_string(m.u) + "}(" + std::to_string(x) + ") = -1");
        }
        return Legality::legal();
    }

    // DeleteSave(u, w)
    if (!s.graph.has_vertex(m.w))
        return Legality::illegal("vertex " + std::to_string(m.w) + " not in graph");
    if (!s.graph.has_edge(m.u, m.w))
        return Legality::illegal("not an edge: " + std::to_string(m.u) + "-" + std::to_string(m.w));
    if (s.potential.get(m.u) <= s.potential.get(m.w))
        return Legality::illegal("f(u) > f(w) fails");
    for (VertexId x : s.graph.neighbors(m.u)) {
        if (x == m.w) continue;  // the save cancels w's decrement
        if (s.potential.get(x) - 1 < 0)
            return Legality::illegal("f_{-" + std::to_string(m.u) + "}+d_w(" + std::to_string(x) + ") = -1");
    }
    return Legality::legal();
}

State apply_move_unchecked(const State& s, const Move& m) {
    State out;
    out.graph = s.graph;
    out.potential = s.potential;
    for (VertexId x : s.graph.neighbors(m.u)) {
        int delta = (!m.is_delete() && x == m.w) ? 0 : 1;
        if (delta) out.potential.set(x, out.potential.get(x) - delta);
    }
    out.graph.remove_vertex(m.u);
    out.potential.erase(m.u);
    out.nonneg_ = out.potential.all_nonnegative();
    return out;
}

State apply_move(const State& s, const Move& m) {
    Legality verdict = is_legal_move(s, m);
    if (!verdict) throw std::invalid_argument("illegal move " + m.to_string() + ": " + verdict.reason);
    return apply_move_unchecked(s, m);
}

SchemeResult apply_scheme(const State& s, const RemovalScheme& omega) {
    State cur = s;
    for (std::size_t i = 0; i < omega.moves.size(); ++i) {
        Legality verdict = is_legal_move(cur, omega.moves[i]);
        if (!verdict) return {std::nullopt, SchemeFailure{i, verdict.reason}};
        cur = apply_move_unchecked(cur, omega.moves[i]);
    }
    return {std::move(cur), std::nullopt};
}

bool verify_certificate(const Graph& g, const Potential& f, const RemovalScheme& omega) {
    if (!f.domain_matches(g)) return false;
    SchemeResult res = apply_scheme(State(g, f), omega);
    return res.ok() && res.final_state->graph.empty();
}

}  // namespace weakdeg
