#include "weakdeg/rewrite.hpp"

#include <algorithm>

namespace weakdeg {

namespace {

bool same_state(const State& a, const State& b) {
    return a.graph == b.graph && a.potential == b.potential;
}

[[noreturn]] void reverify_failed(const char* op) {
    throw std::logic_error(std::string(op) + ": rewritten scheme failed re-verification");
}

}  // namespace

RemovalScheme commute(const RemovalScheme& omega, std::size_t i, const State& s) {
    if (i + 1 >= omega.moves.size())
        throw std::invalid_argument("commute: index has no successor move");

    // Walk to the state the pair acts on.
    RemovalScheme prefix(std::vector<Move>(omega.moves.begin(), omega.moves.begin() + i));
    SchemeResult before = apply_scheme(s, prefix);
    if (!before.ok()) throw std::invalid_argument("commute: scheme prefix illegal");
    const State& at = *before.final_state;

    const Move& a = omega.moves[i];
    const Move& b = omega.moves[i + 1];

    std::vector<Move> pair;
    if (b.is_delete() && !at.graph.has_edge(a.u, b.u)) {
        // patterns 1 and 2: second move independent of the first
        pair = {b, a};
    } else if (!a.is_delete() && b.is_delete() && a.w == b.u) {
        // pattern 3: the saved vertex is deleted next anyway
        pair = {Move::del(a.w), Move::del(a.u)};
    } else {
        throw std::invalid_argument("commute: pattern not applicable at index " + std::to_string(i));
    }

    SchemeResult old_run = apply_scheme(s, omega);
    if (!old_run.ok()) throw std::invalid_argument("commute: input scheme illegal for s");

    RemovalScheme out = omega;
    out.moves[i] = pair[0];
    out.moves[i + 1] = pair[1];

    SchemeResult new_run = apply_scheme(s, out);
    if (!new_run.ok() || !same_state(*old_run.final_state, *new_run.final_state))
        reverify_failed("commute");
    return out;
}

RemovalScheme eliminate_zero_vertex(const Graph& g, const Potential& f, VertexId v,
                                    const RemovalScheme& omega, bool to_smaller) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    if (f.get(v) != 0) throw std::invalid_argument("eliminate_zero_vertex requires f(v) = 0");

    Graph g_small = g;
    g_small.remove_vertex(v);
    Potential f_small = f_minus_U(g, f, {v});

    if (!to_smaller) {
        if (!verify_certificate(g_small, f_small, omega))
            throw std::invalid_argument("scheme does not certify (G - v, f_{-v})");
        RemovalScheme out;
        out.moves.push_back(Move::del(v));
        out.moves.insert(out.moves.end(), omega.moves.begin(), omega.moves.end());
        if (!verify_certificate(g, f, out)) reverify_failed("eliminate_zero_vertex");
        return out;
    }

    if (!verify_certificate(g, f, omega))
        throw std::invalid_argument("scheme does not certify (G, f)");
    auto it = std::find_if(omega.moves.begin(), omega.moves.end(),
                           [v](const Move& m) { return m.u == v; });
    // f(v) = 0 forces v to go by a plain Delete: a DeleteSave <v,w> would need
    // f(v) > f(w) >= 0.
    if (it == omega.moves.end() || !it->is_delete())
        throw std::logic_error("eliminate_zero_vertex: certified zero vertex not plainly deleted");

    RemovalScheme out;
    for (auto cur = omega.moves.begin(); cur != omega.moves.end(); ++cur) {
        if (cur == it) continue;
        Move m = *cur;
        if (cur < it && !m.is_delete() && m.w == v) m = Move::del(m.u);
        out.moves.push_back(m);
    }
    if (!verify_certificate(g_small, f_small, out)) reverify_failed("eliminate_zero_vertex");
    return out;
}

RemovalScheme compose_schemes(const Graph& g, const Potential& f, const std::set<VertexId>& U,
                              const RemovalScheme& omega_U, const RemovalScheme& omega_rest) {
    Graph inside = g.induced(U);
    Potential f_inside = f.restrict(U);
    if (!verify_certificate(inside, f_inside, omega_U))
        throw std::invalid_argument("compose_schemes: scheme for G[U] invalid");

    Graph outside = g.minus(U);
    Potential f_outside = f_minus_U(g, f, U);
    if (!verify_certificate(outside, f_outside, omega_rest))
        throw std::invalid_argument("compose_schemes: scheme for G - U invalid");

    RemovalScheme out = omega_U.concat(omega_rest);
    if (!verify_certificate(g, f, out)) reverify_failed("compose_schemes");
    return out;
}

RemovalScheme lift_scheme(const Graph& g, const Potential& f, const Potential& h,
                          const RemovalScheme& omega) {
    if (!h.domain_matches(g)) throw std::invalid_argument("lift_scheme: domain of h mismatched");
    for (const auto& [v, fv] : f.values())
        if (h.get(v) < fv) throw std::invalid_argument("lift_scheme requires h >= f pointwise");
    if (!verify_certificate(g, f, omega))
        throw std::invalid_argument("lift_scheme: scheme does not certify (g, f)");

    State low(g, f);
    State high(g, h);
    RemovalScheme out;
    for (const Move& m : omega.moves) {
        Move lifted = m;
        if (!m.is_delete() && high.potential.get(m.u) <= high.potential.get(m.w))
            lifted = Move::del(m.u);
        out.moves.push_back(lifted);
        low = apply_move(low, m);
        high = apply_move(high, lifted);
    }
    if (!verify_certificate(g, h, out)) reverify_failed("lift_scheme");
    return out;
}

}  // namespace weakdeg
