#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weakdeg/graph.hpp"

namespace weakdeg {

/// A single move of a removal scheme: <u> deletes u and decrements every
/// neighbor; <u,w> deletes u along edge uw, sparing w from the decrement.
struct Move {
    enum class Kind { Delete, DeleteSave };

    Kind kind = Kind::Delete;
    VertexId u = -1;
    VertexId w = -1;  // saved vertex, DeleteSave only

    static Move del(VertexId u) { return {Kind::Delete, u, -1}; }
    static Move del_save(VertexId u, VertexId w);

    bool is_delete() const { return kind == Kind::Delete; }
    bool operator==(const Move& o) const = default;

    std::string to_string() const;
};

/// Ordered move sequence; a certificate of weak f-degeneracy when legal and
/// it removes every vertex.
struct RemovalScheme {
    std::vector<Move> moves;

    RemovalScheme() = default;
    explicit RemovalScheme(std::vector<Move> m) : moves(std::move(m)) {}

    std::size_t size() const { return moves.size(); }
    bool empty() const { return moves.empty(); }
    std::vector<VertexId> removed_vertices() const;
    /// No vertex removed twice.
    bool removed_distinct() const;

    RemovalScheme concat(const RemovalScheme& tail) const;
    bool operator==(const RemovalScheme& o) const = default;
    std::string to_string() const;
};

/// A pair (G, f). Operations treat states as immutable values.
struct State {
    Graph graph;
    Potential potential;

    State() = default;
    State(Graph g, Potential f);

    bool all_nonnegative() const { return nonneg_; }

private:
    bool nonneg_ = true;
    friend State apply_move_unchecked(const State&, const Move&);
};

struct Legality {
    bool ok = true;
    std::string reason;

    static Legality legal() { return {true, {}}; }
    static Legality illegal(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

/// f_{-U}: drop U from the domain and charge each survivor one unit per
/// deleted neighbor.
Potential f_minus_U(const Graph& g, const Potential& f, const std::set<VertexId>& U);

Legality is_legal_move(const State& s, const Move& m);

/// Precondition: is_legal_move(s, m). Throws std::invalid_argument otherwise.
State apply_move(const State& s, const Move& m);

struct SchemeFailure {
    std::size_t index;
    std::string reason;
};

struct SchemeResult {
    std::optional<State> final_state;  // set on success
    std::optional<SchemeFailure> failure;

    bool ok() const { return final_state.has_value(); }
};

/// Folds apply_move left to right; reports the first illegal move.
SchemeResult apply_scheme(const State& s, const RemovalScheme& omega);

/// True iff omega is legal for (g, f) and empties the graph.
bool verify_certificate(const Graph& g, const Potential& f, const RemovalScheme& omega);

}  // namespace weakdeg
