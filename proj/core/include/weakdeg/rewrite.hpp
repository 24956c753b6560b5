#pragma once

#include "weakdeg/scheme.hpp"

namespace weakdeg {

/// Swaps moves i and i+1 of a scheme that is legal for s. Applicable when the
/// pair matches one of three patterns:
///   1. <u>,<v>   with u,v non-adjacent        -> <v>,<u>
///   2. <u,w>,<v> with u,v non-adjacent        -> <v>,<u,w>
///   3. <u,v>,<v>                              -> <v>,<u>
/// The rewritten scheme is legal for s and reaches the same final state;
/// both facts are re-checked before returning.
/// Throws std::invalid_argument when no pattern applies.
RemovalScheme commute(const RemovalScheme& omega, std::size_t i, const State& s);

/// f(v) = 0 pivot between certificates of (G, f) and (G - v, f_{-v}).
/// to_smaller = false: omega certifies (G - v, f_{-v}); returns <v> + omega
///   certifying (G, f).
/// to_smaller = true: omega certifies (G, f); v's own move is dropped and
///   every earlier <u,v> becomes <u>; the result certifies (G - v, f_{-v}).
/// Output is re-verified; a failure is reported as std::logic_error.
RemovalScheme eliminate_zero_vertex(const Graph& g, const Potential& f, VertexId v,
                                    const RemovalScheme& omega, bool to_smaller);

/// Glues a certificate for (G[U], f|_U) in front of one for (G - U, f_{-U}),
/// yielding a certificate for (G, f). Inputs and output are verified.
RemovalScheme compose_schemes(const Graph& g, const Potential& f, const std::set<VertexId>& U,
                              const RemovalScheme& omega_U, const RemovalScheme& omega_rest);

/// Rewrites a certificate for (g, f) into one for (g, h) where h >= f
/// pointwise: each DeleteSave is kept while the larger potential still
/// satisfies h(u) > h(w) and downgraded to a plain Delete otherwise.
RemovalScheme lift_scheme(const Graph& g, const Potential& f, const Potential& h,
                          const RemovalScheme& omega);

}  // namespace weakdeg
