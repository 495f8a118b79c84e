#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "scw/dfa.hpp"
#include "scw/eps_nfa.hpp"

namespace scw {

enum class BooleanOp { Union, Intersection, Difference, SymmetricDifference };

/// Difference is left \ right.
constexpr bool combine(BooleanOp op, bool left, bool right) noexcept {
    switch (op) {
        case BooleanOp::Union: return left || right;
        case BooleanOp::Intersection: return left && right;
        case BooleanOp::Difference: return left && !right;
        case BooleanOp::SymmetricDifference: return left != right;
    }
    return false;
}

std::string_view to_string(BooleanOp op) noexcept;
std::optional<BooleanOp> parse_boolean_op(std::string_view name) noexcept;

EpsNfa dfa_to_nfa(const Dfa& d);

/// NFA for L(d)*: a fresh state s (index d.size()) is the only initial state,
/// is final, and copies the outgoing edges of d's initial state; every final
/// state of d gets an epsilon edge back to d's initial state.
EpsNfa star_nfa(const Dfa& d);

/// Same construction, but the epsilon edges back to the initial state leave
/// from `returns` instead of the final states. The finals of d stay final, so
/// the language is (L(d) with finals `returns`)* L(d).
EpsNfa star_nfa(const Dfa& d, std::span<const State> returns);

/// Star of an arbitrary epsilon-NFA: fresh initial and final s with the moves
/// of the initial closure; each final gets epsilon edges to every initial.
EpsNfa star_nfa(const EpsNfa& a);

/// Disjoint union with right shifted by left.size(); epsilon edges from every
/// left final to every right initial. Left finals stop being final.
EpsNfa concat_nfa(const EpsNfa& left, const EpsNfa& right);

/// Disjoint union, right shifted by left.size(); initials and finals of both kept.
EpsNfa union_nfa(const EpsNfa& left, const EpsNfa& right);

/// Edges reversed; initials are d's finals, the only final is d's initial.
EpsNfa reverse_nfa(const Dfa& d);

/// Product automaton restricted to the pairs reachable from (initial, initial),
/// numbered in BFS order. Pair (p, q) is final iff combine(op, p final, q final).
Dfa product_dfa(const Dfa& left, const Dfa& right, BooleanOp op);

}  // namespace scw
