#include "scw/complexity.hpp"

#include "scw/constructions.hpp"

namespace scw {

Dfa det_min(const EpsNfa& nfa, std::size_t cap) { return minimize(determinize(nfa, cap).dfa()); }

std::size_t state_complexity(const EpsNfa& nfa, std::size_t cap) { return det_min(nfa, cap).size(); }

bool equivalent(const Dfa& left, const Dfa& right) {
    // product_dfa keeps only reachable pairs, so any final pair is a witness word.
    return product_dfa(left, right, BooleanOp::SymmetricDifference).finals().empty();
}

}  // namespace scw
