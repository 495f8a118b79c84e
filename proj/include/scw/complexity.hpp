#pragma once

#include "scw/determinize.hpp"
#include "scw/minimize.hpp"

namespace scw {

/// minimize(determinize(nfa)).
Dfa det_min(const EpsNfa& nfa, std::size_t cap = default_subset_cap);

/// Number of states of the minimal complete DFA of L(nfa).
std::size_t state_complexity(const EpsNfa& nfa, std::size_t cap = default_subset_cap);

/// L(left) == L(right), decided by emptiness of the symmetric-difference product.
bool equivalent(const Dfa& left, const Dfa& right);

}  // namespace scw
