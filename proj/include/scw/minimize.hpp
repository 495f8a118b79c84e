#pragma once

#include <vector>

#include "scw/dfa.hpp"

namespace scw {

/// Class index per state, classes numbered by first occurrence in state order.
/// Two refinements of the same automaton produce equal vectors exactly when
/// they describe the same partition.
using Partition = std::vector<State>;

/// Coarsest partition of all states (reachable or not) into language-equivalence classes.
Partition refine_hopcroft(const Dfa& d);
/// Round-based refinement; the OpenMP version computes each round's state
/// signatures in parallel. Both must agree with refine_hopcroft.
Partition refine_moore(const Dfa& d);
Partition refine_moore_serial(const Dfa& d);

std::size_t class_count(const Partition& p);

/// Drops unreachable states; survivors are renumbered in BFS order.
Dfa trim_unreachable(const Dfa& d);

/// Quotient by `classes`, with states renumbered by BFS from the initial
/// class in alphabet order.
Dfa canonical_quotient(const Dfa& d, const Partition& classes);

enum class Refinement { Hopcroft, Moore, MooreSerial };

/// Minimal complete DFA in canonical BFS numbering.
Dfa minimize(const Dfa& d, Refinement how = Refinement::Hopcroft);

/// All states reachable and pairwise distinguishable.
bool is_minimal(const Dfa& d);

}  // namespace scw
