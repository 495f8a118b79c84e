#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "scw/dfa.hpp"
#include "scw/eps_nfa.hpp"

namespace scw {

inline constexpr std::size_t default_subset_cap = 2'000'000;

/// Thrown when the subset construction discovers more subsets than allowed.
class SubsetCapExceeded : public std::runtime_error {
public:
    explicit SubsetCapExceeded(std::size_t cap)
        : std::runtime_error("subset cap of " + std::to_string(cap) + " exceeded"), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// Result of the subset construction: the complete DFA plus, for each of its
/// states, the epsilon-closed set of NFA states it stands for. Labels are
/// bit rows of `words()` 64-bit words each, stored back to back.
class SubsetDfa {
public:
    SubsetDfa(Dfa dfa, std::size_t nfa_size, std::size_t words, std::vector<std::uint64_t> labels)
        : dfa_(std::move(dfa)), nfa_size_(nfa_size), words_(words), labels_(std::move(labels)) {}

    const Dfa& dfa() const noexcept { return dfa_; }
    std::size_t nfa_size() const noexcept { return nfa_size_; }
    std::size_t words() const noexcept { return words_; }

    std::vector<State> label(State q) const;
    bool label_contains(State q, State nfa_state) const {
        return (labels_[q * words_ + nfa_state / 64] >> (nfa_state % 64)) & 1U;
    }

private:
    Dfa dfa_;
    std::size_t nfa_size_;
    std::size_t words_;
    std::vector<std::uint64_t> labels_;
};

/// Subset construction over epsilon-closed subsets, breadth first from the
/// closure of the initials, letters expanded in alphabet order. The empty
/// subset, when reached, is kept as a dead state.
///
/// The OpenMP version expands one BFS level at a time in parallel and then
/// numbers the successors in the same order the serial queue would, so both
/// produce identical automata.
SubsetDfa determinize(const EpsNfa& nfa, std::size_t cap = default_subset_cap);
SubsetDfa determinize_serial(const EpsNfa& nfa, std::size_t cap = default_subset_cap);

}  // namespace scw
