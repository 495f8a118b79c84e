#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scw/transformation.hpp"

namespace scw {

/// Nondeterministic automaton with epsilon edges and a set of initial states.
/// Edge lists are kept sorted and duplicate-free.
class EpsNfa {
public:
    EpsNfa(std::size_t size, std::string alphabet);

    std::size_t size() const noexcept { return size_; }
    const std::string& alphabet() const noexcept { return alphabet_; }
    std::size_t letter_count() const noexcept { return alphabet_.size(); }
    std::size_t letter_index(char letter) const;

    void add_move(State from, std::size_t letter, State to);
    void add_epsilon(State from, State to);
    void add_initial(State q);
    void add_final(State q);

    const std::vector<State>& moves(State from, std::size_t letter) const {
        return moves_[from * alphabet_.size() + letter];
    }
    const std::vector<State>& epsilon(State from) const { return epsilon_[from]; }
    const std::vector<State>& initials() const noexcept { return initials_; }
    const std::vector<State>& finals() const noexcept { return finals_; }
    bool is_final(State q) const;
    bool has_epsilon() const noexcept;

    /// Epsilon closure of `states`, ascending.
    std::vector<State> closure(std::vector<State> states) const;

    /// Direct simulation on sets of states.
    bool accepts(std::string_view word) const;

private:
    void check(State q) const;

    std::size_t size_;
    std::string alphabet_;
    std::vector<std::vector<State>> moves_;
    std::vector<std::vector<State>> epsilon_;
    std::vector<State> initials_;
    std::vector<State> finals_;
};

}  // namespace scw
