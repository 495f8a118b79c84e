#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scw/transformation.hpp"

namespace scw {

/// Complete deterministic automaton. Letters are single printable
/// characters; `alphabet()` keeps declaration order, and `delta(i)` is the
/// transformation of the i-th letter.
class Dfa {
public:
    Dfa(std::size_t size, std::string alphabet, std::vector<Transformation> delta, State initial,
        std::vector<State> finals);

    std::size_t size() const noexcept { return size_; }
    const std::string& alphabet() const noexcept { return alphabet_; }
    std::size_t letter_count() const noexcept { return alphabet_.size(); }

    /// Position of `letter` in the alphabet; throws std::invalid_argument for unknown letters.
    std::size_t letter_index(char letter) const;
    bool has_letter(char letter) const noexcept;

    const Transformation& delta(std::size_t letter_index) const { return delta_[letter_index]; }
    const Transformation& delta_of(char letter) const { return delta_[letter_index(letter)]; }
    const std::vector<Transformation>& deltas() const noexcept { return delta_; }
    State next(State q, std::size_t letter_index) const { return delta_[letter_index](q); }

    State initial() const noexcept { return initial_; }
    /// Ascending, duplicate-free.
    const std::vector<State>& finals() const noexcept { return finals_; }
    bool is_final(State q) const { return final_mask_[q]; }

    bool operator==(const Dfa& other) const {
        return size_ == other.size_ && alphabet_ == other.alphabet_ && delta_ == other.delta_ &&
               initial_ == other.initial_ && finals_ == other.finals_;
    }

private:
    std::size_t size_;
    std::string alphabet_;
    std::vector<Transformation> delta_;
    State initial_;
    std::vector<State> finals_;
    std::vector<bool> final_mask_;
};

/// Renames letters: the result's transformation for pi(x) is the input's
/// transformation for x. The alphabet order is unchanged.
Dfa permute_letters(const Dfa& d, const std::map<char, char>& pi);

/// Convenience form: the i-th letter of the alphabet is renamed to image[i].
Dfa permute_letters(const Dfa& d, std::string_view image);

Dfa complement(const Dfa& d);

/// Restriction to a subset of the alphabet (drops the other letters and their rows).
Dfa project(const Dfa& d, std::string_view letters);

State reach(const Dfa& d, std::string_view word);
bool run(const Dfa& d, std::string_view word);

}  // namespace scw
