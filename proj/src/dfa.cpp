#include "scw/dfa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace scw {

namespace {

void check_alphabet(const std::string& alphabet) {
    std::set<char> seen;
    for (char c : alphabet) {
        if (c <= ' ' || c > '~') throw std::invalid_argument("alphabet letters must be printable");
        if (!seen.insert(c).second)
            throw std::invalid_argument(std::string("duplicate letter '") + c + "'");
    }
}

}  // namespace

Dfa::Dfa(std::size_t size, std::string alphabet, std::vector<Transformation> delta, State initial,
         std::vector<State> finals)
    : size_(size),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(std::move(finals)) {
    if (size_ == 0) throw std::invalid_argument("dfa must have at least one state");
    check_alphabet(alphabet_);
    if (delta_.size() != alphabet_.size()) throw std::invalid_argument("incomplete delta");
    for (const auto& t : delta_) {
        if (t.degree() != size_) throw std::invalid_argument("incomplete delta");
    }
    if (initial_ >= size_) throw std::out_of_range("initial state out of range");
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    final_mask_.assign(size_, false);
    for (State f : finals_) {
        if (f >= size_) throw std::out_of_range("final state out of range");
        final_mask_[f] = true;
    }
}

std::size_t Dfa::letter_index(char letter) const {
    auto pos = alphabet_.find(letter);
    if (pos == std::string::npos)
        throw std::invalid_argument(std::string("unknown letter '") + letter + "'");
    return pos;
}

bool Dfa::has_letter(char letter) const noexcept {
    return alphabet_.find(letter) != std::string::npos;
}

Dfa permute_letters(const Dfa& d, const std::map<char, char>& pi) {
    const auto& sigma = d.alphabet();
    if (pi.size() != sigma.size()) throw std::invalid_argument("permutation must cover the alphabet");
    std::set<char> targets;
    for (auto [from, to] : pi) {
        if (!d.has_letter(from) || !d.has_letter(to))
            throw std::invalid_argument("permutation uses letters outside the alphabet");
        targets.insert(to);
    }
    if (targets.size() != sigma.size()) throw std::invalid_argument("permutation is not a bijection");

    std::vector<Transformation> delta(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        delta[d.letter_index(pi.at(sigma[i]))] = d.delta(i);
    }
    return Dfa(d.size(), sigma, std::move(delta), d.initial(), d.finals());
}

Dfa permute_letters(const Dfa& d, std::string_view image) {
    if (image.size() != d.letter_count())
        throw std::invalid_argument("permutation must cover the alphabet");
    std::map<char, char> pi;
    for (std::size_t i = 0; i < image.size(); ++i) pi[d.alphabet()[i]] = image[i];
    return permute_letters(d, pi);
}

Dfa complement(const Dfa& d) {
    std::vector<State> finals;
    for (State q = 0; q < d.size(); ++q)
        if (!d.is_final(q)) finals.push_back(q);
    return Dfa(d.size(), d.alphabet(), d.deltas(), d.initial(), std::move(finals));
}

Dfa project(const Dfa& d, std::string_view letters) {
    std::string alphabet;
    std::vector<Transformation> delta;
    for (std::size_t i = 0; i < d.letter_count(); ++i) {
        if (letters.find(d.alphabet()[i]) != std::string_view::npos) {
            alphabet += d.alphabet()[i];
            delta.push_back(d.delta(i));
        }
    }
    for (char c : letters) d.letter_index(c);
    return Dfa(d.size(), std::move(alphabet), std::move(delta), d.initial(), d.finals());
}

State reach(const Dfa& d, std::string_view word) {
    State q = d.initial();
    for (char c : word) q = d.next(q, d.letter_index(c));
    return q;
}

bool run(const Dfa& d, std::string_view word) { return d.is_final(reach(d, word)); }

}  // namespace scw
