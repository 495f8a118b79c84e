#include "scw/eps_nfa.hpp"

#include <algorithm>
#include <stdexcept>

namespace scw {

namespace {

void insert_sorted(std::vector<State>& v, State q) {
    auto it = std::lower_bound(v.begin(), v.end(), q);
    if (it == v.end() || *it != q) v.insert(it, q);
}

}  // namespace

EpsNfa::EpsNfa(std::size_t size, std::string alphabet)
    : size_(size),
      alphabet_(std::move(alphabet)),
      moves_(size * alphabet_.size()),
      epsilon_(size) {
    if (size_ == 0) throw std::invalid_argument("nfa must have at least one state");
}

std::size_t EpsNfa::letter_index(char letter) const {
    auto pos = alphabet_.find(letter);
    if (pos == std::string::npos)
        throw std::invalid_argument(std::string("unknown letter '") + letter + "'");
    return pos;
}

void EpsNfa::check(State q) const {
    if (q >= size_) throw std::out_of_range("nfa state " + std::to_string(q) + " out of range");
}

void EpsNfa::add_move(State from, std::size_t letter, State to) {
    check(from);
    check(to);
    if (letter >= alphabet_.size()) throw std::out_of_range("letter index out of range");
    insert_sorted(moves_[from * alphabet_.size() + letter], to);
}

void EpsNfa::add_epsilon(State from, State to) {
    check(from);
    check(to);
    insert_sorted(epsilon_[from], to);
}

void EpsNfa::add_initial(State q) {
    check(q);
    insert_sorted(initials_, q);
}

void EpsNfa::add_final(State q) {
    check(q);
    insert_sorted(finals_, q);
}

bool EpsNfa::is_final(State q) const { return std::binary_search(finals_.begin(), finals_.end(), q); }

bool EpsNfa::has_epsilon() const noexcept {
    return std::any_of(epsilon_.begin(), epsilon_.end(), [](const auto& e) { return !e.empty(); });
}

std::vector<State> EpsNfa::closure(std::vector<State> states) const {
    std::vector<bool> seen(size_, false);
    std::vector<State> stack;
    for (State q : states) {
        check(q);
        if (!seen[q]) {
            seen[q] = true;
            stack.push_back(q);
        }
    }
    std::vector<State> out;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        out.push_back(q);
        for (State r : epsilon_[q]) {
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool EpsNfa::accepts(std::string_view word) const {
    auto current = closure(initials_);
    for (char c : word) {
        const auto x = letter_index(c);
        std::vector<State> next;
        for (State q : current) {
            const auto& m = moves(q, x);
            next.insert(next.end(), m.begin(), m.end());
        }
        current = closure(std::move(next));
    }
    return std::any_of(current.begin(), current.end(), [this](State q) { return is_final(q); });
}

}  // namespace scw
