#pragma once

// Shared helpers for the unit tests: seeded random automata and word enumeration.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "scw/dfa.hpp"
#include "scw/eps_nfa.hpp"

namespace scw::test {

inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n, const std::string& alphabet) {
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::vector<Transformation> delta;
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
        std::vector<State> image(n);
        for (auto& s : image) s = pick(rng);
        delta.push_back(Transformation::from_image(std::move(image)));
    }
    std::vector<State> finals;
    for (State q = 0; q < n; ++q)
        if (rng() % 3 == 0) finals.push_back(q);
    return Dfa(n, alphabet, std::move(delta), pick(rng), std::move(finals));
}

inline EpsNfa random_nfa(std::mt19937_64& rng, std::size_t n, const std::string& alphabet, bool epsilon) {
    EpsNfa a(n, alphabet);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    for (State q = 0; q < n; ++q) {
        for (std::size_t x = 0; x < alphabet.size(); ++x)
            for (int k = static_cast<int>(rng() % 3); k > 0; --k) a.add_move(q, x, pick(rng));
        if (epsilon && rng() % 4 == 0) a.add_epsilon(q, pick(rng));
        if (rng() % 3 == 0) a.add_final(q);
    }
    a.add_initial(pick(rng));
    if (rng() % 2) a.add_initial(pick(rng));
    return a;
}

/// Calls f on every word over `alphabet` of length <= max_length, shortest first.
inline void for_each_word(const std::string& alphabet, std::size_t max_length,
                          const std::function<void(const std::string&)>& f) {
    std::vector<std::string> layer{""};
    for (std::size_t len = 0; len <= max_length; ++len) {
        std::vector<std::string> next;
        for (const auto& w : layer) {
            f(w);
            if (len < max_length)
                for (char c : alphabet) next.push_back(w + c);
        }
        layer = std::move(next);
    }
}

/// Table-filling distinguishability over reachable states: the textbook
/// quadratic algorithm, independent of the refinement code under test.
inline std::size_t table_filling_size(const Dfa& d) {
    std::vector<bool> reachable(d.size(), false);
    std::vector<State> stack{d.initial()};
    reachable[d.initial()] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (std::size_t x = 0; x < d.letter_count(); ++x) {
            State r = d.next(q, x);
            if (!reachable[r]) {
                reachable[r] = true;
                stack.push_back(r);
            }
        }
    }
    const std::size_t n = d.size();
    std::vector<bool> marked(n * n, false);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) marked[p * n + q] = d.is_final(p) != d.is_final(q);
    for (bool changed = true; changed;) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q) {
                if (marked[p * n + q]) continue;
                for (std::size_t x = 0; x < d.letter_count(); ++x)
                    if (marked[d.next(p, x) * n + d.next(q, x)]) {
                        marked[p * n + q] = true;
                        changed = true;
                        break;
                    }
            }
    }
    std::size_t classes = 0;
    std::vector<bool> seen(n, false);
    for (State p = 0; p < n; ++p) {
        if (!reachable[p] || seen[p]) continue;
        ++classes;
        for (State q = p; q < n; ++q)
            if (reachable[q] && !marked[p * n + q]) seen[q] = true;
    }
    return classes;
}

}  // namespace scw::test
