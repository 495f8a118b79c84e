#include "scw/constructions.hpp"

#include <stdexcept>
#include <unordered_map>

namespace scw {

std::string_view to_string(BooleanOp op) noexcept {
    switch (op) {
        case BooleanOp::Union: return "union";
        case BooleanOp::Intersection: return "intersection";
        case BooleanOp::Difference: return "difference";
        case BooleanOp::SymmetricDifference: return "symdiff";
    }
    return "?";
}

std::optional<BooleanOp> parse_boolean_op(std::string_view name) noexcept {
    if (name == "union") return BooleanOp::Union;
    if (name == "intersection") return BooleanOp::Intersection;
    if (name == "difference") return BooleanOp::Difference;
    if (name == "symdiff" || name == "symmetric-difference") return BooleanOp::SymmetricDifference;
    return std::nullopt;
}

EpsNfa dfa_to_nfa(const Dfa& d) {
    EpsNfa n(d.size(), d.alphabet());
    for (State q = 0; q < d.size(); ++q)
        for (std::size_t x = 0; x < d.letter_count(); ++x) n.add_move(q, x, d.next(q, x));
    n.add_initial(d.initial());
    for (State f : d.finals()) n.add_final(f);
    return n;
}

namespace {

void copy_edges(EpsNfa& into, const EpsNfa& part, State offset) {
    for (State q = 0; q < part.size(); ++q) {
        for (std::size_t x = 0; x < part.letter_count(); ++x)
            for (State r : part.moves(q, x)) into.add_move(q + offset, x, r + offset);
        for (State r : part.epsilon(q)) into.add_epsilon(q + offset, r + offset);
    }
}

}  // namespace

EpsNfa star_nfa(const Dfa& d) { return star_nfa(d, d.finals()); }

EpsNfa star_nfa(const Dfa& d, std::span<const State> returns) {
    const auto s = static_cast<State>(d.size());
    EpsNfa n(d.size() + 1, d.alphabet());
    for (State q = 0; q < d.size(); ++q)
        for (std::size_t x = 0; x < d.letter_count(); ++x) n.add_move(q, x, d.next(q, x));
    for (std::size_t x = 0; x < d.letter_count(); ++x) n.add_move(s, x, d.next(d.initial(), x));
    for (State r : returns) {
        if (r >= d.size()) throw std::out_of_range("star_nfa: return state out of range");
        n.add_epsilon(r, d.initial());
    }
    for (State f : d.finals()) n.add_final(f);
    n.add_final(s);
    n.add_initial(s);
    return n;
}

EpsNfa star_nfa(const EpsNfa& a) {
    const auto s = static_cast<State>(a.size());
    EpsNfa n(a.size() + 1, a.alphabet());
    copy_edges(n, a, 0);
    // s reads like the closure of the initial states without entering it
    const auto start = a.closure(a.initials());
    for (State q : start)
        for (std::size_t x = 0; x < a.letter_count(); ++x)
            for (State r : a.moves(q, x)) n.add_move(s, x, r);
    for (State f : a.finals()) {
        for (State i : a.initials()) n.add_epsilon(f, i);
        n.add_final(f);
    }
    n.add_final(s);
    n.add_initial(s);
    return n;
}

EpsNfa concat_nfa(const EpsNfa& left, const EpsNfa& right) {
    if (left.alphabet() != right.alphabet()) throw std::invalid_argument("concat_nfa: alphabet mismatch");
    const auto shift = static_cast<State>(left.size());
    EpsNfa n(left.size() + right.size(), left.alphabet());
    copy_edges(n, left, 0);
    copy_edges(n, right, shift);
    for (State f : left.finals())
        for (State i : right.initials()) n.add_epsilon(f, i + shift);
    for (State i : left.initials()) n.add_initial(i);
    for (State f : right.finals()) n.add_final(f + shift);
    return n;
}

EpsNfa union_nfa(const EpsNfa& left, const EpsNfa& right) {
    if (left.alphabet() != right.alphabet()) throw std::invalid_argument("union_nfa: alphabet mismatch");
    const auto shift = static_cast<State>(left.size());
    EpsNfa n(left.size() + right.size(), left.alphabet());
    copy_edges(n, left, 0);
    copy_edges(n, right, shift);
    for (State i : left.initials()) n.add_initial(i);
    for (State i : right.initials()) n.add_initial(i + shift);
    for (State f : left.finals()) n.add_final(f);
    for (State f : right.finals()) n.add_final(f + shift);
    return n;
}

EpsNfa reverse_nfa(const Dfa& d) {
    EpsNfa n(d.size(), d.alphabet());
    for (State q = 0; q < d.size(); ++q)
        for (std::size_t x = 0; x < d.letter_count(); ++x) n.add_move(d.next(q, x), x, q);
    for (State f : d.finals()) n.add_initial(f);
    n.add_final(d.initial());
    return n;
}

Dfa product_dfa(const Dfa& left, const Dfa& right, BooleanOp op) {
    if (left.alphabet() != right.alphabet()) throw std::invalid_argument("product_dfa: alphabet mismatch");
    const std::size_t k = left.letter_count();
    const std::uint64_t width = right.size();
    auto key = [width](State p, State q) { return std::uint64_t{p} * width + q; };

    std::unordered_map<std::uint64_t, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::vector<std::vector<State>> rows(k);
    index.emplace(key(left.initial(), right.initial()), 0);
    pairs.emplace_back(left.initial(), right.initial());

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [p, q] = pairs[i];
        for (std::size_t x = 0; x < k; ++x) {
            const State p2 = left.next(p, x);
            const State q2 = right.next(q, x);
            auto [it, inserted] = index.emplace(key(p2, q2), static_cast<State>(pairs.size()));
            if (inserted) pairs.emplace_back(p2, q2);
            rows[x].push_back(it->second);
        }
    }

    std::vector<Transformation> delta;
    delta.reserve(k);
    for (auto& row : rows) delta.push_back(Transformation::from_image(std::move(row)));
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (combine(op, left.is_final(pairs[i].first), right.is_final(pairs[i].second)))
            finals.push_back(static_cast<State>(i));
    }
    return Dfa(pairs.size(), left.alphabet(), std::move(delta), 0, std::move(finals));
}

}  // namespace scw
