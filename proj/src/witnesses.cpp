#include "scw/witnesses.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace scw {

std::size_t arity(Family f) noexcept {
    switch (f) {
        case Family::S2: return 2;
        case Family::U3:
        case Family::U0_3:
        case Family::T3: return 3;
        case Family::U4:
        case Family::U0_4:
        case Family::W4:
        case Family::W0_4: return 4;
        case Family::U5: return 5;
        case Family::JO6_K:
        case Family::JO6_L: return 6;
    }
    return 0;
}

std::string canonical_letters(Family f) {
    std::string out;
    for (std::size_t i = 0; i < arity(f); ++i) out += static_cast<char>('a' + i);
    return out;
}

FinalSet default_finals(Family f) noexcept {
    switch (f) {
        case Family::U0_3:
        case Family::U0_4:
        case Family::W0_4:
        case Family::S2: return FinalSet::Zero;
        default: return FinalSet::Last;
    }
}

namespace {

using T = Transformation;

std::vector<Transformation> canonical_roles(Family f, std::size_t n) {
    const auto last = static_cast<State>(n - 1);
    switch (f) {
        case Family::U3:
        case Family::U0_3: return {T::cycle(n), T::transposition(n, 0, 1), T::singular(n, last, 0)};
        case Family::T3: return {T::cycle(n), T::transposition(n, 0, 1), T::singular(n, 1, 0)};
        case Family::S2: return {T::cycle(n), T::singular(n, 0, 1)};
        case Family::U4:
        case Family::U0_4:
            return {T::cycle(n), T::transposition(n, 0, 1), T::singular(n, last, 0), T::identity(n)};
        case Family::W4:
        case Family::W0_4:
            return {T::cycle(n), T::transposition(n, last - 1, last), T::singular(n, 1, 0), T::identity(n)};
        case Family::U5:
            return {T::cycle(n), T::transposition(n, 0, 1), T::singular(n, last, 0), T::identity(n),
                    T::subcycle(n, 1, last)};
        case Family::JO6_K:
            return {T::cycle(n),           T::identity(n), T::subcycle(n, 1, last),
                    T::identity(n),        T::singular(n, 1, 0), T::identity(n)};
        case Family::JO6_L:
            return {T::cycle(n),     T::cycle(n),           T::identity(n),
                    T::subcycle(n, 1, last), T::identity(n), T::singular(n, 1, 0)};
    }
    throw std::invalid_argument("unknown witness family");
}

std::string resolved_order(const WitnessSpec& spec) {
    const auto canonical = canonical_letters(spec.family);
    if (spec.letter_order.empty()) return canonical;
    if (spec.letter_order.size() != canonical.size())
        throw std::invalid_argument("letter order '" + spec.letter_order + "' does not match family arity " +
                                    std::to_string(canonical.size()));
    auto sorted = spec.letter_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != canonical)
        throw std::invalid_argument("letter order '" + spec.letter_order + "' is not a permutation of " + canonical);
    return spec.letter_order;
}

}  // namespace

Dfa build(const WitnessSpec& spec) {
    if (spec.n < 3) throw std::invalid_argument("witness size must be at least 3");
    const auto order = resolved_order(spec);
    auto roles = canonical_roles(spec.family, spec.n);
    const auto alphabet = canonical_letters(spec.family);

    std::vector<Transformation> delta(alphabet.size());
    for (std::size_t i = 0; i < order.size(); ++i) delta[order[i] - 'a'] = std::move(roles[i]);

    const auto finals = spec.finals_override.value_or(default_finals(spec.family));
    const State final_state = finals == FinalSet::Zero ? 0 : static_cast<State>(spec.n - 1);
    Dfa d(spec.n, alphabet, std::move(delta), 0, {final_state});
    if (!spec.restrict_to.empty()) return project(d, spec.restrict_to);
    return d;
}

std::string display_name(const WitnessSpec& spec) {
    std::string base;
    const bool zero = spec.finals_override ? *spec.finals_override == FinalSet::Zero
                                           : default_finals(spec.family) == FinalSet::Zero;
    switch (spec.family) {
        case Family::U3:
        case Family::U0_3:
        case Family::U4:
        case Family::U0_4:
        case Family::U5: base = "U"; break;
        case Family::T3: base = "T"; break;
        case Family::S2: base = "S"; break;
        case Family::W4:
        case Family::W0_4: base = "W"; break;
        case Family::JO6_K: return "JO6_K(" + std::to_string(spec.n) + ")";
        case Family::JO6_L: return "JO6_L(" + std::to_string(spec.n) + ")";
    }
    if (zero && spec.family != Family::S2) base += "{0}";
    base += "_" + std::to_string(spec.n) + "(";
    const auto order = spec.letter_order.empty() ? canonical_letters(spec.family) : spec.letter_order;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) base += ',';
        if (spec.restrict_to.empty() || spec.restrict_to.find(order[i]) != std::string::npos)
            base += order[i];
        else
            base += '-';
    }
    return base + ")";
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

Family family_for(std::string_view token, std::size_t letters) {
    auto by_arity = [&](Family three, Family four, std::optional<Family> five) {
        switch (letters) {
            case 0:
            case 3: return three;
            case 4: return four;
            case 5:
                if (five) return *five;
                [[fallthrough]];
            default: throw std::invalid_argument("no " + std::string(token) + " family with " +
                                                 std::to_string(letters) + " letters");
        }
    };
    if (token == "U") return by_arity(Family::U3, Family::U4, Family::U5);
    if (token == "U0") return by_arity(Family::U0_3, Family::U0_4, std::nullopt);
    if (token == "U4") return Family::U4;
    if (token == "U5L" || token == "U5") return Family::U5;
    if (token == "T") return Family::T3;
    if (token == "S") return Family::S2;
    if (token == "W") return Family::W4;
    if (token == "W0") return Family::W0_4;
    if (token == "JO6K") return Family::JO6_K;
    if (token == "JO6L") return Family::JO6_L;
    throw std::invalid_argument("unknown witness family '" + std::string(token) + "'");
}

}  // namespace

WitnessSpec parse_witness(std::string_view text) {
    const auto parts = split(text, ':');
    WitnessSpec spec;
    bool have_n = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("expected key=value in witness spec, got '" + std::string(parts[i]) + "'");
        const auto key = parts[i].substr(0, eq);
        const auto value = parts[i].substr(eq + 1);
        if (key == "n") {
            std::size_t n = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw std::invalid_argument("invalid witness size '" + std::string(value) + "'");
            spec.n = n;
            have_n = true;
        } else if (key == "order") {
            spec.letter_order = value;
        } else if (key == "restrict") {
            spec.restrict_to = value;
        } else if (key == "finals") {
            if (value == "0") spec.finals_override = FinalSet::Zero;
            else if (value == "last" || value == "n-1") spec.finals_override = FinalSet::Last;
            else throw std::invalid_argument("finals must be 0 or last; other final sets need a raw DFA");
        } else {
            throw std::invalid_argument("unknown witness key '" + std::string(key) + "'");
        }
    }
    if (!have_n) throw std::invalid_argument("witness spec needs n=<size>");
    spec.family = family_for(parts[0], spec.letter_order.size());
    resolved_order(spec);
    return spec;
}

std::string format_witness(const WitnessSpec& spec) {
    std::string token;
    switch (spec.family) {
        case Family::U3:
        case Family::U4: token = "U"; break;
        case Family::U0_3:
        case Family::U0_4: token = "U0"; break;
        case Family::U5: token = "U5L"; break;
        case Family::T3: token = "T"; break;
        case Family::S2: token = "S"; break;
        case Family::W4: token = "W"; break;
        case Family::W0_4: token = "W0"; break;
        case Family::JO6_K: token = "JO6K"; break;
        case Family::JO6_L: token = "JO6L"; break;
    }
    std::string out = token + ":n=" + std::to_string(spec.n) + ":order=" +
                      (spec.letter_order.empty() ? canonical_letters(spec.family) : spec.letter_order);
    if (spec.finals_override) out += *spec.finals_override == FinalSet::Zero ? ":finals=0" : ":finals=last";
    if (!spec.restrict_to.empty()) out += ":restrict=" + spec.restrict_to;
    return out;
}

std::size_t monoid_size(const Dfa& d, std::string_view letters) {
    if (letters.empty()) throw std::invalid_argument("monoid_size needs at least one letter");
    std::vector<Transformation> generators;
    for (char c : letters) generators.push_back(d.delta_of(c));

    std::unordered_set<Transformation, TransformationHash> seen;
    std::vector<Transformation> queue{Transformation::identity(d.size())};
    seen.insert(queue.front());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : generators) {
            auto next = compose(queue[i], g);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return seen.size();
}

}  // namespace scw
