#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "scw/dfa.hpp"

namespace scw {

/// Witness families. The suffix is the alphabet size; `Zero` variants take {0}
/// as the final set.
enum class Family {
    U3,     // a:(0..n-1)  b:(0,1)      c:(n-1 -> 0)
    U0_3,   // U3 with finals {0}
    T3,     // a:(0..n-1)  b:(0,1)      c:(1 -> 0)
    S2,     // a:(0..n-1)  b:(0 -> 1), finals {0}
    U4,     // U3 plus d:identity
    U0_4,   // U4 with finals {0}
    W4,     // a:(0..n-1)  b:(n-2,n-1)  c:(1 -> 0)  d:identity
    W0_4,   // W4 with finals {0}
    U5,     // U4 plus e:(1..n-1)
    JO6_K,  // six-letter intersection witness, first operand
    JO6_L,  // six-letter intersection witness, second operand
};

enum class FinalSet { Last, Zero };

struct WitnessSpec {
    Family family = Family::U3;
    std::size_t n = 3;
    /// order[i] names the letter carrying the family's i-th canonical
    /// transformation; empty means canonical order.
    std::string letter_order;
    std::optional<FinalSet> finals_override;
    /// Non-empty: keep only these letters (e.g. "ab" for the binary restriction).
    std::string restrict_to;

    bool operator==(const WitnessSpec&) const = default;
};

std::size_t arity(Family f) noexcept;
/// "abc", "abcd", ... for the family's arity.
std::string canonical_letters(Family f);
FinalSet default_finals(Family f) noexcept;

/// Throws std::invalid_argument for n < 3 or a letter order that is not a
/// permutation of the family's letters.
Dfa build(const WitnessSpec& spec);

/// Human-readable name, e.g. "U_5(d,c,b,a)", "W{0}_4(a,b,c,d)", "U_4(a,b,-)".
std::string display_name(const WitnessSpec& spec);

/// Parses CLI spellings like "U:n=5:order=dcba", "W0:n=4", "JO6K:n=4",
/// "U:n=4:order=abc:restrict=ab", "T:n=5:order=bac:finals=0".
WitnessSpec parse_witness(std::string_view text);
std::string format_witness(const WitnessSpec& spec);

/// Size of the transition monoid generated by the given letters (identity included).
std::size_t monoid_size(const Dfa& d, std::string_view letters);

}  // namespace scw
