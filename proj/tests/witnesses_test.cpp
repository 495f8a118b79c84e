#include <doctest.h>

#include <stdexcept>

#include "scw/witnesses.hpp"

using namespace scw;

namespace {

WitnessSpec spec_of(Family f, std::size_t n, std::string order = {}) {
    WitnessSpec spec;
    spec.family = f;
    spec.n = n;
    spec.letter_order = std::move(order);
    return spec;
}

std::vector<State> row(const Dfa& d, char letter) {
    auto image = d.delta_of(letter).image();
    return {image.begin(), image.end()};
}

}  // namespace

TEST_CASE("U_4 matches the universal witness table") {
    const Dfa d = build(spec_of(Family::U3, 4));
    CHECK(row(d, 'a') == std::vector<State>{1, 2, 3, 0});
    CHECK(row(d, 'b') == std::vector<State>{1, 0, 2, 3});
    CHECK(row(d, 'c') == std::vector<State>{0, 1, 2, 0});
    CHECK(d.initial() == 0);
    CHECK(d.finals() == std::vector<State>{3});
}

TEST_CASE("dialects") {
    const Dfa t = build(spec_of(Family::T3, 5));
    CHECK(t.delta_of('c') == Transformation::singular(5, 1, 0));
    const Dfa w = build(spec_of(Family::W4, 5));
    CHECK(w.delta_of('b') == Transformation::transposition(5, 3, 4));
    CHECK(w.delta_of('c') == Transformation::singular(5, 1, 0));
    CHECK(w.delta_of('d').is_identity());
    CHECK(build(spec_of(Family::W0_4, 5)).finals() == std::vector<State>{0});
    CHECK(build(spec_of(Family::U0_3, 5)).finals() == std::vector<State>{0});
    const Dfa s = build(spec_of(Family::S2, 4));
    CHECK(s.alphabet() == "ab");
    CHECK(s.delta_of('b') == Transformation::singular(4, 0, 1));
    CHECK(s.finals() == std::vector<State>{0});
}

TEST_CASE("letter order hands canonical roles to the named letters") {
    const Dfa d = build(spec_of(Family::U4, 5, "dcba"));
    CHECK(d.alphabet() == "abcd");
    CHECK(d.delta_of('d') == Transformation::cycle(5));
    CHECK(d.delta_of('c') == Transformation::transposition(5, 0, 1));
    CHECK(d.delta_of('b') == Transformation::singular(5, 4, 0));
    CHECK(d.delta_of('a').is_identity());

    const Dfa l = build(spec_of(Family::U5, 5, "ecbad"));
    CHECK(l.delta_of('a').is_identity());
    CHECK(l.delta_of('b') == Transformation::singular(5, 4, 0));
    CHECK(l.delta_of('c') == Transformation::transposition(5, 0, 1));
    CHECK(l.delta_of('d') == Transformation::subcycle(5, 1, 4));
    CHECK(l.delta_of('e') == Transformation::cycle(5));
}

TEST_CASE("six-letter witnesses") {
    const Dfa k = build(spec_of(Family::JO6_K, 4));
    CHECK(k.alphabet() == "abcdef");
    CHECK(k.delta_of('a') == Transformation::cycle(4));
    CHECK(k.delta_of('c') == Transformation::subcycle(4, 1, 3));
    CHECK(k.delta_of('e') == Transformation::singular(4, 1, 0));
    for (char x : std::string("bdf")) CHECK(k.delta_of(x).is_identity());
    const Dfa l = build(spec_of(Family::JO6_L, 4));
    CHECK(l.delta_of('a') == Transformation::cycle(4));
    CHECK(l.delta_of('b') == Transformation::cycle(4));
    CHECK(l.delta_of('d') == Transformation::subcycle(4, 1, 3));
    CHECK(l.delta_of('f') == Transformation::singular(4, 1, 0));
    for (char x : std::string("ce")) CHECK(l.delta_of(x).is_identity());
}

TEST_CASE("restriction and overrides") {
    WitnessSpec spec = spec_of(Family::U3, 4);
    spec.restrict_to = "ab";
    CHECK(build(spec).alphabet() == "ab");
    CHECK(display_name(spec) == "U_4(a,b,-)");
    spec.restrict_to.clear();
    spec.finals_override = FinalSet::Zero;
    CHECK(build(spec).finals() == std::vector<State>{0});
    CHECK(display_name(spec) == "U{0}_4(a,b,c)");
}

TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(build(spec_of(Family::U3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(build(spec_of(Family::U3, 4, "aac")), std::invalid_argument);
    CHECK_THROWS_AS(build(spec_of(Family::U3, 4, "abcd")), std::invalid_argument);
    CHECK_THROWS(parse_witness("U:order=abc"));
    CHECK_THROWS(parse_witness("Q:n=4"));
    CHECK_THROWS(parse_witness("U:n=4:finals=2"));
    CHECK_THROWS(parse_witness("U0:n=4:order=abcde"));
}

TEST_CASE("CLI spellings") {
    CHECK(parse_witness("U:n=5:order=dcba") == spec_of(Family::U4, 5, "dcba"));
    CHECK(parse_witness("W0:n=4:order=abcd") == spec_of(Family::W0_4, 4, "abcd"));
    CHECK(parse_witness("T:n=5:order=bac") == spec_of(Family::T3, 5, "bac"));
    CHECK(parse_witness("S:n=6:order=ba") == spec_of(Family::S2, 6, "ba"));
    CHECK(parse_witness("U5L:n=4:order=ecbad") == spec_of(Family::U5, 4, "ecbad"));
    CHECK(parse_witness("JO6K:n=4").family == Family::JO6_K);
    CHECK(parse_witness("JO6L:n=5").n == 5);
    CHECK(display_name(spec_of(Family::U4, 5, "dcba")) == "U_5(d,c,b,a)");
    CHECK(display_name(spec_of(Family::W0_4, 4)) == "W{0}_4(a,b,c,d)");
    for (auto f : {Family::U3, Family::U0_3, Family::T3, Family::S2, Family::U4, Family::U0_4, Family::W4, Family::W0_4,
                   Family::U5, Family::JO6_K, Family::JO6_L}) {
        const auto spec = spec_of(f, 6);
        CHECK(build(parse_witness(format_witness(spec))) == build(spec));
    }
}

TEST_CASE("transition monoids") {
    CHECK(monoid_size(build(spec_of(Family::U3, 3)), "abc") == 27);
    CHECK(monoid_size(build(spec_of(Family::U3, 4)), "abc") == 256);
    CHECK(monoid_size(build(spec_of(Family::U3, 5)), "abc") == 3125);
    CHECK(monoid_size(build(spec_of(Family::U3, 4)), "ab") == 24);
    CHECK(monoid_size(build(spec_of(Family::U3, 6)), "a") == 6);
    CHECK(monoid_size(build(spec_of(Family::U4, 4)), "d") == 1);
    CHECK_THROWS(monoid_size(build(spec_of(Family::U3, 4)), ""));
}
