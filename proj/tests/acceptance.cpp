// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scw/complexity.hpp"
#include "scw/constructions.hpp"
#include "scw/dfa_io.hpp"
#include "scw/verifier.hpp"
#include "support.hpp"

using namespace scw;
using enum OperationId;

namespace {

struct Outcome {
    bool ok = true;
    bool finding = false;  // conjecture mismatch: reported, never a failure
    std::string detail;
};

// Checks every cell of ops over the ranges for an exact match.
Outcome exact(std::vector<OperationId> ops, std::size_t lo, std::size_t hi) {
    Outcome out;
    const auto cells = verify_table(ops, lo, hi, lo, hi);
    std::size_t matched = 0;
    for (const auto& c : cells) {
        if (c.verdict == Verdict::Match) {
            ++matched;
            continue;
        }
        out.ok = false;
        std::ostringstream s;
        s << ' ' << to_string(c.op) << '(' << c.m << ',' << c.n << ")=" << (c.measured ? std::to_string(*c.measured) : "-")
          << " " << to_string(c.verdict);
        out.detail += s.str();
    }
    out.detail = std::to_string(matched) + "/" + std::to_string(cells.size()) + " cells exact" + out.detail;
    return out;
}

Outcome merge(std::initializer_list<Outcome> parts) {
    Outcome out;
    for (const auto& p : parts) {
        out.ok = out.ok && p.ok;
        out.finding = out.finding || p.finding;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += p.detail;
    }
    return out;
}

Outcome basic_bounds() {
    // star and reversal are unary: the m range is ignored
    return merge({exact({Star, Reversal}, 3, 8), exact({Product, BoolUnion, BoolIntersection, BoolDifference, BoolSymDiff}, 3, 6)});
}

Outcome one_starred() {
    Outcome out = exact({KUnionLStar, KSymDiffLStar, LStarMinusK, KIntersectLStar, KMinusLStar}, 3, 6);
    // the union witnesses do not work for intersection
    for (std::size_t m = 3; m <= 6; ++m)
        for (std::size_t n = 3; n <= 6; ++n) {
            const Recipe plain = recipe(KUnionLStar, m, n);
            const auto size = run_pipeline(KIntersectLStar, build_operands(plain)).minimal.size();
            if (size >= evaluate(KIntersectLStar, m, n)) {
                out.ok = false;
                out.detail += "; U_m(a,b,c) meets the K∩L* bound at (" + std::to_string(m) + "," + std::to_string(n) + ")";
            }
        }
    out.detail += "; union witnesses fall short for K∩L* on all 16 cells";
    return out;
}

Outcome conjecture() {
    const std::vector<std::pair<std::size_t, std::size_t>> pairs{{3, 3}, {3, 4}, {3, 5}};
    Outcome out;
    for (const auto& c : conjecture_scan(pairs)) {
        out.detail += (out.detail.empty() ? "" : ", ") + std::to_string(c.m) + ":" + std::to_string(c.n) + " -> " +
                      (c.measured ? std::to_string(*c.measured) : std::string("-")) + "/" + c.expected->str();
        if (c.verdict != Verdict::Match) out.finding = true;
    }
    return out;
}

Outcome jo_difference() {
    const auto c = verify_cell(StarOfDifference, 3, 3);
    Outcome out;
    out.ok = c.verdict == Verdict::Match && c.measured == 384;
    out.detail = "(3,3) -> " + (c.measured ? std::to_string(*c.measured) : std::string("-"));
    return out;
}

Outcome monoids() {
    Outcome out;
    for (std::size_t n : {3, 4}) {
        WitnessSpec spec;
        spec.n = n;
        const auto size = monoid_size(build(spec), "abc");
        std::size_t expected = 1;
        for (std::size_t i = 0; i < n; ++i) expected *= n;
        out.ok = out.ok && size == expected;
        out.detail += (out.detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " -> " + std::to_string(size);
    }
    return out;
}

Outcome properties() {
    Outcome out;
    std::size_t words = 0;
    for (auto op : {KUnionLStar, KIntersectLStar, KSymDiffLStar, KMinusLStar, LStarMinusK, KStarUnionLStar,
                    KStarIntersectLStar, KStarMinusLStar, KStarSymDiffLStar, KLStar, KStarL, KStarLStar, StarOfProduct}) {
        const auto r = membership_oracle_exhaustive(op, 3, 3, 8);
        words += r.words_tested;
        if (r.disagreements) {
            out.ok = false;
            out.detail += std::string(to_string(op)) + " disagrees on '" + r.sample.value_or("") + "'; ";
        }
    }
    out.detail += "oracle: 13 ops, " + std::to_string(words) + " words";

    std::mt19937_64 rng(2024);
    std::size_t canonical = 0;
    for (int i = 0; i < 100; ++i) {
        const Dfa d = test::random_dfa(rng, 8, "ab");
        const Dfa m = minimize(d);
        // a shuffled copy must minimize to the same canonical automaton
        std::vector<State> perm(8);
        for (State q = 0; q < 8; ++q) perm[q] = q;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Transformation> delta;
        for (std::size_t x = 0; x < 2; ++x) {
            std::vector<State> image(8);
            for (State q = 0; q < 8; ++q) image[perm[q]] = perm[d.next(q, x)];
            delta.push_back(Transformation::from_image(image));
        }
        std::vector<State> finals;
        for (State f : d.finals()) finals.push_back(perm[f]);
        const Dfa shuffled(8, "ab", delta, perm[d.initial()], finals);
        const bool same = minimize(m) == m && minimize(shuffled) == m && minimize(d, Refinement::Moore) == m &&
                          m.size() == test::table_filling_size(d);
        canonical += same;
    }
    out.ok = out.ok && canonical == 100;
    out.detail += "; canonical minimization " + std::to_string(canonical) + "/100";

    std::size_t round_trips = 0, built = 0;
    for (auto f : {Family::U3, Family::U0_3, Family::T3, Family::S2, Family::U4, Family::U0_4, Family::W4, Family::W0_4,
                   Family::U5, Family::JO6_K, Family::JO6_L})
        for (std::size_t n = 3; n <= 8; ++n) {
            WitnessSpec spec;
            spec.family = f;
            spec.n = n;
            const Dfa d = build(spec);
            ++built;
            round_trips += read_dfa(write_dfa(d)) == d;
        }
    out.ok = out.ok && round_trips == built;
    out.detail += "; round trip " + std::to_string(round_trips) + "/" + std::to_string(built);

    std::size_t inverse_ok = 0;
    std::string letters = "abcde";
    for (int i = 0; i < 50; ++i) {
        const Dfa d = test::random_dfa(rng, 6, letters);
        std::string image = letters;
        std::shuffle(image.begin(), image.end(), rng);
        std::string inverse(letters.size(), ' ');
        for (std::size_t x = 0; x < letters.size(); ++x) inverse[image[x] - 'a'] = letters[x];
        inverse_ok += permute_letters(permute_letters(d, image), inverse) == d;
    }
    out.ok = out.ok && inverse_ok == 50;
    out.detail += "; permutation inverse " + std::to_string(inverse_ok) + "/50";
    return out;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "star, reversal, product and boolean bounds", 5, basic_bounds},
        {2, "one starred operand, U and U{0} witnesses", 5, one_starred},
        {3, "both operands starred, W and W{0} witnesses", 10, [] {
             return exact({KStarUnionLStar, KStarIntersectLStar, KStarMinusLStar, KStarSymDiffLStar}, 3, 6);
         }},
        {4, "KL*, K*L and K*L*", 30, [] { return exact({KLStar, KStarL, KStarLStar}, 3, 7); }},
        {5, "(KL)* and (K∪L)*", 30, [] { return exact({StarOfProduct, StarOfUnion}, 3, 7); }},
        {6, "(K∩L)* conjecture at (3,3), (3,4), (3,5)", 120, conjecture},
        {7, "(K\\L)* with six-letter witnesses", 60, jo_difference},
        {8, "transition monoid of U_n is n^n", 1, monoids},
        {9, "property suite", 0, properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.check();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
            out.ok = false;
            out.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
        }
        const char* verdict = !out.ok ? "FAIL" : out.finding ? "FINDING" : "PASS";
        std::printf("%-7s criterion %d: %s (%.2f s) - %s\n", verdict, c.id, c.title, seconds, out.detail.c_str());
        std::fflush(stdout);
        failed += !out.ok;
    }
    return failed ? 1 : 0;
}
