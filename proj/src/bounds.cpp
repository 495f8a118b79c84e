#include "scw/bounds.hpp"

#include <array>
#include <sstream>

namespace scw {

namespace {

using enum OperationId;
constexpr auto U = BooleanOp::Union;
constexpr auto I = BooleanOp::Intersection;
constexpr auto D = BooleanOp::Difference;
constexpr auto X = BooleanOp::SymmetricDifference;
constexpr auto Thm = BoundStatus::Theorem;

constexpr std::string_view one_star = "m(2^(n-1)+2^(n-2)-1)+1";
constexpr std::string_view two_stars = "(2^(m-1)+2^(m-2)-1)(2^(n-1)+2^(n-2)-1)+1";
constexpr std::string_view star_of_meet = "2^(mn-1)+2^(mn-2)";

constexpr std::array<OperationInfo, 24> table{{
    {Star, "star", "L*", Thm, Shape::Star, {}, 1, "2^(n-1)+2^(n-2)", false},
    {Reversal, "reversal", "L^R", Thm, Shape::Reversal, {}, 1, "2^n", false},
    {Product, "product", "KL", Thm, Shape::Product, {}, 2, "(m-1)2^n+2^(n-1)", false},
    {BoolUnion, "union", "K∪L", Thm, Shape::Boolean, U, 2, "mn", true},
    {BoolIntersection, "intersection", "K∩L", Thm, Shape::Boolean, I, 2, "mn", true},
    {BoolDifference, "difference", "K\\L", Thm, Shape::Boolean, D, 2, "mn", false},
    {BoolSymDiff, "symdiff", "K⊕L", Thm, Shape::Boolean, X, 2, "mn", true},
    {KUnionLStar, "KuL*", "K∪L*", Thm, Shape::BooleanLStar, U, 2, one_star, false},
    {KIntersectLStar, "KnL*", "K∩L*", Thm, Shape::BooleanLStar, I, 2, one_star, false},
    {KSymDiffLStar, "KxL*", "K⊕L*", Thm, Shape::BooleanLStar, X, 2, one_star, false},
    {KMinusLStar, "K-L*", "K\\L*", Thm, Shape::BooleanLStar, D, 2, one_star, false},
    {LStarMinusK, "L*-K", "L*\\K", Thm, Shape::LStarMinusK, D, 2, one_star, false},
    {KStarUnionLStar, "K*uL*", "K*∪L*", Thm, Shape::BooleanBothStars, U, 2, two_stars, true},
    {KStarIntersectLStar, "K*nL*", "K*∩L*", Thm, Shape::BooleanBothStars, I, 2, two_stars, true},
    {KStarMinusLStar, "K*-L*", "K*\\L*", Thm, Shape::BooleanBothStars, D, 2, two_stars, false},
    {KStarSymDiffLStar, "K*xL*", "K*⊕L*", Thm, Shape::BooleanBothStars, X, 2, two_stars, true},
    {KLStar, "KL*", "KL*", Thm, Shape::KLStar, {}, 2, "m(2^(n-1)+2^(n-2))-2^(n-2)", false},
    {KStarL, "K*L", "K*L", Thm, Shape::KStarL, {}, 2, "5*2^(m+n-3)-2^(m-1)-2^n+1", false},
    {KStarLStar, "K*L*", "K*L*", Thm, Shape::KStarLStar, {}, 2, "2^(m+n-1)-2^(m-1)-3*2^(n-2)+2", false},
    {StarOfProduct, "(KL)*", "(KL)*", Thm, Shape::StarOfProduct, {}, 2,
     "2^(m+n-1)+2^(m+n-4)-(2^(m-1)+2^(n-1)-m-1)", false},
    {StarOfUnion, "(KuL)*", "(K∪L)*", Thm, Shape::StarOfBoolean, U, 2, "2^(m+n-1)-(2^(m-1)+2^(n-1)-1)", true},
    {StarOfIntersection, "(KnL)*", "(K∩L)*", BoundStatus::Conjecture, Shape::StarOfBoolean, I, 2, star_of_meet,
     true},
    {StarOfDifference, "(K-L)*", "(K\\L)*", Thm, Shape::StarOfBoolean, D, 2, star_of_meet, false},
    {StarOfSymDiff, "(KxL)*", "(K⊕L)*", BoundStatus::Open, Shape::StarOfBoolean, X, 2, "", false},
}};

BigCount pow2(std::size_t k) { return BigCount{1} << k; }

}  // namespace

std::span<const OperationInfo> all_operations() noexcept { return table; }

const OperationInfo& info(OperationId op) {
    for (const auto& entry : table)
        if (entry.id == op) return entry;
    throw std::invalid_argument("unknown operation");
}

std::string_view to_string(OperationId op) { return info(op).name; }

std::string_view to_string(BoundStatus s) noexcept {
    switch (s) {
        case BoundStatus::Theorem: return "theorem";
        case BoundStatus::Conjecture: return "conjecture";
        case BoundStatus::Open: return "open";
    }
    return "?";
}

std::optional<OperationId> parse_operation(std::string_view name) {
    for (const auto& entry : table)
        if (entry.name == name || entry.display == name) return entry.id;
    if (name == "(KnL)*-conjecture" || name == "(K∩L)*-conjecture") return StarOfIntersection;
    if (name == "(KxL)*-open" || name == "(K⊕L)*-open") return StarOfSymDiff;
    return std::nullopt;
}

BigCount evaluate(OperationId op, std::size_t m, std::size_t n) {
    const auto& entry = info(op);
    if (entry.status == BoundStatus::Open) throw NoKnownBound(op);
    if (n < 3 || (entry.arity == 2 && m < 3))
        throw std::invalid_argument("bounds are defined for m, n >= 3");
    const BigCount bm = m;
    const BigCount bn = n;
    switch (op) {
        case Star: return pow2(n - 1) + pow2(n - 2);
        case Reversal: return pow2(n);
        case Product: return (bm - 1) * pow2(n) + pow2(n - 1);
        case BoolUnion:
        case BoolIntersection:
        case BoolDifference:
        case BoolSymDiff: return bm * bn;
        case KUnionLStar:
        case KIntersectLStar:
        case KSymDiffLStar:
        case KMinusLStar:
        case LStarMinusK: return bm * (pow2(n - 1) + pow2(n - 2) - 1) + 1;
        case KStarUnionLStar:
        case KStarIntersectLStar:
        case KStarMinusLStar:
        case KStarSymDiffLStar:
            return (pow2(m - 1) + pow2(m - 2) - 1) * (pow2(n - 1) + pow2(n - 2) - 1) + 1;
        case KLStar: return bm * (pow2(n - 1) + pow2(n - 2)) - pow2(n - 2);
        case KStarL: return 5 * pow2(m + n - 3) - pow2(m - 1) - pow2(n) + 1;
        case KStarLStar: return pow2(m + n - 1) - pow2(m - 1) - 3 * pow2(n - 2) + 2;
        case StarOfProduct: return pow2(m + n - 1) + pow2(m + n - 4) - (pow2(m - 1) + pow2(n - 1) - bm - 1);
        case StarOfUnion: return pow2(m + n - 1) - (pow2(m - 1) + pow2(n - 1) - 1);
        case StarOfIntersection:
        case StarOfDifference: return pow2(m * n - 1) + pow2(m * n - 2);
        case StarOfSymDiff: break;
    }
    throw NoKnownBound(op);
}

namespace {

WitnessSpec witness(Family f, std::size_t n, std::string order = {}, std::string restrict_to = {}) {
    WitnessSpec spec;
    spec.family = f;
    spec.n = n;
    spec.letter_order = std::move(order);
    spec.restrict_to = std::move(restrict_to);
    return spec;
}

std::string pipeline_text(const OperationInfo& entry) {
    const std::string op = entry.boolean ? std::string(to_string(*entry.boolean)) : std::string();
    switch (entry.shape) {
        case Shape::Star: return "det-min(star_nfa(L))";
        case Shape::Reversal: return "det-min(reverse_nfa(L))";
        case Shape::Product: return "det-min(concat_nfa(dfa_to_nfa(K), dfa_to_nfa(L)))";
        case Shape::Boolean: return "minimize(product_dfa(K, L, " + op + "))";
        case Shape::BooleanLStar: return "product_dfa(K, minimize(determinize(star_nfa(L))), " + op + ")";
        case Shape::LStarMinusK: return "product_dfa(minimize(determinize(star_nfa(L))), K, difference)";
        case Shape::BooleanBothStars:
            if (entry.id == KStarMinusLStar || entry.id == KStarSymDiffLStar)
                return "product_dfa(det-min(star_nfa(K, returns {m-1})), det-min(star_nfa(L)), " + op + ")";
            return "product_dfa(det-min(star_nfa(K)), det-min(star_nfa(L)), " + op + ")";
        case Shape::KLStar: return "det-min(concat_nfa(dfa_to_nfa(K), star_nfa(L)))";
        case Shape::KStarL: return "det-min(concat_nfa(star_nfa(K), dfa_to_nfa(L)))";
        case Shape::KStarLStar: return "det-min(concat_nfa(star_nfa(K), star_nfa(L)))";
        case Shape::StarOfProduct:
            return "det-min(star_nfa(concat_nfa(dfa_to_nfa(K), dfa_to_nfa(L))))";
        case Shape::StarOfBoolean:
            if (entry.boolean == BooleanOp::Union) return "det-min(star_nfa(union_nfa(dfa_to_nfa(K), dfa_to_nfa(L))))";
            return "det-min(star_nfa(minimize(product_dfa(K, L, " + op + "))))";
    }
    return {};
}

}  // namespace

Recipe recipe(OperationId op, std::size_t m, std::size_t n) {
    const auto& entry = info(op);
    Recipe r;
    r.pipeline = pipeline_text(entry);
    switch (op) {
        case Star: r.right = witness(Family::U3, n, "abc", "ab"); break;
        case Reversal: r.right = witness(Family::U3, n); break;
        case Product:
            r.left = witness(Family::U3, m);
            r.right = witness(Family::U3, n);
            break;
        case BoolUnion:
        case BoolIntersection:
        case BoolDifference:
        case BoolSymDiff:
        case KUnionLStar:
        case KSymDiffLStar:
        case LStarMinusK:
            r.left = witness(Family::U3, m);
            r.right = witness(Family::U3, n, "bac");
            break;
        case KIntersectLStar:
        case KMinusLStar:
            r.left = witness(Family::U0_3, m);
            r.right = witness(Family::U3, n, "bac");
            break;
        case KStarUnionLStar:
        case KStarIntersectLStar:
        case StarOfProduct:
            r.left = witness(Family::W4, m);
            r.right = witness(Family::W4, n, "dcba");
            break;
        case KStarMinusLStar:
        case KStarSymDiffLStar:
            r.left = witness(Family::W0_4, m);
            r.right = witness(Family::W4, n, "dcba");
            r.left_star_returns = {static_cast<State>(m - 1)};
            break;
        case KLStar:
            r.left = witness(Family::T3, m);
            r.right = witness(Family::T3, n, "bac");
            break;
        case KStarL:
        case KStarLStar:
            r.left = witness(Family::U4, m);
            r.right = witness(Family::U4, n, "dcba");
            break;
        case StarOfUnion:
            r.left = witness(Family::S2, m);
            r.right = witness(Family::S2, n, "ba");
            break;
        case StarOfIntersection:
        case StarOfSymDiff:
            r.left = witness(Family::U5, m);
            r.right = witness(Family::U5, n, "ecbad");
            break;
        case StarOfDifference:
            r.left = witness(Family::JO6_K, m);
            r.right = witness(Family::JO6_L, n);
            r.complement_right = true;
            break;
    }
    return r;
}

std::string bound_table_csv(std::span<const OperationId> ops, std::size_t m_lo, std::size_t m_hi,
                            std::size_t n_lo, std::size_t n_hi) {
    std::ostringstream out;
    out << "op,status,formula,m,n,value\n";
    for (auto op : ops) {
        const auto& entry = info(op);
        const bool unary = entry.arity == 1;
        for (std::size_t m = unary ? 0 : m_lo; m <= (unary ? 0 : m_hi); ++m) {
            for (std::size_t n = n_lo; n <= n_hi; ++n) {
                out << entry.name << ',' << to_string(entry.status) << ",\"" << entry.formula << "\",";
                if (unary) out << '-';
                else out << m;
                out << ',' << n << ',';
                if (entry.status != BoundStatus::Open) out << evaluate(op, m, n);
                out << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace scw
