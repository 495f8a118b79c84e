#include <doctest.h>

#include "scw/bounds.hpp"

using namespace scw;
using enum OperationId;

TEST_CASE("published values") {
    CHECK(evaluate(Star, 0, 4) == 12);
    CHECK(evaluate(Reversal, 0, 3) == 8);
    CHECK(evaluate(Product, 3, 3) == 20);
    CHECK(evaluate(BoolDifference, 4, 5) == 20);
    CHECK(evaluate(KUnionLStar, 4, 5) == 93);
    CHECK(evaluate(KStarIntersectLStar, 4, 5) == 254);
    CHECK(evaluate(KLStar, 4, 5) == 88);
    CHECK(evaluate(KStarL, 4, 5) == 281);
    CHECK(evaluate(KStarLStar, 4, 5) == 226);
    CHECK(evaluate(StarOfProduct, 4, 5) == 269);
    CHECK(evaluate(StarOfProduct, 3, 3) == 32);
    CHECK(evaluate(StarOfUnion, 4, 5) == 233);
    CHECK(evaluate(StarOfIntersection, 3, 3) == 384);
    CHECK(evaluate(StarOfIntersection, 3, 4) == 3072);
    CHECK(evaluate(StarOfIntersection, 3, 6) == 196608);
    CHECK(evaluate(StarOfDifference, 3, 3) == 384);
}

TEST_CASE("exact beyond 64 bits") {
    CHECK(evaluate(StarOfIntersection, 12, 12).str() == "16725558898897967356151788704486271129485312");
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(evaluate(StarOfSymDiff, 3, 3), NoKnownBound);
    CHECK_THROWS_WITH(evaluate(StarOfSymDiff, 3, 3), "no known bound for (KxL)*");
    CHECK_THROWS_AS(evaluate(Product, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(Star, 0, 2), std::invalid_argument);
}

TEST_CASE("symmetry holds exactly where the operation commutes") {
    for (const auto& e : all_operations()) {
        if (e.status == BoundStatus::Open || e.arity == 1) continue;
        bool all_equal = true;
        for (std::size_t m = 3; m <= 12; ++m)
            for (std::size_t n = 3; n <= 12; ++n) all_equal = all_equal && evaluate(e.id, m, n) == evaluate(e.id, n, m);
        if (e.symmetric) CHECK_MESSAGE(all_equal, e.name);
    }
    for (auto id : {BoolUnion, BoolIntersection, BoolSymDiff, KStarUnionLStar, KStarIntersectLStar, KStarSymDiffLStar,
                    StarOfUnion, StarOfIntersection})
        CHECK(info(id).symmetric);
    for (auto id : {BoolDifference, Product, KLStar, KStarL, KStarLStar, StarOfProduct, StarOfDifference})
        CHECK_FALSE(info(id).symmetric);
    CHECK(evaluate(KStarL, 3, 4) != evaluate(KStarL, 4, 3));
}

TEST_CASE("one starred operand never beats two") {
    for (std::size_t m = 3; m <= 8; ++m)
        for (std::size_t n = 3; n <= 8; ++n) {
            CHECK(evaluate(KUnionLStar, m, n) < evaluate(KStarUnionLStar, m, n));
            CHECK(evaluate(KIntersectLStar, m, n) < evaluate(KStarIntersectLStar, m, n));
            CHECK(evaluate(KMinusLStar, m, n) < evaluate(KStarMinusLStar, m, n));
            CHECK(evaluate(KSymDiffLStar, m, n) < evaluate(KStarSymDiffLStar, m, n));
        }
}

TEST_CASE("names") {
    CHECK(all_operations().size() == 24);
    for (const auto& e : all_operations()) {
        CHECK(parse_operation(e.name) == e.id);
        CHECK(parse_operation(e.display) == e.id);
    }
    CHECK(parse_operation("(KnL)*-conjecture") == StarOfIntersection);
    CHECK(parse_operation("(KxL)*-open") == StarOfSymDiff);
    CHECK_FALSE(parse_operation("K+L").has_value());
    CHECK(info(StarOfIntersection).status == BoundStatus::Conjecture);
    CHECK(info(StarOfDifference).status == BoundStatus::Theorem);
}

TEST_CASE("recipes") {
    const Recipe symdiff = recipe(KSymDiffLStar, 4, 5);
    CHECK(display_name(*symdiff.left) == "U_4(a,b,c)");
    CHECK(display_name(symdiff.right) == "U_5(b,a,c)");
    CHECK(symdiff.pipeline == "product_dfa(K, minimize(determinize(star_nfa(L))), symdiff)");

    const Recipe meet = recipe(KStarIntersectLStar, 4, 5);
    CHECK(display_name(*meet.left) == "W_4(a,b,c,d)");
    CHECK(display_name(meet.right) == "W_5(d,c,b,a)");
    CHECK(meet.left_star_returns.empty());

    const Recipe minus = recipe(KStarMinusLStar, 4, 5);
    CHECK(display_name(*minus.left) == "W{0}_4(a,b,c,d)");
    CHECK(minus.left_star_returns == std::vector<State>{3});

    const Recipe conj = recipe(StarOfIntersection, 3, 4);
    CHECK(display_name(*conj.left) == "U_3(a,b,c,d,e)");
    CHECK(display_name(conj.right) == "U_4(e,c,b,a,d)");

    const Recipe jo = recipe(StarOfDifference, 3, 3);
    CHECK(jo.complement_right);
    CHECK(!recipe(Star, 0, 4).left);
    CHECK(display_name(recipe(Star, 0, 4).right) == "U_4(a,b,-)");
    CHECK(display_name(*recipe(KIntersectLStar, 3, 3).left) == "U{0}_3(a,b,c)");
}

TEST_CASE("bound table CSV") {
    const std::vector<OperationId> ops{Star, KUnionLStar, StarOfSymDiff};
    const std::string csv = bound_table_csv(ops, 4, 4, 5, 5);
    CHECK(csv ==
          "op,status,formula,m,n,value\n"
          "star,theorem,\"2^(n-1)+2^(n-2)\",-,5,24\n"
          "KuL*,theorem,\"m(2^(n-1)+2^(n-2)-1)+1\",4,5,93\n"
          "(KxL)*,open,\"\",4,5,\n");
}
