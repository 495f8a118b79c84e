#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scw/constructions.hpp"
#include "scw/witnesses.hpp"

namespace scw {

/// Exact integer; the (K∩L)* family of bounds grows like 2^(mn).
using BigCount = boost::multiprecision::cpp_int;

enum class OperationId {
    Star,
    Reversal,
    Product,
    BoolUnion,
    BoolIntersection,
    BoolDifference,
    BoolSymDiff,
    KUnionLStar,
    KIntersectLStar,
    KSymDiffLStar,
    KMinusLStar,
    LStarMinusK,
    KStarUnionLStar,
    KStarIntersectLStar,
    KStarMinusLStar,
    KStarSymDiffLStar,
    KLStar,
    KStarL,
    KStarLStar,
    StarOfProduct,
    StarOfUnion,
    StarOfIntersection,
    StarOfDifference,
    StarOfSymDiff,
};

enum class BoundStatus { Theorem, Conjecture, Open };

/// How the operands are combined; the pipelines in the verifier dispatch on this.
enum class Shape {
    Star,              // L*
    Reversal,          // reverse(L)
    Product,           // KL
    Boolean,           // K o L
    BooleanLStar,      // K o L*
    LStarMinusK,       // L* \ K
    BooleanBothStars,  // K* o L*
    KLStar,            // K L*
    KStarL,            // K* L
    KStarLStar,        // K* L*
    StarOfProduct,     // (KL)*
    StarOfBoolean,     // (K o L)*
};

struct OperationInfo {
    OperationId id;
    std::string_view name;     // CLI spelling, ASCII
    std::string_view display;  // mathematical spelling
    BoundStatus status;
    Shape shape;
    std::optional<BooleanOp> boolean;
    int arity;
    std::string_view formula;  // empty for open entries
    bool symmetric;            // K o L = L o K, hence evaluate(m, n) == evaluate(n, m)
};

std::span<const OperationInfo> all_operations() noexcept;
const OperationInfo& info(OperationId op);
std::string_view to_string(OperationId op);
std::string_view to_string(BoundStatus s) noexcept;
/// Accepts the CLI spelling or the mathematical one.
std::optional<OperationId> parse_operation(std::string_view name);

class NoKnownBound : public std::runtime_error {
public:
    explicit NoKnownBound(OperationId op)
        : std::runtime_error("no known bound for " + std::string(to_string(op))) {}
};

/// Exact value of the closed-form bound. m is ignored for unary operations.
/// Throws NoKnownBound for open entries and std::invalid_argument when m or n < 3.
BigCount evaluate(OperationId op, std::size_t m, std::size_t n);

struct Recipe {
    std::optional<WitnessSpec> left;  // none for unary operations
    WitnessSpec right;
    bool complement_right = false;
    /// Where the star NFA of K loops back to its initial state; empty means K's
    /// finals. The W{0} dialect keeps the loop at m-1 while accepting at 0.
    std::vector<State> left_star_returns;
    std::string pipeline;
};

/// The witness pair claimed to meet the bound at (m, n) and the pipeline that measures it.
Recipe recipe(OperationId op, std::size_t m, std::size_t n);

/// One CSV row per (op, m, n): op,status,formula,m,n,value. Open entries have an empty value.
std::string bound_table_csv(std::span<const OperationId> ops, std::size_t m_lo, std::size_t m_hi,
                            std::size_t n_lo, std::size_t n_hi);

}  // namespace scw
