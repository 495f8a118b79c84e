#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scw/bounds.hpp"
#include "scw/determinize.hpp"

namespace scw {

/// Operand automata for one cell, built from a recipe (right already complemented when asked).
struct Operands {
    std::optional<Dfa> left;
    Dfa right;
    std::vector<State> left_star_returns;  // see Recipe
    std::string names;
};

Operands build_operands(const Recipe& r);

struct PipelineResult {
    Dfa minimal;
    /// Labels of the last subset construction in the pipeline, for mismatch reports.
    std::optional<SubsetDfa> last_subsets;
};

/// Runs the construction -> determinize -> minimize pipeline for `op`.
/// Throws SubsetCapExceeded when a subset construction outgrows `cap`.
PipelineResult run_pipeline(OperationId op, const Operands& operands, std::size_t cap = default_subset_cap);

enum class Verdict { Match, BelowBound, AboveBound, OpenMeasured, Skipped };
std::string_view to_string(Verdict v) noexcept;

struct VerificationCell {
    OperationId op;
    std::size_t m = 0;  // 0 for unary operations
    std::size_t n = 0;
    std::optional<BigCount> expected;   // none for open entries
    std::optional<std::size_t> measured;  // none when skipped
    Verdict verdict = Verdict::Skipped;
    double millis = 0;
    std::string witnesses;
    std::string note;
    std::string diagnostics;  // filled on mismatch: automaton text and subset labels
};

struct VerifyOptions {
    std::size_t cap = default_subset_cap;
    int jobs = 0;  // 0: OpenMP default
};

VerificationCell verify_cell(OperationId op, std::size_t m, std::size_t n, const VerifyOptions& options = {});

/// Cells for every op and (m, n) in the ranges, computed concurrently, returned
/// ordered by (op, m, n). Unary operations get one cell per n.
std::vector<VerificationCell> verify_table(std::span<const OperationId> ops, std::size_t m_lo, std::size_t m_hi,
                                           std::size_t n_lo, std::size_t n_hi, const VerifyOptions& options = {});

struct TableSummary {
    std::size_t match = 0, below = 0, above = 0, open = 0, skipped = 0, findings = 0;
};
TableSummary summarize(std::span<const VerificationCell> cells);

/// 1 when a cell is ABOVE-BOUND or a theorem cell falls below its bound; conjecture
/// shortfalls are findings and do not fail.
int exit_code(std::span<const VerificationCell> cells);

enum class ReportFormat { Text, Csv, Json };
std::optional<ReportFormat> parse_format(std::string_view name);
/// `timing` false prints 0 for elapsed time so reports are byte-reproducible.
std::string format_cells(std::span<const VerificationCell> cells, ReportFormat format, bool timing = true);

// --- membership oracle -------------------------------------------------------

using Language = std::function<bool(std::string_view)>;

/// Membership in the result of `op`, evaluated directly from the operand DFAs:
/// boolean combinations of runs, split-point search for concatenation and a
/// prefix dynamic program for star.
Language semantic_language(OperationId op, const Operands& operands);

struct OracleReport {
    OperationId op;
    std::size_t m = 0, n = 0;
    std::size_t words_tested = 0;
    std::size_t max_length = 0;
    std::size_t disagreements = 0;
    std::optional<std::string> sample;  // first disagreeing word
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

OracleReport membership_oracle(OperationId op, std::size_t m, std::size_t n, std::size_t count,
                               std::size_t max_length, std::uint64_t seed);
/// Every word over the operands' alphabet up to `max_length`.
OracleReport membership_oracle_exhaustive(OperationId op, std::size_t m, std::size_t n, std::size_t max_length);

std::string format_oracle(const OracleReport& r);

// --- conjecture scan ---------------------------------------------------------

struct ConjectureOptions {
    std::size_t cap = default_subset_cap;
    std::size_t bit_cap = 26;  // pairs with m*n above this are skipped
    bool include_difference = false;
};

std::vector<VerificationCell> conjecture_scan(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                              const ConjectureOptions& options = {});

}  // namespace scw
