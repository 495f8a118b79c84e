#include "scw/verifier.hpp"

#include <chrono>
#include <limits>
#include <memory>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>
#include <omp.h>

#include "scw/complexity.hpp"
#include "scw/constructions.hpp"
#include "scw/dfa_io.hpp"

namespace scw {

Operands build_operands(const Recipe& r) {
    Dfa right = build(r.right);
    std::string names;
    std::optional<Dfa> left;
    if (r.left) {
        left = build(*r.left);
        names = display_name(*r.left) + " ; ";
    }
    if (r.complement_right) {
        right = complement(right);
        names += "complement(" + display_name(r.right) + ")";
    } else {
        names += display_name(r.right);
    }
    return {std::move(left), std::move(right), r.left_star_returns, std::move(names)};
}

PipelineResult run_pipeline(OperationId op, const Operands& operands, std::size_t cap) {
    const auto& entry = info(op);
    const Dfa& L = operands.right;
    if (entry.arity == 2 && !operands.left) throw std::invalid_argument("binary operation needs two operands");
    const Dfa* K = operands.left ? &*operands.left : nullptr;
    const auto bop = entry.boolean.value_or(BooleanOp::Union);

    std::optional<SubsetDfa> last;
    auto dm = [&](const EpsNfa& nfa) {
        auto subsets = determinize(nfa, cap);
        Dfa result = minimize(subsets.dfa());
        last.emplace(std::move(subsets));
        return result;
    };

    Dfa result = [&]() -> Dfa {
        switch (entry.shape) {
            case Shape::Star: return dm(star_nfa(L));
            case Shape::Reversal: return dm(reverse_nfa(L));
            case Shape::Product: return dm(concat_nfa(dfa_to_nfa(*K), dfa_to_nfa(L)));
            case Shape::Boolean: return minimize(product_dfa(*K, L, bop));
            case Shape::BooleanLStar: return minimize(product_dfa(*K, dm(star_nfa(L)), bop));
            case Shape::LStarMinusK: return minimize(product_dfa(dm(star_nfa(L)), *K, BooleanOp::Difference));
            case Shape::BooleanBothStars: {
                Dfa k_star = operands.left_star_returns.empty() ? dm(star_nfa(*K))
                                                                : dm(star_nfa(*K, operands.left_star_returns));
                Dfa l_star = dm(star_nfa(L));
                return minimize(product_dfa(k_star, l_star, bop));
            }
            case Shape::KLStar: return dm(concat_nfa(dfa_to_nfa(*K), star_nfa(L)));
            case Shape::KStarL: return dm(concat_nfa(star_nfa(*K), dfa_to_nfa(L)));
            case Shape::KStarLStar: return dm(concat_nfa(star_nfa(*K), star_nfa(L)));
            // starring the minimal DFA of KL instead would explode the subset count
            case Shape::StarOfProduct: return dm(star_nfa(concat_nfa(dfa_to_nfa(*K), dfa_to_nfa(L))));
            case Shape::StarOfBoolean:
                if (bop == BooleanOp::Union) return dm(star_nfa(union_nfa(dfa_to_nfa(*K), dfa_to_nfa(L))));
                return dm(star_nfa(minimize(product_dfa(*K, L, bop))));
        }
        throw std::logic_error("unhandled operation shape");
    }();
    return {std::move(result), std::move(last)};
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::BelowBound: return "below-bound";
        case Verdict::AboveBound: return "ABOVE-BOUND";
        case Verdict::OpenMeasured: return "open-measured";
        case Verdict::Skipped: return "skipped: cap";
    }
    return "?";
}

namespace {

constexpr std::size_t max_labels_in_report = 20;
constexpr std::size_t max_states_in_report = 200;

std::string diagnostics_for(const Operands& operands, const PipelineResult& result) {
    std::ostringstream out;
    if (operands.left) out << "# left operand\n" << write_dfa(*operands.left);
    out << "# right operand\n" << write_dfa(operands.right);
    if (result.minimal.size() <= max_states_in_report) out << "# result\n" << write_dfa(result.minimal);
    if (result.last_subsets) {
        const auto& s = *result.last_subsets;
        out << "# subset labels (" << s.dfa().size() << " subsets)\n";
        for (State q = 0; q < s.dfa().size() && q < max_labels_in_report; ++q) {
            out << q << ": {";
            bool first = true;
            for (State x : s.label(q)) {
                out << (first ? "" : ",") << x;
                first = false;
            }
            out << "}\n";
        }
    }
    return out.str();
}

VerificationCell measure(OperationId op, std::size_t m, std::size_t n, const Recipe& r, std::size_t cap) {
    const auto& entry = info(op);
    VerificationCell cell;
    cell.op = op;
    cell.m = entry.arity == 2 ? m : 0;
    cell.n = n;
    if (entry.status != BoundStatus::Open) cell.expected = evaluate(op, m, n);

    const auto start = std::chrono::steady_clock::now();
    const Operands operands = build_operands(r);
    cell.witnesses = operands.names;
    try {
        auto result = run_pipeline(op, operands, cap);
        const std::size_t measured = result.minimal.size();
        cell.measured = measured;
        if (!cell.expected) {
            cell.verdict = Verdict::OpenMeasured;
        } else if (*cell.expected == measured) {
            cell.verdict = Verdict::Match;
        } else {
            cell.verdict = *cell.expected < measured ? Verdict::AboveBound : Verdict::BelowBound;
            cell.diagnostics = diagnostics_for(operands, result);
        }
    } catch (const SubsetCapExceeded& e) {
        cell.verdict = Verdict::Skipped;
        cell.note = e.what();
    }
    cell.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cell;
}

}  // namespace

VerificationCell verify_cell(OperationId op, std::size_t m, std::size_t n, const VerifyOptions& options) {
    auto cell = measure(op, m, n, recipe(op, m, n), options.cap);
    if (op == OperationId::KIntersectLStar && cell.measured) {
        // The union witnesses do not work for intersection; record their shortfall.
        Recipe plain = recipe(OperationId::KUnionLStar, m, n);
        auto other = measure(op, m, n, plain, options.cap);
        if (other.measured) {
            cell.note = "with " + other.witnesses + ": measured " + std::to_string(*other.measured);
        }
    }
    return cell;
}

std::vector<VerificationCell> verify_table(std::span<const OperationId> ops, std::size_t m_lo, std::size_t m_hi,
                                           std::size_t n_lo, std::size_t n_hi, const VerifyOptions& options) {
    struct Job {
        OperationId op;
        std::size_t m, n;
    };
    std::vector<Job> jobs;
    for (auto op : ops) {
        const bool unary = info(op).arity == 1;
        for (std::size_t m = unary ? 0 : m_lo; m <= (unary ? 0 : m_hi); ++m)
            for (std::size_t n = n_lo; n <= n_hi; ++n) jobs.push_back({op, m, n});
    }

    std::vector<VerificationCell> cells(jobs.size());
    std::vector<std::string> errors(jobs.size());
    const auto count = static_cast<std::int64_t>(jobs.size());
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            cells[i] = verify_cell(jobs[i].op, jobs[i].m, jobs[i].n, options);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);
    return cells;
}

TableSummary summarize(std::span<const VerificationCell> cells) {
    TableSummary s;
    for (const auto& c : cells) {
        switch (c.verdict) {
            case Verdict::Match: ++s.match; break;
            case Verdict::BelowBound:
                ++s.below;
                if (info(c.op).status == BoundStatus::Conjecture) ++s.findings;
                break;
            case Verdict::AboveBound: ++s.above; break;
            case Verdict::OpenMeasured: ++s.open; break;
            case Verdict::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

int exit_code(std::span<const VerificationCell> cells) {
    for (const auto& c : cells) {
        if (c.verdict == Verdict::AboveBound) return 1;
        if (c.verdict == Verdict::BelowBound && info(c.op).status == BoundStatus::Theorem) return 1;
    }
    return 0;
}

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    return std::nullopt;
}

namespace {

std::string m_text(const VerificationCell& c) { return c.m ? std::to_string(c.m) : "-"; }

std::string count_text(const std::optional<BigCount>& v, std::string_view none) {
    return v ? v->str() : std::string(none);
}

nlohmann::json big_json(const BigCount& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

// setw counts bytes; the display names contain multibyte symbols
std::string padded(std::string_view text, std::size_t width) {
    std::size_t glyphs = 0;
    for (unsigned char ch : text) glyphs += (ch & 0xC0) != 0x80;
    return std::string(text) + std::string(width > glyphs ? width - glyphs : 1, ' ');
}

}  // namespace

std::string format_cells(std::span<const VerificationCell> cells, ReportFormat format, bool timing) {
    std::ostringstream out;
    auto millis = [timing](const VerificationCell& c) {
        return timing ? static_cast<std::int64_t>(c.millis + 0.5) : std::int64_t{0};
    };
    switch (format) {
        case ReportFormat::Csv:
            out << "op,status,m,n,expected,measured,verdict,millis\n";
            for (const auto& c : cells) {
                out << info(c.op).name << ',' << to_string(info(c.op).status) << ',' << m_text(c) << ',' << c.n
                    << ',' << count_text(c.expected, "open") << ','
                    << (c.measured ? std::to_string(*c.measured) : "") << ',' << to_string(c.verdict) << ','
                    << millis(c) << '\n';
            }
            break;
        case ReportFormat::Json: {
            auto arr = nlohmann::json::array();
            for (const auto& c : cells) {
                nlohmann::json j;
                j["op"] = info(c.op).name;
                j["status"] = to_string(info(c.op).status);
                j["m"] = c.m ? nlohmann::json(c.m) : nlohmann::json(nullptr);
                j["n"] = c.n;
                j["expected"] = c.expected ? big_json(*c.expected) : nlohmann::json("open");
                j["measured"] = c.measured ? nlohmann::json(*c.measured) : nlohmann::json(nullptr);
                j["verdict"] = to_string(c.verdict);
                j["millis"] = millis(c);
                j["witnesses"] = c.witnesses;
                if (!c.note.empty()) j["note"] = c.note;
                if (!c.diagnostics.empty()) j["diagnostics"] = c.diagnostics;
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case ReportFormat::Text: {
            for (const auto& c : cells) {
                const auto& entry = info(c.op);
                out << padded(entry.display, 9) << std::left << "m=" << std::setw(2) << m_text(c)
                    << " n=" << std::setw(2) << c.n << "  expected=" << std::setw(10)
                    << count_text(c.expected, "open") << " measured=" << std::setw(10)
                    << (c.measured ? std::to_string(*c.measured) : "-") << ' ' << std::setw(13)
                    << to_string(c.verdict);
                if (entry.status == BoundStatus::Conjecture) out << " [conjecture]";
                out << ' ' << millis(c) << "ms  " << c.witnesses;
                if (!c.note.empty()) out << "  (" << c.note << ')';
                out << '\n';
                if (!c.diagnostics.empty()) out << c.diagnostics;
            }
            const auto s = summarize(cells);
            out << "summary: " << s.match << " match, " << s.below << " below-bound, " << s.above
                << " ABOVE-BOUND, " << s.open << " open-measured, " << s.skipped << " skipped";
            if (s.findings) out << ", " << s.findings << " conjecture finding(s)";
            out << '\n';
            break;
        }
    }
    return out.str();
}

// --- membership oracle -------------------------------------------------------

namespace {

Language accepts(const Dfa& d) {
    return [&d](std::string_view w) { return run(d, w); };
}

Language accepts_owned(Dfa d) {
    return [d = std::make_shared<const Dfa>(std::move(d))](std::string_view w) { return run(*d, w); };
}

Language star_of(Language f) {
    return [f = std::move(f)](std::string_view w) {
        std::vector<bool> reach(w.size() + 1, false);
        reach[0] = true;
        for (std::size_t j = 1; j <= w.size(); ++j) {
            for (std::size_t i = 0; i < j && !reach[j]; ++i)
                if (reach[i] && f(w.substr(i, j - i))) reach[j] = true;
        }
        return bool(reach[w.size()]);
    };
}

Language concat_of(Language f, Language g) {
    return [f = std::move(f), g = std::move(g)](std::string_view w) {
        for (std::size_t k = 0; k <= w.size(); ++k)
            if (f(w.substr(0, k)) && g(w.substr(k))) return true;
        return false;
    };
}

Language boolean_of(Language f, Language g, BooleanOp op) {
    return [f = std::move(f), g = std::move(g), op](std::string_view w) { return combine(op, f(w), g(w)); };
}

}  // namespace

Language semantic_language(OperationId op, const Operands& operands) {
    const auto& entry = info(op);
    const Dfa& l = operands.right;
    const Dfa* k = operands.left ? &*operands.left : nullptr;
    const auto bop = entry.boolean.value_or(BooleanOp::Union);
    switch (entry.shape) {
        case Shape::Star: return star_of(accepts(l));
        case Shape::Reversal:
            return [&l](std::string_view w) { return run(l, std::string(w.rbegin(), w.rend())); };
        case Shape::Product: return concat_of(accepts(*k), accepts(l));
        case Shape::Boolean: return boolean_of(accepts(*k), accepts(l), bop);
        case Shape::BooleanLStar: return boolean_of(accepts(*k), star_of(accepts(l)), bop);
        case Shape::LStarMinusK: return boolean_of(star_of(accepts(l)), accepts(*k), BooleanOp::Difference);
        case Shape::BooleanBothStars: {
            if (operands.left_star_returns.empty())
                return boolean_of(star_of(accepts(*k)), star_of(accepts(l)), bop);
            Dfa loop(k->size(), k->alphabet(), k->deltas(), k->initial(), operands.left_star_returns);
            auto left = concat_of(star_of(accepts_owned(std::move(loop))), accepts(*k));
            return boolean_of(std::move(left), star_of(accepts(l)), bop);
        }
        case Shape::KLStar: return concat_of(accepts(*k), star_of(accepts(l)));
        case Shape::KStarL: return concat_of(star_of(accepts(*k)), accepts(l));
        case Shape::KStarLStar: return concat_of(star_of(accepts(*k)), star_of(accepts(l)));
        case Shape::StarOfProduct: return star_of(concat_of(accepts(*k), accepts(l)));
        case Shape::StarOfBoolean: return star_of(boolean_of(accepts(*k), accepts(l), bop));
    }
    throw std::logic_error("unhandled operation shape");
}

namespace {

template <typename WordSource>
OracleReport check_words(OperationId op, std::size_t m, std::size_t n, WordSource&& for_each_word) {
    OracleReport report;
    report.op = op;
    report.m = info(op).arity == 2 ? m : 0;
    report.n = n;
    const Operands operands = build_operands(recipe(op, m, n));
    const Dfa pipeline = run_pipeline(op, operands).minimal;
    const Language oracle = semantic_language(op, operands);
    for_each_word(operands.right.alphabet(), [&](std::string_view w) {
        ++report.words_tested;
        report.max_length = std::max(report.max_length, w.size());
        if (run(pipeline, w) != oracle(w)) {
            if (!report.sample) report.sample = std::string(w);
            ++report.disagreements;
        }
    });
    return report;
}

}  // namespace

OracleReport membership_oracle(OperationId op, std::size_t m, std::size_t n, std::size_t count,
                               std::size_t max_length, std::uint64_t seed) {
    auto report = check_words(op, m, n, [&](const std::string& sigma, auto&& visit) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> length(0, max_length);
        std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
        std::string w;
        for (std::size_t i = 0; i < count; ++i) {
            w.resize(length(rng));
            for (auto& c : w) c = sigma[letter(rng)];
            visit(w);
        }
    });
    report.seed = seed;
    return report;
}

OracleReport membership_oracle_exhaustive(OperationId op, std::size_t m, std::size_t n, std::size_t max_length) {
    auto report = check_words(op, m, n, [&](const std::string& sigma, auto&& visit) {
        std::string w;
        std::vector<std::size_t> digits;
        for (std::size_t len = 0; len <= max_length; ++len) {
            digits.assign(len, 0);
            w.assign(len, sigma[0]);
            for (;;) {
                visit(w);
                std::size_t i = 0;
                while (i < len && ++digits[i] == sigma.size()) {
                    digits[i] = 0;
                    w[i] = sigma[0];
                    ++i;
                }
                if (i == len) break;
                w[i] = sigma[digits[i]];
            }
        }
    });
    report.exhaustive = true;
    return report;
}

std::string format_oracle(const OracleReport& r) {
    std::ostringstream out;
    out << info(r.op).display << " m=" << (r.m ? std::to_string(r.m) : "-") << " n=" << r.n
        << " words=" << r.words_tested << " maxlen=" << r.max_length;
    if (r.exhaustive) out << " exhaustive";
    else out << " seed=" << r.seed;
    out << " disagreements=" << r.disagreements;
    if (r.sample) out << " sample=\"" << *r.sample << '"';
    out << '\n';
    return out.str();
}

std::vector<VerificationCell> conjecture_scan(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                              const ConjectureOptions& options) {
    std::vector<VerificationCell> cells;
    auto scan = [&](OperationId op, std::size_t m, std::size_t n) {
        if (m * n > options.bit_cap) {
            VerificationCell c;
            c.op = op;
            c.m = m;
            c.n = n;
            c.expected = evaluate(op, m, n);
            c.witnesses = build_operands(recipe(op, m, n)).names;
            c.note = "m*n = " + std::to_string(m * n) + " exceeds bit cap " + std::to_string(options.bit_cap);
            cells.push_back(std::move(c));
            return;
        }
        cells.push_back(measure(op, m, n, recipe(op, m, n), options.cap));
    };
    for (auto [m, n] : pairs) scan(OperationId::StarOfIntersection, m, n);
    if (options.include_difference)
        for (auto [m, n] : pairs) scan(OperationId::StarOfDifference, m, n);
    return cells;
}

}  // namespace scw
