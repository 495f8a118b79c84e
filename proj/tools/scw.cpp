// Command-line front end: witnesses, bounds, measured complexities and the
// verification table.

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scw/bounds.hpp"
#include "scw/dfa_io.hpp"
#include "scw/verifier.hpp"
#include "scw/witnesses.hpp"

namespace {

constexpr int usage_error = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t to_size(std::string_view text) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("expected a number, got '" + std::string(text) + "'");
    return v;
}

// "3..6" or "4"
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = to_size(text);
        return {v, v};
    }
    auto lo = to_size(std::string_view(text).substr(0, dots));
    auto hi = to_size(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw UsageError("empty range " + text);
    if (lo < 3 || hi > 12) throw UsageError("ranges must lie within 3..12");
    return {lo, hi};
}

scw::OperationId parse_op(const std::string& name) {
    auto op = scw::parse_operation(name);
    if (!op) throw UsageError("unknown operation '" + name + "'");
    return *op;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto item = std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) throw UsageError("pairs look like 3:3,3:4");
        pairs.emplace_back(to_size(item.substr(0, colon)), to_size(item.substr(colon + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return pairs;
}

std::vector<scw::OperationId> every_operation() {
    std::vector<scw::OperationId> ops;
    for (const auto& e : scw::all_operations()) ops.push_back(e.id);
    return ops;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-complexity workbench for star, product and boolean combined operations"};
    app.require_subcommand(1);

    std::string witness_spec;
    auto* witness = app.add_subcommand("witness", "Print a witness DFA in text format");
    witness->add_option("spec", witness_spec, "e.g. U:n=5:order=dcba")->required();

    std::string op_name;
    std::size_t m = 3, n = 3;
    std::size_t cap = scw::default_subset_cap;

    auto* complexity = app.add_subcommand("complexity", "Measure the state complexity of an operation's witnesses");
    complexity->add_option("op", op_name)->required();
    complexity->add_option("--m", m);
    complexity->add_option("--n", n)->required();
    complexity->add_option("--cap", cap, "Subset cap");

    std::string m_range = "3..6", n_range = "3..6";
    auto* bound = app.add_subcommand("bound", "Evaluate a bound, or dump the bound table as CSV with 'all'");
    bound->add_option("op", op_name)->required();
    bound->add_option("--m", m_range);
    bound->add_option("--n", n_range)->required();

    std::string verify_op = "all", format = "text";
    int jobs = 0;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "Compare measured sizes against the bound table");
    verify->add_option("op", verify_op);
    verify->add_option("--m", m_range);
    verify->add_option("--n", n_range);
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    verify->add_option("--cap", cap);
    verify->add_option("--jobs", jobs);
    verify->add_flag("--no-timing", no_timing, "Report 0 ms for every cell");

    std::size_t words = 500, maxlen = 12;
    std::uint64_t seed = 7;
    bool exhaustive = false;
    auto* oracle = app.add_subcommand("oracle", "Check pipeline membership against a direct semantic evaluation");
    oracle->add_option("op", op_name)->required();
    oracle->add_option("--m", m);
    oracle->add_option("--n", n)->required();
    oracle->add_option("--words", words);
    oracle->add_option("--maxlen", maxlen);
    oracle->add_option("--seed", seed);
    oracle->add_flag("--exhaustive", exhaustive, "Every word up to --maxlen instead of a random sample");

    std::string pairs_text = "3:3,3:4,3:5";
    std::size_t bit_cap = 26;
    bool with_difference = false;
    auto* conjecture = app.add_subcommand("conjecture", "Scan (K∩L)* with the five-letter witnesses");
    conjecture->add_option("--pairs", pairs_text);
    conjecture->add_option("--cap", cap);
    conjecture->add_option("--bit-cap", bit_cap);
    conjecture->add_flag("--difference", with_difference, "Also run (K\\L)* with the six-letter witnesses");
    conjecture->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    std::string letters;
    auto* monoid = app.add_subcommand("monoid", "Size of the transition monoid of a witness");
    monoid->add_option("spec", witness_spec)->required();
    monoid->add_option("--letters", letters, "Generating letters (default: whole alphabet)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : usage_error;
    }

    try {
        if (*witness) {
            std::cout << scw::write_dfa(scw::build(scw::parse_witness(witness_spec)));
            return 0;
        }
        if (*complexity) {
            auto op = parse_op(op_name);
            auto operands = scw::build_operands(scw::recipe(op, m, n));
            std::cout << scw::run_pipeline(op, operands, cap).minimal.size() << '\n';
            return 0;
        }
        if (*bound) {
            if (op_name == "all") {
                auto [mlo, mhi] = parse_range(m_range);
                auto [nlo, nhi] = parse_range(n_range);
                auto ops = every_operation();
                std::cout << scw::bound_table_csv(ops, mlo, mhi, nlo, nhi);
                return 0;
            }
            auto op = parse_op(op_name);
            std::cout << scw::evaluate(op, to_size(m_range.substr(0, m_range.find(".."))), to_size(n_range))
                      << '\n';
            return 0;
        }
        if (*verify) {
            auto [mlo, mhi] = parse_range(m_range);
            auto [nlo, nhi] = parse_range(n_range);
            std::vector<scw::OperationId> ops;
            if (verify_op == "all") ops = every_operation();
            else ops.push_back(parse_op(verify_op));
            scw::VerifyOptions options;
            options.cap = cap;
            options.jobs = jobs;
            auto cells = scw::verify_table(ops, mlo, mhi, nlo, nhi, options);
            std::cout << scw::format_cells(cells, *scw::parse_format(format), !no_timing);
            return scw::exit_code(cells);
        }
        if (*oracle) {
            auto op = parse_op(op_name);
            auto report = exhaustive ? scw::membership_oracle_exhaustive(op, m, n, maxlen)
                                     : scw::membership_oracle(op, m, n, words, maxlen, seed);
            std::cout << scw::format_oracle(report);
            return report.disagreements == 0 ? 0 : 1;
        }
        if (*conjecture) {
            auto pairs = parse_pairs(pairs_text);
            scw::ConjectureOptions options;
            options.cap = cap;
            options.bit_cap = bit_cap;
            options.include_difference = with_difference;
            auto cells = scw::conjecture_scan(pairs, options);
            std::cout << scw::format_cells(cells, *scw::parse_format(format));
            return scw::exit_code(cells);
        }
        if (*monoid) {
            auto d = scw::build(scw::parse_witness(witness_spec));
            std::cout << scw::monoid_size(d, letters.empty() ? d.alphabet() : letters) << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return usage_error;
}
