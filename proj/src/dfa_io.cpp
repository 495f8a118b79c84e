#include "scw/dfa_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace scw {

std::string write_dfa(const Dfa& d) {
    std::ostringstream out;
    out << "dfa " << d.size() << '\n';
    out << "alphabet";
    for (char c : d.alphabet()) out << ' ' << c;
    out << "\ninitial " << d.initial() << "\nfinals";
    for (State f : d.finals()) out << ' ' << f;
    out << '\n';
    for (std::size_t i = 0; i < d.letter_count(); ++i) {
        out << d.alphabet()[i];
        for (State s : d.delta(i).image()) out << ' ' << s;
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Returns false at end of input. Blank lines are skipped.
    bool next(std::vector<std::string_view>& words) {
        while (pos_ < text_.size()) {
            auto end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            auto line = text_.substr(pos_, end - pos_);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            pos_ = end + 1;
            ++line_no_;
            words = split_words(line);
            if (!words.empty()) return true;
        }
        ++line_no_;
        return false;
    }

    std::size_t line() const noexcept { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

std::size_t parse_number(std::string_view word, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(word) + "'");
    return value;
}

void expect_keyword(LineReader& in, std::vector<std::string_view>& words, std::string_view keyword) {
    if (!in.next(words)) throw ParseError(in.line(), "missing '" + std::string(keyword) + "' line");
    if (words[0] != keyword)
        throw ParseError(in.line(), "expected '" + std::string(keyword) + "', found '" +
                                        std::string(words[0]) + "'");
}

}  // namespace

Dfa read_dfa(std::string_view text) {
    LineReader in(text);
    std::vector<std::string_view> words;

    expect_keyword(in, words, "dfa");
    if (words.size() != 2) throw ParseError(in.line(), "expected 'dfa <n>'");
    const std::size_t n = parse_number(words[1], in.line(), "state count");
    if (n == 0) throw ParseError(in.line(), "state count must be positive");

    expect_keyword(in, words, "alphabet");
    std::string alphabet;
    for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i].size() != 1) throw ParseError(in.line(), "letters must be single symbols");
        if (alphabet.find(words[i][0]) != std::string::npos)
            throw ParseError(in.line(), "duplicate letter '" + std::string(words[i]) + "'");
        alphabet += words[i][0];
    }

    expect_keyword(in, words, "initial");
    if (words.size() != 2) throw ParseError(in.line(), "expected 'initial <state>'");
    const auto initial = parse_number(words[1], in.line(), "initial state");
    if (initial >= n) throw ParseError(in.line(), "initial state out of range");

    expect_keyword(in, words, "finals");
    std::vector<State> finals;
    for (std::size_t i = 1; i < words.size(); ++i) {
        auto f = parse_number(words[i], in.line(), "final state");
        if (f >= n) throw ParseError(in.line(), "final state out of range");
        if (!finals.empty() && f <= finals.back())
            throw ParseError(in.line(), "finals must be ascending and distinct");
        finals.push_back(static_cast<State>(f));
    }

    std::vector<Transformation> delta;
    for (char letter : alphabet) {
        if (!in.next(words)) throw ParseError(in.line(), "incomplete delta");
        if (words[0].size() != 1 || words[0][0] != letter)
            throw ParseError(in.line(), std::string("expected row for letter '") + letter + "'");
        if (words.size() != n + 1)
            throw ParseError(in.line(), "row for letter '" + std::string(1, letter) + "' needs " +
                                            std::to_string(n) + " targets");
        std::vector<State> image(n);
        for (std::size_t s = 0; s < n; ++s) {
            auto target = parse_number(words[s + 1], in.line(), "target");
            if (target >= n) throw ParseError(in.line(), "target out of range");
            image[s] = static_cast<State>(target);
        }
        delta.push_back(Transformation::from_image(std::move(image)));
    }
    if (in.next(words)) throw ParseError(in.line(), "unexpected trailing line");

    return Dfa(n, std::move(alphabet), std::move(delta), static_cast<State>(initial), std::move(finals));
}

}  // namespace scw
