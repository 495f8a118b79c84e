#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "scw/dfa.hpp"

namespace scw {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& cause)
        : std::runtime_error("line " + std::to_string(line) + ": " + cause), line_(line), cause_(cause) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& cause() const noexcept { return cause_; }

private:
    std::size_t line_;
    std::string cause_;
};

// Line-oriented text format:
//
//   dfa 4
//   alphabet a b c
//   initial 0
//   finals 3
//   a 1 2 3 0
//   b 1 0 2 3
//   c 0 1 2 0
//
// One row per letter, in alphabet order. The finals list is ascending and may be empty.
std::string write_dfa(const Dfa& d);
Dfa read_dfa(std::string_view text);

}  // namespace scw
