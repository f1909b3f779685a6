#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "qwalg/transforms.hpp"

namespace qwalg {

// Line-oriented text format:
//   # comment lines anywhere
//   order N                      (required, first directive)
//   one K                        (required)
//   names s0 s1 ... s(N-1)       (optional)
//   star i0 i1 ... i(N-1)        (required with `op prod`, rejected with `imp`)
//   imp                          followed by N rows of N indices
//   op prod                      followed by N rows of N indices
// Exactly one of `imp` / `op prod`. Whitespace within rows is free; row and
// column counts are strict.

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column = 0);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class IndexOutOfRangeError : public ParseError {
public:
    IndexOutOfRangeError(std::string message, int line, int column = 0)
        : ParseError(std::move(message), line, column) {}
};

class DuplicateBlockError : public ParseError {
public:
    DuplicateBlockError(std::string message, int line)
        : ParseError(std::move(message), line) {}
};

using ParsedAlgebra = std::variant<FiniteAlgebra, ProductAlgebra>;

ParsedAlgebra parse_algebra(const std::string& text);
ParsedAlgebra parse_algebra_file(const std::string& path);

// Canonical serialization; parse(write(a)) == a and write is stable.
std::string write_algebra(const FiniteAlgebra& alg);
std::string write_algebra(const ProductAlgebra& p);

// Converts product-signature input on demand (may throw NotInvolutiveMBEError).
FiniteAlgebra as_implication(const ParsedAlgebra& parsed);

} // namespace qwalg
