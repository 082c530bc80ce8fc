#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cdgs/grammar.hpp"

namespace cdgs {

/// Syntax error in a grammar file; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Parses a `.gsw` grammar file. Throws ParseError on malformed text and
/// std::invalid_argument (listing the violations) on an invalid grammar.
AnyGrammar parse_grammar(std::string_view text);

/// Canonical text; parse_grammar(serialize(g)) == g.
std::string serialize(const AnyGrammar& g);

AnyGrammar load_grammar(const std::string& path);
void save_grammar(const std::string& path, const AnyGrammar& g);

}  // namespace cdgs
