#pragma once

#include <set>
#include <string>
#include <vector>

namespace cdgs {

/// A terminal word as the sequence of its terminal names.
using Word = std::vector<std::string>;

/// Length-lexicographic order: shorter words first, ties broken by
/// lexicographic comparison of the symbol names.
struct LengthLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, LengthLexLess>;

/// Text form of a word: the empty word is `#`; words over single-character
/// symbols are concatenated (`abab`), all others are space-separated
/// (`a1 a2 a3`).
std::string format_word(const Word& w);

/// Inverse of format_word for a given terminal alphabet. Text containing
/// spaces is split on whitespace; otherwise it is tokenized greedily by
/// longest match against `terminals` (or per character when `terminals`
/// is empty). Throws std::invalid_argument when tokenization fails.
Word parse_word(const std::string& text, const std::vector<std::string>& terminals = {});

/// Repeats `w` `times` times.
Word repeat(const Word& w, std::size_t times);

/// Concatenation helper.
Word concat(std::initializer_list<Word> parts);

}  // namespace cdgs
