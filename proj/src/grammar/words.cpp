#include "cdgs/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdgs {

std::string format_word(const Word& w) {
  if (w.empty()) return "#";
  const bool single = std::all_of(w.begin(), w.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += w[i];
  }
  return out;
}

Word parse_word(const std::string& text, const std::vector<std::string>& terminals) {
  Word w;
  if (text == "#") return w;
  if (text.find_first_of(" \t") != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) w.push_back(tok);
    return w;
  }
  if (terminals.empty()) {
    for (char c : text) w.emplace_back(1, c);
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    for (const auto& t : terminals)
      if (t.size() > best && text.compare(pos, t.size(), t) == 0) best = t.size();
    if (best == 0)
      throw std::invalid_argument("cannot tokenize '" + text + "' at offset " + std::to_string(pos));
    w.push_back(text.substr(pos, best));
    pos += best;
  }
  return w;
}

Word repeat(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace cdgs
