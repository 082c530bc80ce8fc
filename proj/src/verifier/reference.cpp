#include <stdexcept>
#include <utility>

#include "cdgs/verifier.hpp"

namespace cdgs {

ReferenceLanguage ReferenceLanguage::finite(WordSet words) {
  ReferenceLanguage r;
  r.kind = ReferenceKind::finite;
  r.words = std::move(words);
  return r;
}

ReferenceLanguage ReferenceLanguage::anbn() { return {ReferenceKind::anbn, 0, {}}; }

ReferenceLanguage ReferenceLanguage::lk(int k) {
  if (k < 1) throw std::invalid_argument("Lk needs k >= 1");
  return {ReferenceKind::lk, k, {}};
}

ReferenceLanguage ReferenceLanguage::sm(int m) {
  if (m < 1) throw std::invalid_argument("Sm needs m >= 1");
  return {ReferenceKind::sm, m, {}};
}

ReferenceLanguage ReferenceLanguage::anbnambm() { return {ReferenceKind::anbnambm, 0, {}}; }

namespace {

Word run(const std::string& symbol, std::size_t n) { return Word(n, symbol); }

std::string indexed_a(int i) { return "a" + std::to_string(i); }

}  // namespace

BoundedLanguage expand(const ReferenceLanguage& ref, std::size_t max_len) {
  BoundedLanguage out;
  out.bounds = Bounds::words(max_len);
  auto add = [&](Word w) {
    if (!w.empty() && w.size() <= max_len) out.words.insert(std::move(w));
  };
  switch (ref.kind) {
    case ReferenceKind::finite:
      for (const auto& w : ref.words) add(w);
      break;
    case ReferenceKind::anbn:
      for (std::size_t n = 1; 2 * n <= max_len; ++n) add(concat({run("a", n), run("b", n)}));
      break;
    case ReferenceKind::lk: {
      const auto k = static_cast<std::size_t>(ref.parameter);
      for (std::size_t n = 1; n * (k + 1) <= max_len; ++n) {
        Word w;
        for (std::size_t i = 1; i <= k + 1; ++i) {
          auto part = run(indexed_a(static_cast<int>(i)), n);
          w.insert(w.end(), part.begin(), part.end());
        }
        add(std::move(w));
      }
      break;
    }
    case ReferenceKind::sm: {
      const auto blocks = 2 * static_cast<std::size_t>(ref.parameter);
      for (std::size_t i = 1; 1 + blocks * (i + 1) <= max_len; ++i)
        add(concat({Word{"b"}, repeat(concat({run("a", i), Word{"b"}}), blocks)}));
      break;
    }
    case ReferenceKind::anbnambm:
      for (std::size_t n = 1; 2 * n + 2 <= max_len; ++n)
        for (std::size_t m = 1; 2 * n + 2 * m <= max_len; ++m)
          add(concat({run("a", n), run("b", n), run("a", m), run("b", m)}));
      break;
  }
  return out;
}

namespace {

using Runs = std::vector<std::pair<std::string, std::size_t>>;

Runs runs_of(const Word& w) {
  Runs r;
  for (const auto& s : w) {
    if (!r.empty() && r.back().first == s)
      ++r.back().second;
    else
      r.emplace_back(s, 1);
  }
  return r;
}

}  // namespace

bool reference_contains(const ReferenceLanguage& ref, const Word& w) {
  if (w.empty()) return false;
  const Runs r = runs_of(w);
  switch (ref.kind) {
    case ReferenceKind::finite:
      return ref.words.contains(w);
    case ReferenceKind::anbn:
      return r.size() == 2 && r[0].first == "a" && r[1].first == "b" && r[0].second == r[1].second;
    case ReferenceKind::lk: {
      const auto k = static_cast<std::size_t>(ref.parameter);
      if (r.size() != k + 1) return false;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i].first != indexed_a(static_cast<int>(i + 1)) || r[i].second != r[0].second) return false;
      return true;
    }
    case ReferenceKind::sm: {
      // b a^i b a^i b ... : runs alternate b(1), a(i), b(1), ..., ending in b(1)
      const auto blocks = 2 * static_cast<std::size_t>(ref.parameter);
      if (r.size() != 2 * blocks + 1) return false;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j % 2 == 0) {
          if (r[j].first != "b" || r[j].second != 1) return false;
        } else if (r[j].first != "a" || r[j].second != r[1].second) {
          return false;
        }
      }
      return true;
    }
    case ReferenceKind::anbnambm:
      return r.size() == 4 && r[0].first == "a" && r[1].first == "b" && r[2].first == "a" && r[3].first == "b" &&
             r[0].second == r[1].second && r[2].second == r[3].second;
  }
  return false;
}

}  // namespace cdgs
