#include "cdgs/mode.hpp"

#include <cctype>
#include <stdexcept>

namespace cdgs {

namespace {

void require_positive(int k) {
  if (k < 1) throw std::invalid_argument("mode parameter must be a positive integer");
}

const char* cmp_token(ModeKind kind) {
  switch (kind) {
    case ModeKind::at_most: return "<=";
    case ModeKind::exactly: return "=";
    case ModeKind::at_least: return ">=";
    default: return "?";
  }
}

}  // namespace

Mode Mode::star() { return {ModeKind::star, 0, 0, ModeKind::star}; }
Mode Mode::t() { return {ModeKind::terminating, 0, 0, ModeKind::star}; }

Mode Mode::at_most(int k) {
  require_positive(k);
  return {ModeKind::at_most, k, 0, ModeKind::star};
}

Mode Mode::exactly(int k) {
  require_positive(k);
  return {ModeKind::exactly, k, 0, ModeKind::star};
}

Mode Mode::at_least(int k) {
  require_positive(k);
  return {ModeKind::at_least, k, 0, ModeKind::star};
}

Mode Mode::between(int k, int l) {
  require_positive(k);
  require_positive(l);
  if (k > l) throw std::invalid_argument("k ≤ ℓ required");
  return {ModeKind::between, k, l, ModeKind::star};
}

Mode Mode::t_and(const Mode& inner) {
  switch (inner.kind()) {
    case ModeKind::at_most:
    case ModeKind::exactly:
    case ModeKind::at_least:
      return {ModeKind::t_and, inner.k(), 0, inner.kind()};
    default:
      throw std::invalid_argument("t-conjunction takes only <=k, =k or >=k");
  }
}

Mode Mode::inner() const {
  if (kind_ != ModeKind::t_and) throw std::logic_error("inner() on a mode without t-conjunct");
  return Mode{inner_, k_, 0, ModeKind::star};
}

std::optional<std::size_t> Mode::step_limit() const {
  switch (kind_) {
    case ModeKind::at_most:
    case ModeKind::exactly:
      return static_cast<std::size_t>(k_);
    case ModeKind::between:
      return static_cast<std::size_t>(l_);
    case ModeKind::t_and:
      if (inner_ == ModeKind::at_least) return std::nullopt;
      return static_cast<std::size_t>(k_);
    default:
      return std::nullopt;
  }
}

std::size_t Mode::saturation() const {
  switch (kind_) {
    case ModeKind::star:
    case ModeKind::terminating:
      return 0;
    case ModeKind::between:
      return static_cast<std::size_t>(l_) + 1;
    default:
      return static_cast<std::size_t>(k_) + (step_limit() ? 1 : 0);
  }
}

std::string Mode::to_string() const {
  switch (kind_) {
    case ModeKind::star: return "*";
    case ModeKind::terminating: return "t";
    case ModeKind::at_most:
    case ModeKind::exactly:
    case ModeKind::at_least:
      return cmp_token(kind_) + std::to_string(k_);
    case ModeKind::between:
      return "(>=" + std::to_string(k_) + " & <=" + std::to_string(l_) + ")";
    case ModeKind::t_and:
      return std::string("(t & ") + cmp_token(inner_) + std::to_string(k_) + ")";
  }
  return "?";
}

bool mode_predicate(const Mode& f, std::size_t m, bool component_applicable) {
  const auto k = static_cast<std::size_t>(f.k());
  switch (f.kind()) {
    case ModeKind::star: return true;
    case ModeKind::terminating: return !component_applicable;
    case ModeKind::at_most: return m <= k;
    case ModeKind::exactly: return m == k;
    case ModeKind::at_least: return m >= k;
    case ModeKind::between: return m >= k && m <= static_cast<std::size_t>(f.l());
    case ModeKind::t_and:
      return !component_applicable && mode_predicate(f.inner(), m, component_applicable);
  }
  return false;
}

bool conjunction_predicate(std::span<const Mode> conjuncts, std::size_t m, bool component_applicable) {
  for (const auto& f : conjuncts)
    if (!mode_predicate(f, m, component_applicable)) return false;
  return true;
}

Mode scale_mode(const Mode& f, int factor) {
  if (factor < 1) throw std::invalid_argument("scale factor must be positive");
  switch (f.kind()) {
    case ModeKind::star:
    case ModeKind::terminating:
      return f;
    case ModeKind::at_most: return Mode::at_most(f.k() * factor);
    case ModeKind::exactly: return Mode::exactly(f.k() * factor);
    case ModeKind::at_least: return Mode::at_least(f.k() * factor);
    case ModeKind::between: return Mode::between(f.k() * factor, f.l() * factor);
    case ModeKind::t_and: return Mode::t_and(scale_mode(f.inner(), factor));
  }
  return f;
}

namespace {

struct ModeReader {
  std::string s;
  std::size_t pos = 0;

  bool eat(std::string_view tok) {
    if (s.compare(pos, tok.size(), tok) != 0) return false;
    pos += tok.size();
    return true;
  }

  int number() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 9) throw std::invalid_argument("expected a step count in mode '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }

  // cmp := ("<=" | "=" | ">=") INT
  Mode cmp() {
    if (eat("<=")) return Mode::at_most(number());
    if (eat(">=")) return Mode::at_least(number());
    if (eat("=")) return Mode::exactly(number());
    throw std::invalid_argument("expected <=, = or >= in mode '" + s + "'");
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) throw std::invalid_argument("expected '" + std::string(tok) + "' in mode '" + s + "'");
  }
};

}  // namespace

Mode parse_mode(std::string_view text) {
  ModeReader r;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) r.s += c;
  if (r.s.empty()) throw std::invalid_argument("empty mode");
  Mode m = Mode::star();
  if (r.eat("*")) {
  } else if (r.eat("(t&")) {
    m = Mode::t_and(r.cmp());
    r.expect(")");
  } else if (r.eat("(>=")) {
    const int k = r.number();
    r.expect("&<=");
    const int l = r.number();
    r.expect(")");
    m = Mode::between(k, l);
  } else if (r.eat("t")) {
    m = Mode::t();
  } else {
    m = r.cmp();
  }
  if (r.pos != r.s.size()) throw std::invalid_argument("trailing text in mode '" + r.s + "'");
  return m;
}

}  // namespace cdgs
