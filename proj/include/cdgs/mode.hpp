#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cdgs {

enum class ModeKind {
  star,
  terminating,  // t
  at_most,      // <=k
  exactly,      // =k
  at_least,     // >=k
  between,      // (>=k & <=l)
  t_and,        // (t & inner), inner one of the three bounded basic kinds
};

/// A derivation mode from the set D: the five basic modes, the interval
/// mode (>=k & <=l) and the three t-conjunctions. Values are validated at
/// construction, so every Mode object is a member of D.
class Mode {
 public:
  static Mode star();
  static Mode t();
  static Mode at_most(int k);
  static Mode exactly(int k);
  static Mode at_least(int k);
  static Mode between(int k, int l);
  /// `inner` must be at_most, exactly or at_least.
  static Mode t_and(const Mode& inner);

  ModeKind kind() const { return kind_; }
  /// Step parameter; for between the lower bound, for t_and the inner bound.
  int k() const { return k_; }
  /// Upper bound of a between mode.
  int l() const { return l_; }
  /// Kind of the bounded conjunct of a t_and mode.
  ModeKind inner_kind() const { return inner_; }
  Mode inner() const;

  bool has_t_conjunct() const { return kind_ == ModeKind::terminating || kind_ == ModeKind::t_and; }

  /// Largest step count that can satisfy the mode, if bounded.
  std::optional<std::size_t> step_limit() const;
  /// Step count from which the predicate no longer depends on m.
  std::size_t saturation() const;

  /// Canonical text form, e.g. `(t & =2)`.
  std::string to_string() const;

  bool operator==(const Mode&) const = default;

 private:
  Mode(ModeKind kind, int k, int l, ModeKind inner) : kind_(kind), k_(k), l_(l), inner_(inner) {}

  ModeKind kind_ = ModeKind::star;
  int k_ = 0;
  int l_ = 0;
  ModeKind inner_ = ModeKind::star;
};

/// P(f, m, i, y) where `component_applicable` says whether some rule of
/// component i can still rewrite y.
bool mode_predicate(const Mode& f, std::size_t m, bool component_applicable);

/// Predicate of an arbitrary conjunction of basic modes (f1 & f2 & ...).
/// An empty conjunction holds.
bool conjunction_predicate(std::span<const Mode> conjuncts, std::size_t m, bool component_applicable);

/// Multiplies every step parameter by `factor` (used by prolongation).
Mode scale_mode(const Mode& f, int factor);

/// Parses the text produced by Mode::to_string; whitespace is ignored.
/// Throws std::invalid_argument on malformed text or an invalid mode.
Mode parse_mode(std::string_view text);

}  // namespace cdgs
