#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "cdgs/grammar.hpp"
#include "cdgs/mode.hpp"
#include "cdgs/verifier.hpp"
#include "cdgs/words.hpp"

namespace cdgs {

// ---- naming -----------------------------------------------------------------

/// `<base>__<i1>_<i2>...`; a bare `base` when there are no indices.
std::string flat_name(const std::string& base, const std::vector<std::string>& indices);
std::string flat_name(const std::string& base, std::initializer_list<std::size_t> indices);

/// Hands out names that avoid every name seen so far, suffixing `-1`, `-2`, ...
/// on collision.
class NameRegistry {
 public:
  NameRegistry() = default;
  template <class Range>
  explicit NameRegistry(const Range& taken) {
    for (const auto& n : taken) reserve(n);
  }

  void reserve(const std::string& name) { taken_.insert(name); }
  bool taken(const std::string& name) const { return taken_.contains(name); }
  std::string fresh(const std::string& wanted);

 private:
  std::set<std::string> taken_;
};

/// Which hybrid mode a construction targets: (t & =k) or (t & <=k).
enum class Variant { exactly, at_most };

Mode variant_mode(Variant v, std::size_t k);

// ---- normal-form simulations ------------------------------------------------

/// One component over S__1..S__k: a chain of k-1 unit rules, then S__k -> w
/// for each word.
CdSystem finite_to_cd1(const WordSet& words, std::size_t k, Variant variant = Variant::exactly);

/// `g` must have a single component of linear rules. P1 = {B -> B'},
/// P2 = {A' -> w}; declared mode (t & Δ1).
CdSystem linear_to_cd2(const CdSystem& g, Variant variant = Variant::exactly);

/// `g` is a single-component context-free grammar in which every nonterminal
/// has a rule. P1 = {B -> B', B -> B}, P2 = {A' -> w, A' -> A'}; declared
/// mode (t & Δk).
CdSystem cf_indexk_to_cd2(const CdSystem& g, std::size_t k, Variant variant = Variant::exactly);

/// Programmed grammar with appearance checking simulating `g` in (t & Δk).
/// Labels sim__i_j_c apply rule j of component i as step c; chk__i_j
/// verify that no rule of component i is applicable.
ProgrammedGrammar cd_to_programmed(const CdSystem& g, std::size_t k, Variant variant);

/// Replaces each rule of component i, rule j, by a chain through fresh
/// X__i_j_s (1 <= s < factor) and scales the declared mode by `factor`.
CdSystem prolong(const CdSystem& g, std::size_t factor);

/// Simulates a programmed grammar in separation form by a CD system whose
/// components all make 0 or exactly m steps. `target` is one of =p, >=p, t,
/// (>=p & <=q), (t & =p), (t & <=p), (t & >=p) with p >= m.
CdSystem nsf_programmed_to_cdgs(const ProgrammedGrammar& pg, std::size_t m, const Mode& target,
                                const NsfOptions& options = {});

// ---- named systems ----------------------------------------------------------

/// Two components for { a1^n ... a(k+1)^n }, k >= 2; declared mode (t & =k).
CdSystem build_example1(std::size_t k);

/// System for { b (a^i b)^(2nk) }. Variant::exactly gives n+1 components in
/// (t & =k+1); Variant::at_most splits every P_i into its two halves, giving
/// 2n+1 components in (t & <=k+1). Without `verbatim`, P_i rewrites A_j for
/// (i-1)k < j <= ik and P0 also has (S,k) -> (t1,0)(A1,0)b...; with it, the
/// range is (i-1)k <= j <= ik (k+1 symbols) and every derivation starts
/// with (q1,0), so i = 1 is never generated.
CdSystem build_snk_cdgs(std::size_t n, std::size_t k, Variant variant, bool verbatim = false);

/// Three components for { a^n b^n a^m b^m }; declared mode (t & =1).
CdSystem build_anbnambm();

/// Three components for { b (a^i b)^6 }; declared mode (t & =2). Without
/// `verbatim` the start rule S -> bAbBbCb is split as S -> S', S' -> bAbBbCb
/// so that it fills the two steps the mode demands.
CdSystem build_s3_cd3(bool verbatim = false);

}  // namespace cdgs
