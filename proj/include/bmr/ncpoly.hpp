#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bmr/parampoly.hpp"
#include "bmr/pattern_automaton.hpp"
#include "bmr/word.hpp"

namespace bmr {

struct NCTerm {
  Word word;
  ParamPoly coeff;
};

// Noncommutative polynomial: finitely supported map Word -> ParamPoly, stored
// strictly descending under the ambient monomial order so the maximal support
// word is terms()[0].
class NCPoly {
 public:
  explicit NCPoly(const MonomialOrder& ord) : ord_(ord) {}

  static NCPoly zero(const MonomialOrder& ord) { return NCPoly(ord); }
  static NCPoly monomial(const MonomialOrder& ord, const Word& w,
                         const ParamPoly& c = ParamPoly(1));

  const MonomialOrder& order() const { return ord_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const NCTerm> terms() const { return terms_; }  // descending

  const Word& leading_word() const;     // throws ZeroPolyError on zero
  const ParamPoly& leading_coeff() const;
  ParamPoly coeff_of(const Word& w) const;

  std::string str() const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms_.size() == b.terms_.size() &&
           [&] {
             for (std::size_t i = 0; i < a.terms_.size(); ++i)
               if (!(a.terms_[i].word == b.terms_[i].word &&
                     a.terms_[i].coeff == b.terms_[i].coeff))
                 return false;
             return true;
           }();
  }

  friend NCPoly nc_add(const NCPoly& g, const NCPoly& h, const Guards& guards);
  friend NCPoly nc_scale(const ParamPoly& c, const NCPoly& g, const Guards& guards);
  friend NCPoly nc_mul(const NCPoly& g, const NCPoly& h, const Guards& guards);
  friend NCPoly nc_mul_words(const Word& a, const NCPoly& g, const Word& b,
                             const Guards& guards);
  friend class Reducer;

 private:
  MonomialOrder ord_;
  std::vector<NCTerm> terms_;
};

NCPoly nc_add(const NCPoly& g, const NCPoly& h, const Guards& guards = {});
NCPoly nc_sub(const NCPoly& g, const NCPoly& h, const Guards& guards = {});
NCPoly nc_scale(const ParamPoly& c, const NCPoly& g, const Guards& guards = {});
NCPoly nc_mul(const NCPoly& g, const NCPoly& h, const Guards& guards = {});
// a.g.b for words a, b; cheaper than nc_mul and order-preserving.
NCPoly nc_mul_words(const Word& a, const NCPoly& g, const Word& b,
                    const Guards& guards = {});

// Rewrite rule lhs -> rhs. Invariants: lhs is nonempty and does not occur in
// the support of rhs.
struct Reduction {
  Word lhs;
  NCPoly rhs;
};

// Ordered sequence of reductions. Indices are stable: rules are appended,
// never reordered. Carries a lazily rebuilt pattern automaton over the
// left-hand words for factor detection.
class ReductionSystem {
 public:
  explicit ReductionSystem(const MonomialOrder& ord) : ord_(ord) {}

  const MonomialOrder& order() const { return ord_; }
  std::size_t size() const { return rules_.size(); }
  const Reduction& rule(std::size_t i) const { return rules_[i]; }
  std::span<const Reduction> rules() const { return rules_; }

  void append(Reduction r);  // validates the Reduction invariants

  std::vector<Word> lt() const;  // left-hand words, rule order

  // Rebuilds on first use after an append. Not safe to call concurrently
  // with append; call once before fanning out read-only work.
  const PatternAutomaton& automaton() const;

 private:
  MonomialOrder ord_;
  std::vector<Reduction> rules_;
  mutable PatternAutomaton automaton_;
  mutable bool automaton_stale_ = true;
};

// r_{A,B,s}: replaces the coefficient a of A.lhs.B by a.A.rhs.B, leaving all
// other terms; acts trivially when A.lhs.B is not in the support.
NCPoly apply_reduction(const NCPoly& g, const Word& a, const Word& b,
                       const Reduction& s, const Guards& guards = {});

struct ReduceStrategy {
  enum class Occurrence { Leftmost, Rightmost };
  enum class RulePick { MinIndex, MaxIndex };
  Occurrence occurrence = Occurrence::Leftmost;
  RulePick rule_pick = RulePick::MinIndex;
};

// Normalization loop: repeatedly pick the maximal reducible support word W,
// the matching rule (least index under the canonical strategy), the leftmost
// occurrence, and rewrite; returns once no support word is reducible.
// Throws StepLimitError after guards.red_step_cap applications.
NCPoly red(const NCPoly& g, const ReductionSystem& s, const Guards& guards = {},
           const ReduceStrategy& strategy = {}, std::uint64_t* steps_out = nullptr);

// PAIR: extracts the rule Z -> Z - c.g from a polynomial g with leading word
// Z and leading coefficient c = +-1, so that lhs - rhs = c.g (the leading
// coefficient of lhs - rhs is normalized to +1).
Reduction pair_rule(const NCPoly& g, const Guards& guards = {});
// Same extraction at a caller-chosen support word z (coefficient must be +-1).
Reduction pair_rule_at(const NCPoly& g, const Word& z, const Guards& guards = {});

// True when every rule's lhs exceeds all support words of its rhs.
bool is_compatible(const ReductionSystem& s);

}  // namespace bmr
