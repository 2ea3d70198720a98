#pragma once

#include <span>
#include <vector>

#include "bmr/word.hpp"

namespace bmr {

// Aho-Corasick automaton over the {s,t,u} alphabet with failure transitions
// resolved into dense goto tables. Pattern indices are positions in the
// vector the automaton was built from; duplicate patterns are allowed.
class PatternAutomaton {
 public:
  PatternAutomaton() { reset({}); }
  explicit PatternAutomaton(std::span<const Word> patterns) { reset(patterns); }

  void reset(std::span<const Word> patterns);

  int state_count() const { return static_cast<int>(states_.size()); }
  static constexpr int root() { return 0; }

  int step(int state, Letter x) const {
    return states_[static_cast<std::size_t>(state)].next[static_cast<std::size_t>(x)];
  }

  // Some pattern ends at this state (as a suffix of the state's word).
  bool has_match(int state) const {
    return !states_[static_cast<std::size_t>(state)].match.empty();
  }
  // Pattern indices ending at this state, ascending.
  std::span<const int> matches(int state) const {
    return states_[static_cast<std::size_t>(state)].match;
  }

  bool contains_any(const Word& w) const;
  // Smallest / largest pattern index occurring anywhere in w; -1 when none.
  int min_pattern_in(const Word& w) const;
  int max_pattern_in(const Word& w) const;

 private:
  struct State {
    std::array<int, kMaxAlphabet> next{};
    int fail = 0;
    std::vector<int> match;  // own patterns plus those inherited along fail links
  };
  std::vector<State> states_;
};

}  // namespace bmr
