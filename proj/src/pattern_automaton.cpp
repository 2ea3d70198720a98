#include "bmr/pattern_automaton.hpp"

#include <algorithm>
#include <queue>

namespace bmr {

void PatternAutomaton::reset(std::span<const Word> patterns) {
  states_.clear();
  states_.emplace_back();  // root
  // Trie.
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const Word& w = patterns[p];
    int state = 0;
    for (int i = 0; i < w.size(); ++i) {
      const auto x = static_cast<std::size_t>(w.letter(i));
      int next = states_[static_cast<std::size_t>(state)].next[x];
      if (next == 0) {
        next = static_cast<int>(states_.size());
        states_[static_cast<std::size_t>(state)].next[x] = next;
        states_.emplace_back();
      }
      state = next;
    }
    states_[static_cast<std::size_t>(state)].match.push_back(static_cast<int>(p));
  }
  // Failure links, match inheritance and dense goto closure, in BFS order.
  std::queue<int> bfs;
  for (int x = 0; x < kMaxAlphabet; ++x) {
    const int next = states_[0].next[static_cast<std::size_t>(x)];
    if (next != 0) bfs.push(next);
  }
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    State& su = states_[static_cast<std::size_t>(u)];
    const State& sf = states_[static_cast<std::size_t>(su.fail)];
    if (!sf.match.empty()) {
      std::vector<int> merged;
      merged.reserve(su.match.size() + sf.match.size());
      std::merge(su.match.begin(), su.match.end(), sf.match.begin(),
                 sf.match.end(), std::back_inserter(merged));
      su.match = std::move(merged);
    }
    for (int x = 0; x < kMaxAlphabet; ++x) {
      const auto xi = static_cast<std::size_t>(x);
      const int v = states_[static_cast<std::size_t>(u)].next[xi];
      const int via_fail =
          states_[static_cast<std::size_t>(states_[static_cast<std::size_t>(u)].fail)]
              .next[xi];
      if (v != 0) {
        states_[static_cast<std::size_t>(v)].fail = via_fail;
        bfs.push(v);
      } else {
        states_[static_cast<std::size_t>(u)].next[xi] = via_fail;
      }
    }
  }
}

bool PatternAutomaton::contains_any(const Word& w) const {
  int state = 0;
  for (int i = 0; i < w.size(); ++i) {
    state = step(state, w.letter(i));
    if (has_match(state)) return true;
  }
  return false;
}

int PatternAutomaton::min_pattern_in(const Word& w) const {
  int best = -1;
  int state = 0;
  for (int i = 0; i < w.size(); ++i) {
    state = step(state, w.letter(i));
    const auto& m = states_[static_cast<std::size_t>(state)].match;
    if (!m.empty() && (best == -1 || m.front() < best)) best = m.front();
  }
  return best;
}

int PatternAutomaton::max_pattern_in(const Word& w) const {
  int best = -1;
  int state = 0;
  for (int i = 0; i < w.size(); ++i) {
    state = step(state, w.letter(i));
    const auto& m = states_[static_cast<std::size_t>(state)].match;
    if (!m.empty() && m.back() > best) best = m.back();
  }
  return best;
}

}  // namespace bmr
