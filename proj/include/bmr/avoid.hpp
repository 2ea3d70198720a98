#pragma once

#include <span>
#include <string>
#include <vector>

#include "bmr/guards.hpp"
#include "bmr/word.hpp"

namespace bmr {

// The factor-avoiding language of a pattern set T: all words over the
// alphabet containing no element of T as a factor. Closed under prefix.
struct AvoidSet {
  std::vector<Word> patterns;
  std::vector<Word> members;  // ascending under the order passed at enumeration
};

// Depth-first extension from the empty word, pruning a branch as soon as a
// pattern ends at the current word. Patterns must be nonempty. Throws
// StepLimitError at guards.avoid_member_cap members (the set is or appears
// infinite) and the word-length guard applies to every visited word.
AvoidSet avoid_enumerate(std::vector<Word> patterns, int alphabet_size,
                         const MonomialOrder& ord, const Guards& guards = {});

// Same traversal with the suffix test done by direct word comparisons instead
// of the pattern automaton; kept as a cross-check oracle.
AvoidSet avoid_enumerate_naive(std::vector<Word> patterns, int alphabet_size,
                               const MonomialOrder& ord, const Guards& guards = {});

// True iff the avoiding language is finite: no cycle among pattern-free
// automaton states is reachable from the start state.
bool avoid_is_finite(std::span<const Word> patterns, int alphabet_size);

// T-file format: one word per line over {s,t,u}, no blank lines,
// newline-terminated.
std::vector<Word> read_t_file(const std::string& path);
void write_t_file(const std::string& path, std::span<const Word> patterns);

}  // namespace bmr
