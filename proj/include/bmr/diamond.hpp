#pragma once

#include <iosfwd>
#include <vector>

#include "bmr/ncpoly.hpp"

namespace bmr {

enum class AmbiguityKind { Overlap, Inclusion };

// Overlap:   lhs(sigma) = a.b, lhs(tau) = b.c with a, b, c nonempty.
// Inclusion: lhs(sigma) = b,   lhs(tau) = a.b.c with sigma != tau.
struct Ambiguity {
  AmbiguityKind kind;
  int sigma;
  int tau;
  Word a;
  Word b;
  Word c;

  Word word() const;  // the ambiguous word a.b.c
};

// All overlap ambiguities over ordered pairs (sigma, tau) including
// sigma == tau, and all inclusion ambiguities over sigma != tau, ordered by
// (sigma, tau, overlaps by |b| then inclusions by offset).
std::vector<Ambiguity> enumerate_ambiguities(const ReductionSystem& s);

// The difference of the two one-step rewrites of the ambiguous word:
// overlap   rhs(sigma).c - a.rhs(tau),
// inclusion a.rhs(sigma).c - rhs(tau).
NCPoly s_polynomial(const Ambiguity& amb, const ReductionSystem& s,
                    const Guards& guards = {});

// True iff red(s_polynomial) == 0. A StepLimitError (inconclusive) propagates
// rather than counting as false.
bool check_resolvable(const Ambiguity& amb, const ReductionSystem& s,
                      const Guards& guards = {});

// Ambiguity consumed by a replay/completion step, in seq-file encoding:
// u == 0: overlap of rules x, y with shared block length z;
// u == 1: inclusion of rule x's lhs in rule y's lhs at offset z.
struct SeqStep {
  int x;
  int y;
  int z;
  int u;
};

enum class PickStrategy { MinWord, Fifo, MaxWord };

struct CompletionOptions {
  PickStrategy pick = PickStrategy::MinWord;
  std::vector<SeqStep>* recorder = nullptr;  // one step per added rule
  std::ostream* log = nullptr;               // per-step completion log lines
};

// Knuth-Bendix style completion: start from pair_rule of each relation,
// reduce s-polynomials of pending ambiguities, adjoin pair_rule of every
// nonzero normal form until no ambiguity is left. The returned system has all
// ambiguities resolvable and generates the same two-sided ideal.
ReductionSystem complete(const std::vector<NCPoly>& relations,
                         const MonomialOrder& ord, const Guards& guards = {},
                         const CompletionOptions& options = {});

// Drops every rule whose lhs is divisible by another rule's lhs (for equal
// lhs the earliest rule survives). Rule order is preserved.
ReductionSystem minimize(const ReductionSystem& s);

// Replaces every rhs by its red-normal form, so each rhs is supported on
// words avoiding all left-hand sides. Left-hand sides are unchanged.
ReductionSystem interreduce(const ReductionSystem& s, const Guards& guards = {});

}  // namespace bmr
