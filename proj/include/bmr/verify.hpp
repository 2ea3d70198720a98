#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bmr/avoid.hpp"
#include "bmr/diamond.hpp"
#include "bmr/presentations.hpp"

namespace bmr {

// The defining relations turned into the initial reduction system, one rule
// per relation in presentation order.
ReductionSystem initial_system(const GroupPresentation& pres,
                               const Guards& guards = {});

// Replays a step sequence against the evolving system: checks condition (P)
// (the cited rules really form the stated overlap/inclusion), reduces the
// resulting difference, checks condition (Q) (nonzero, exactly one support
// word reducible modulo the patterns, with unit coefficient) and appends the
// extracted rule. Throws ReplayError with the 1-based step index on violation.
ReductionSystem replay(const GroupPresentation& pres,
                       std::span<const Word> t_patterns,
                       std::span<const SeqStep> steps, const Guards& guards = {});

// Post-replay adjustment: for n in {7,11,15} drop rule 3, for n = 22 drop
// rule 4 (the initial rules whose rhs leaves the avoiding span); otherwise
// the system is returned unchanged.
ReductionSystem finalize_system(int n, const ReductionSystem& s);

enum class DeriveMode { SelfComplete, Replay };

// Serial reference kernel: products red(w.x) for every basis word w
// (ascending) and letter x (ascending), index i <-> (basis[i / alphabet],
// i % alphabet). guards.closure_step_cap bounds each product.
std::vector<NCPoly> closure_products_serial(
    std::span<const Word> basis, int alphabet_size, const ReductionSystem& r,
    const Guards& guards = {},
    const std::function<void(std::size_t, std::size_t)>& progress = nullptr);

// OpenMP fan-out over the same index space; identical results and identical
// first-failure behavior as the serial reference. jobs <= 1 falls back to the
// serial kernel.
std::vector<NCPoly> closure_products_parallel(
    std::span<const Word> basis, int alphabet_size, const ReductionSystem& r,
    const Guards& guards = {}, int jobs = 1,
    const std::function<void(std::size_t, std::size_t)>& progress = nullptr);

struct ClosureEntry {
  Word basis;
  Letter x;
  NCPoly product;
};

struct VerificationReport {
  int n = 0;
  DeriveMode mode = DeriveMode::SelfComplete;
  bool pass = false;
  std::string failure;  // first failure detail when !pass

  long group_order = 0;
  long avoid_size = 0;
  std::size_t lt_size = 0;
  int rules_initial = 0;
  int rules_added = 0;

  std::vector<Word> t;  // the pattern set T
  AvoidSet avoid;
  std::optional<ReductionSystem> system;
  std::vector<ClosureEntry> closure;
};

struct VerifyOptions {
  DeriveMode mode = DeriveMode::SelfComplete;
  std::vector<SeqStep> steps;                    // replay mode
  std::optional<std::vector<Word>> t_patterns;   // required in replay mode
  PickStrategy pick = PickStrategy::MinWord;     // self-complete mode
  int jobs = 1;
  std::function<void(std::size_t, std::size_t)> progress;
};

// The freeness check: derive the reduction system (self-complete: complete,
// minimize, interreduce; replay: replay the steps and apply the final-system
// adjustment), then assert |AVO(T)| equals the group order, every rhs is
// supported on AVO(T), and every basis product red(w.x) is supported on
// AVO(T). Guard and step-cap errors propagate; everything else is reported
// through pass/failure.
VerificationReport verify_freeness(const GroupPresentation& pres,
                                   const VerifyOptions& options = {},
                                   const Guards& guards = {});

void write_report(std::ostream& out, const VerificationReport& report);

std::string render_rule(std::size_t index, const Reduction& r);

// seq-file format: one step per line, four whitespace-separated integers
// "x y z u".
std::vector<SeqStep> read_seq_file(const std::string& path);
void write_seq_file(const std::string& path, std::span<const SeqStep> steps);

}  // namespace bmr
