#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bmr {

// Overflow guards and iteration caps. A computation aborts with a specific
// error as soon as a bound is reached; with checks_enabled == false the four
// arithmetic guards are skipped (step caps still apply, they are termination
// protection rather than overflow detection).
struct Guards {
  int max_word_len = 28;             // error when a word would reach this length
  std::size_t max_terms = 200000;    // error when an NC polynomial reaches this many terms
  std::int64_t max_coeff = 100000;   // error when some |coefficient| reaches this bound
  int max_exp = 100;                 // error when some parameter exponent reaches this bound
  std::uint64_t red_step_cap = 10000000;      // rule applications per red() call
  std::uint64_t closure_step_cap = 1000000;   // rule applications per closure product
  std::uint64_t completion_rule_cap = 100000; // rules added by complete()
  std::uint64_t avoid_member_cap = 1000000;   // members enumerated by avoid_enumerate()
  bool checks_enabled = true;
};

enum class GuardKind { WordLength, TermCount, Coefficient, Exponent };

const char* guard_name(GuardKind k);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GuardError : public Error {
 public:
  GuardError(GuardKind kind, const std::string& detail);
  GuardKind kind() const { return kind_; }

 private:
  GuardKind kind_;
};

class StepLimitError : public Error {
 public:
  StepLimitError(std::uint64_t cap, const std::string& where);
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// pair_rule on a polynomial whose leading coefficient is not +-1.
class NotMonicError : public Error {
 public:
  explicit NotMonicError(const std::string& detail);
};

// pair_rule / leading-term access on the zero polynomial.
class ZeroPolyError : public Error {
 public:
  explicit ZeroPolyError(const std::string& detail);
};

class ParseError : public Error {
 public:
  ParseError(const std::string& path, int line, const std::string& detail);
  const std::string& path() const { return path_; }
  int line() const { return line_; }

 private:
  std::string path_;
  int line_;
};

// Violation of condition (P) or (Q) while replaying a step sequence.
// step_index() is 1-based, matching the line number in a seq file.
class ReplayError : public Error {
 public:
  enum class Condition { P, Q };
  ReplayError(Condition cond, int step_index, const std::string& detail);
  Condition condition() const { return cond_; }
  int step_index() const { return step_; }

 private:
  Condition cond_;
  int step_;
};

}  // namespace bmr
