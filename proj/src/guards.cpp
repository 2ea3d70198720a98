#include "bmr/guards.hpp"

namespace bmr {

const char* guard_name(GuardKind k) {
  switch (k) {
    case GuardKind::WordLength: return "word-length";
    case GuardKind::TermCount: return "term-count";
    case GuardKind::Coefficient: return "coefficient";
    case GuardKind::Exponent: return "exponent";
  }
  return "?";
}

GuardError::GuardError(GuardKind kind, const std::string& detail)
    : Error(std::string("overflow guard (") + guard_name(kind) + "): " + detail),
      kind_(kind) {}

StepLimitError::StepLimitError(std::uint64_t cap, const std::string& where)
    : Error("step limit " + std::to_string(cap) + " exceeded in " + where),
      cap_(cap) {}

NotMonicError::NotMonicError(const std::string& detail)
    : Error("leading coefficient is not +-1: " + detail) {}

ZeroPolyError::ZeroPolyError(const std::string& detail)
    : Error("zero polynomial: " + detail) {}

ParseError::ParseError(const std::string& path, int line, const std::string& detail)
    : Error(path + ":" + std::to_string(line) + ": " + detail),
      path_(path),
      line_(line) {}

ReplayError::ReplayError(Condition cond, int step_index, const std::string& detail)
    : Error("condition (" + std::string(cond == Condition::P ? "P" : "Q") +
            ") violated at step " + std::to_string(step_index) + ": " + detail),
      cond_(cond),
      step_(step_index) {}

}  // namespace bmr
