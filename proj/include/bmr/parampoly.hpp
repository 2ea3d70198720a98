#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmr/guards.hpp"

namespace bmr {

inline constexpr int kMaxParams = 8;

// Commutative monomial a1^e1 ... al^el. Slots beyond the presentation's
// parameter count stay zero, so the fixed width is invisible to callers.
class CommMonomial {
 public:
  static CommMonomial one() { return CommMonomial{}; }
  static CommMonomial var(int index);  // 0-based: var(0) = a1

  int exponent(int index) const { return exp_[static_cast<std::size_t>(index)]; }
  bool is_one() const;
  int degree() const;
  std::string str() const;  // "a1^2a3"; the unit monomial renders as "1"

  friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;

  friend CommMonomial mono_mul(const CommMonomial& a, const CommMonomial& b,
                               const Guards& guards);

 private:
  std::array<std::uint16_t, kMaxParams> exp_{};
};

struct PTerm {
  CommMonomial mono;
  std::int64_t coeff;
};

// Element of Z[a1..al]. Terms are held in a shared immutable vector sorted by
// monomial (no zero coefficients), so copies are O(1) and thread-safe.
class ParamPoly {
 public:
  ParamPoly() = default;                  // zero
  ParamPoly(std::int64_t c);              // constant; implicit on purpose
  static ParamPoly var(int index);        // a_{index+1}
  static ParamPoly monomial(const CommMonomial& m, std::int64_t coeff);

  bool is_zero() const { return !terms_; }
  std::size_t term_count() const { return terms_ ? terms_->size() : 0; }
  std::span<const PTerm> terms() const;   // ascending by monomial

  std::optional<int> is_pm_one() const;   // +1 / -1 for the constants +-1
  bool is_constant() const;
  std::int64_t constant_term() const;     // coefficient of the unit monomial

  std::string str() const;                // "a1+1", "-2a1a2", "0"

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  friend ParamPoly pp_add(const ParamPoly& p, const ParamPoly& q,
                          const Guards& guards);
  friend ParamPoly pp_mul(const ParamPoly& p, const ParamPoly& q,
                          const Guards& guards);
  friend ParamPoly pp_neg(const ParamPoly& p);

 private:
  explicit ParamPoly(std::shared_ptr<const std::vector<PTerm>> terms)
      : terms_(std::move(terms)) {}
  static ParamPoly wrap(std::vector<PTerm>&& terms);

  std::shared_ptr<const std::vector<PTerm>> terms_;  // null = zero, else nonempty
};

ParamPoly pp_add(const ParamPoly& p, const ParamPoly& q, const Guards& guards = {});
ParamPoly pp_sub(const ParamPoly& p, const ParamPoly& q, const Guards& guards = {});
ParamPoly pp_mul(const ParamPoly& p, const ParamPoly& q, const Guards& guards = {});
ParamPoly pp_neg(const ParamPoly& p);

inline std::optional<int> pp_is_pm_one(const ParamPoly& p) { return p.is_pm_one(); }

}  // namespace bmr
