#include "bmr/parampoly.hpp"

#include <cassert>
#include <cstdlib>

namespace bmr {

namespace {

void check_coeff(std::int64_t c, const Guards& guards) {
  if (guards.checks_enabled && std::abs(c) >= guards.max_coeff)
    throw GuardError(GuardKind::Coefficient,
                     "|" + std::to_string(c) + "| >= " +
                         std::to_string(guards.max_coeff));
}

// Shared constants for the overwhelmingly common coefficients.
const std::shared_ptr<const std::vector<PTerm>>& const_terms(std::int64_t c) {
  static const auto plus_one = std::make_shared<const std::vector<PTerm>>(
      std::vector<PTerm>{{CommMonomial::one(), 1}});
  static const auto minus_one = std::make_shared<const std::vector<PTerm>>(
      std::vector<PTerm>{{CommMonomial::one(), -1}});
  static const std::shared_ptr<const std::vector<PTerm>> none;
  if (c == 1) return plus_one;
  if (c == -1) return minus_one;
  return none;
}

}  // namespace

CommMonomial CommMonomial::var(int index) {
  assert(index >= 0 && index < kMaxParams);
  CommMonomial m;
  m.exp_[static_cast<std::size_t>(index)] = 1;
  return m;
}

bool CommMonomial::is_one() const {
  for (auto e : exp_)
    if (e != 0) return false;
  return true;
}

int CommMonomial::degree() const {
  int d = 0;
  for (auto e : exp_) d += e;
  return d;
}

std::string CommMonomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 0; i < kMaxParams; ++i) {
    const int e = exp_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    out += "a" + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

CommMonomial mono_mul(const CommMonomial& a, const CommMonomial& b,
                      const Guards& guards) {
  CommMonomial m;
  for (std::size_t i = 0; i < kMaxParams; ++i) {
    const int e = a.exp_[i] + b.exp_[i];
    if (guards.checks_enabled && e >= guards.max_exp)
      throw GuardError(GuardKind::Exponent,
                       "a" + std::to_string(i + 1) + "^" + std::to_string(e) +
                           " reaches bound " + std::to_string(guards.max_exp));
    m.exp_[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

ParamPoly::ParamPoly(std::int64_t c) {
  if (c == 0) return;
  if (auto shared = const_terms(c)) {
    terms_ = shared;
    return;
  }
  terms_ = std::make_shared<const std::vector<PTerm>>(
      std::vector<PTerm>{{CommMonomial::one(), c}});
}

ParamPoly ParamPoly::var(int index) {
  return monomial(CommMonomial::var(index), 1);
}

ParamPoly ParamPoly::monomial(const CommMonomial& m, std::int64_t coeff) {
  if (coeff == 0) return ParamPoly{};
  if (m.is_one()) return ParamPoly(coeff);
  return wrap(std::vector<PTerm>{{m, coeff}});
}

ParamPoly ParamPoly::wrap(std::vector<PTerm>&& terms) {
  if (terms.empty()) return ParamPoly{};
  return ParamPoly(std::make_shared<const std::vector<PTerm>>(std::move(terms)));
}

std::span<const PTerm> ParamPoly::terms() const {
  if (!terms_) return {};
  return {terms_->data(), terms_->size()};
}

std::optional<int> ParamPoly::is_pm_one() const {
  if (!terms_ || terms_->size() != 1) return std::nullopt;
  const PTerm& t = terms_->front();
  if (!t.mono.is_one()) return std::nullopt;
  if (t.coeff == 1) return 1;
  if (t.coeff == -1) return -1;
  return std::nullopt;
}

bool ParamPoly::is_constant() const {
  if (!terms_) return true;
  return terms_->size() == 1 && terms_->front().mono.is_one();
}

std::int64_t ParamPoly::constant_term() const {
  if (!terms_) return 0;
  // The unit monomial sorts first.
  const PTerm& t = terms_->front();
  return t.mono.is_one() ? t.coeff : 0;
}

std::string ParamPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  // Largest monomial first.
  for (auto it = terms_->rbegin(); it != terms_->rend(); ++it) {
    const bool first = out.empty();
    const std::int64_t c = it->coeff;
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    const std::int64_t mag = std::abs(c);
    if (it->mono.is_one())
      out += std::to_string(mag);
    else {
      if (mag != 1) out += std::to_string(mag);
      out += it->mono.str();
    }
  }
  return out;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_ == b.terms_) return true;
  const auto ta = a.terms(), tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (!(ta[i].mono == tb[i].mono && ta[i].coeff == tb[i].coeff)) return false;
  return true;
}

ParamPoly pp_add(const ParamPoly& p, const ParamPoly& q, const Guards& guards) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const auto& a = *p.terms_;
  const auto& b = *q.terms_;
  std::vector<PTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono < b[j].mono)
      out.push_back(a[i++]);
    else if (b[j].mono < a[i].mono)
      out.push_back(b[j++]);
    else {
      const std::int64_t c = a[i].coeff + b[j].coeff;
      check_coeff(c, guards);
      if (c != 0) out.push_back({a[i].mono, c});
      ++i, ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return ParamPoly::wrap(std::move(out));
}

ParamPoly pp_sub(const ParamPoly& p, const ParamPoly& q, const Guards& guards) {
  return pp_add(p, pp_neg(q), guards);
}

ParamPoly pp_neg(const ParamPoly& p) {
  if (p.is_zero()) return p;
  if (auto s = p.is_pm_one()) return ParamPoly(-*s);
  std::vector<PTerm> out(*p.terms_);
  for (auto& t : out) t.coeff = -t.coeff;
  return ParamPoly::wrap(std::move(out));
}

ParamPoly pp_mul(const ParamPoly& p, const ParamPoly& q, const Guards& guards) {
  if (p.is_zero() || q.is_zero()) return ParamPoly{};
  if (auto s = p.is_pm_one()) return *s == 1 ? q : pp_neg(q);
  if (auto s = q.is_pm_one()) return *s == 1 ? p : pp_neg(p);
  ParamPoly acc;
  for (const PTerm& tp : *p.terms_) {
    std::vector<PTerm> row;
    row.reserve(q.terms_->size());
    for (const PTerm& tq : *q.terms_) {
      const std::int64_t c = tp.coeff * tq.coeff;
      check_coeff(c, guards);
      row.push_back({mono_mul(tp.mono, tq.mono, guards), c});
    }
    acc = pp_add(acc, ParamPoly::wrap(std::move(row)), guards);
  }
  return acc;
}

}  // namespace bmr
