#include "bmr/ncpoly.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace bmr {

namespace {

void check_term_count(std::size_t n, const Guards& guards) {
  if (guards.checks_enabled && n >= guards.max_terms)
    throw GuardError(GuardKind::TermCount,
                     std::to_string(n) + " terms >= " +
                         std::to_string(guards.max_terms));
}

Word word_build(const Word& a, const Word& v, const Word& b, const Guards& guards) {
  const int total = a.size() + v.size() + b.size();
  if (guards.checks_enabled && total >= guards.max_word_len)
    throw GuardError(GuardKind::WordLength,
                     a.str() + " . " + v.str() + " . " + b.str() + " has length " +
                         std::to_string(total) + " >= " +
                         std::to_string(guards.max_word_len));
  Word w = a;
  for (int i = 0; i < v.size(); ++i) w.push_back(v.letter(i));
  for (int i = 0; i < b.size(); ++i) w.push_back(b.letter(i));
  return w;
}

}  // namespace

NCPoly NCPoly::monomial(const MonomialOrder& ord, const Word& w, const ParamPoly& c) {
  NCPoly g(ord);
  if (!c.is_zero()) g.terms_.push_back({w, c});
  return g;
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) throw ZeroPolyError("leading word requested");
  return terms_.front().word;
}

const ParamPoly& NCPoly::leading_coeff() const {
  if (terms_.empty()) throw ZeroPolyError("leading coefficient requested");
  return terms_.front().coeff;
}

ParamPoly NCPoly::coeff_of(const Word& w) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), w,
      [&](const NCTerm& t, const Word& key) { return word_greater(ord_, t.word, key); });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return ParamPoly{};
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const NCTerm& t : terms_) {
    const auto pterms = t.coeff.terms();
    for (auto it = pterms.rbegin(); it != pterms.rend(); ++it) {
      const bool first = out.empty();
      if (it->coeff < 0)
        out += "-";
      else if (!first)
        out += "+";
      const std::int64_t mag = it->coeff < 0 ? -it->coeff : it->coeff;
      std::string body;
      if (mag != 1) body += std::to_string(mag);
      if (!it->mono.is_one()) body += it->mono.str();
      if (!t.word.empty()) body += t.word.str();
      if (body.empty()) body = "1";
      out += body;
    }
  }
  return out;
}

NCPoly nc_add(const NCPoly& g, const NCPoly& h, const Guards& guards) {
  assert(g.order() == h.order());
  if (g.is_zero()) return h;
  if (h.is_zero()) return g;
  NCPoly out(g.ord_);
  out.terms_.reserve(g.terms_.size() + h.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < g.terms_.size() && j < h.terms_.size()) {
    const int c = compare(g.ord_, g.terms_[i].word, h.terms_[j].word);
    if (c > 0)
      out.terms_.push_back(g.terms_[i++]);
    else if (c < 0)
      out.terms_.push_back(h.terms_[j++]);
    else {
      ParamPoly sum = pp_add(g.terms_[i].coeff, h.terms_[j].coeff, guards);
      if (!sum.is_zero()) out.terms_.push_back({g.terms_[i].word, std::move(sum)});
      ++i, ++j;
    }
  }
  while (i < g.terms_.size()) out.terms_.push_back(g.terms_[i++]);
  while (j < h.terms_.size()) out.terms_.push_back(h.terms_[j++]);
  check_term_count(out.terms_.size(), guards);
  return out;
}

NCPoly nc_scale(const ParamPoly& c, const NCPoly& g, const Guards& guards) {
  if (c.is_zero()) return NCPoly(g.ord_);
  NCPoly out(g.ord_);
  out.terms_.reserve(g.terms_.size());
  for (const NCTerm& t : g.terms_)
    out.terms_.push_back({t.word, pp_mul(c, t.coeff, guards)});
  return out;
}

NCPoly nc_sub(const NCPoly& g, const NCPoly& h, const Guards& guards) {
  return nc_add(g, nc_scale(ParamPoly(-1), h, guards), guards);
}

NCPoly nc_mul(const NCPoly& g, const NCPoly& h, const Guards& guards) {
  NCPoly out(g.order());
  for (const NCTerm& tg : g.terms())
    out = nc_add(out, nc_scale(tg.coeff, nc_mul_words(tg.word, h, Word{}, guards), guards),
                 guards);
  return out;
}

NCPoly nc_mul_words(const Word& a, const NCPoly& g, const Word& b,
                    const Guards& guards) {
  NCPoly out(g.ord_);
  out.terms_.reserve(g.terms_.size());
  // Two-sided multiplication by fixed words is strictly monotone, so the
  // descending term order is preserved.
  for (const NCTerm& t : g.terms_)
    out.terms_.push_back({word_build(a, t.word, b, guards), t.coeff});
  return out;
}

void ReductionSystem::append(Reduction r) {
  if (r.lhs.empty()) throw Error("reduction lhs must be nonempty");
  if (!r.rhs.coeff_of(r.lhs).is_zero())
    throw Error("reduction lhs " + r.lhs.str() + " occurs in the rhs support");
  rules_.push_back(std::move(r));
  automaton_stale_ = true;
}

std::vector<Word> ReductionSystem::lt() const {
  std::vector<Word> out;
  out.reserve(rules_.size());
  for (const Reduction& r : rules_) out.push_back(r.lhs);
  return out;
}

const PatternAutomaton& ReductionSystem::automaton() const {
  if (automaton_stale_) {
    std::vector<Word> pats = lt();
    automaton_.reset(pats);
    automaton_stale_ = false;
  }
  return automaton_;
}

// Internal access point for the rewrite kernel.
class Reducer {
 public:
  // Removes terms[skip] (the coefficient a at word A.lhs.B) and merges in
  // a.A.rhs.B. Keeps the vector strictly descending; *frontier is lowered to
  // the first output position that no longer mirrors the old prefix.
  static void merge_replace(std::vector<NCTerm>& terms, std::size_t skip,
                            const ParamPoly& a, const Word& A, const NCPoly& rhs,
                            const Word& B, const MonomialOrder& ord,
                            const Guards& guards, std::size_t* frontier) {
    std::vector<NCTerm> repl;
    repl.reserve(rhs.term_count());
    for (const NCTerm& t : rhs.terms())
      repl.push_back({word_build(A, t.word, B, guards), pp_mul(a, t.coeff, guards)});

    std::vector<NCTerm> out;
    out.reserve(terms.size() - 1 + repl.size());
    constexpr std::size_t kNoChange = std::numeric_limits<std::size_t>::max();
    std::size_t first_change = kNoChange;
    std::size_t i = 0, j = 0;
    while (i < terms.size() || j < repl.size()) {
      if (i == skip) {
        if (first_change == kNoChange) first_change = out.size();
        ++i;
        continue;
      }
      if (i == terms.size()) {
        if (first_change == kNoChange) first_change = out.size();
        out.push_back(std::move(repl[j++]));
        continue;
      }
      if (j == repl.size()) {
        out.push_back(std::move(terms[i++]));
        continue;
      }
      const int c = compare(ord, terms[i].word, repl[j].word);
      if (c > 0) {
        out.push_back(std::move(terms[i++]));
      } else if (c < 0) {
        if (first_change == kNoChange) first_change = out.size();
        out.push_back(std::move(repl[j++]));
      } else {
        if (first_change == kNoChange) first_change = out.size();
        ParamPoly sum = pp_add(terms[i].coeff, repl[j].coeff, guards);
        if (!sum.is_zero()) out.push_back({terms[i].word, std::move(sum)});
        ++i, ++j;
      }
    }
    check_term_count(out.size(), guards);
    if (frontier && first_change != kNoChange)
      *frontier = std::min(*frontier, first_change);
    terms = std::move(out);
  }

  static NCPoly from_sorted(const MonomialOrder& ord, std::vector<NCTerm>&& terms) {
    NCPoly g(ord);
    g.terms_ = std::move(terms);
    return g;
  }

  static std::vector<NCTerm> take_terms(const NCPoly& g) { return g.terms_; }
};

NCPoly apply_reduction(const NCPoly& g, const Word& a, const Word& b,
                       const Reduction& s, const Guards& guards) {
  const Word target = word_build(a, s.lhs, b, guards);
  const auto terms = g.terms();
  std::size_t idx = terms.size();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].word == target) {
      idx = i;
      break;
    }
  }
  if (idx == terms.size()) return g;  // acts trivially
  std::vector<NCTerm> work = Reducer::take_terms(g);
  Reducer::merge_replace(work, idx, terms[idx].coeff, a, s.rhs, b, g.order(),
                         guards, nullptr);
  return Reducer::from_sorted(g.order(), std::move(work));
}

NCPoly red(const NCPoly& g, const ReductionSystem& s, const Guards& guards,
           const ReduceStrategy& strategy, std::uint64_t* steps_out) {
  std::uint64_t steps = 0;
  if (s.size() == 0 || g.is_zero()) {
    if (steps_out) *steps_out = 0;
    return g;
  }
  const PatternAutomaton& ac = s.automaton();
  std::vector<NCTerm> terms = Reducer::take_terms(g);
  // terms[0..frontier) are known irreducible; reducibility of a word does not
  // change while the system is fixed.
  std::size_t frontier = 0;
  for (;;) {
    std::size_t p = frontier;
    while (p < terms.size() && !ac.contains_any(terms[p].word)) ++p;
    frontier = p;
    if (p == terms.size()) break;

    if (++steps > guards.red_step_cap)
      throw StepLimitError(guards.red_step_cap, "red");

    const Word w = terms[p].word;
    const ParamPoly a = terms[p].coeff;
    const int m = strategy.rule_pick == ReduceStrategy::RulePick::MinIndex
                      ? ac.min_pattern_in(w)
                      : ac.max_pattern_in(w);
    const Reduction& rule = s.rule(static_cast<std::size_t>(m));
    const auto offs = occurrences(rule.lhs, w);
    const int off = strategy.occurrence == ReduceStrategy::Occurrence::Leftmost
                        ? offs.front()
                        : offs.back();
    const Word left = w.prefix(off);
    const Word right = w.suffix(w.size() - off - rule.lhs.size());
    Reducer::merge_replace(terms, p, a, left, rule.rhs, right, s.order(), guards,
                           &frontier);
  }
  if (steps_out) *steps_out = steps;
  return Reducer::from_sorted(s.order(), std::move(terms));
}

Reduction pair_rule(const NCPoly& g, const Guards& guards) {
  if (g.is_zero()) throw ZeroPolyError("pair_rule");
  return pair_rule_at(g, g.leading_word(), guards);
}

Reduction pair_rule_at(const NCPoly& g, const Word& z, const Guards& guards) {
  if (g.is_zero()) throw ZeroPolyError("pair_rule");
  const ParamPoly cz = g.coeff_of(z);
  const auto sign = cz.is_pm_one();
  if (!sign)
    throw NotMonicError("coefficient of " + z.str() + " in " + g.str() + " is " +
                        cz.str());
  // rhs = z - sign.g; the z terms cancel exactly.
  NCPoly rhs = nc_add(NCPoly::monomial(g.order(), z),
                      nc_scale(ParamPoly(-*sign), g, guards), guards);
  return Reduction{z, std::move(rhs)};
}

bool is_compatible(const ReductionSystem& s) {
  for (const Reduction& r : s.rules())
    for (const NCTerm& t : r.rhs.terms())
      if (!word_greater(s.order(), r.lhs, t.word)) return false;
  return true;
}

}  // namespace bmr
