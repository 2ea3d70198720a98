#include "bmr/word.hpp"

#include <cassert>

namespace bmr {

char letter_char(Letter x) {
  static constexpr char names[] = {'s', 't', 'u'};
  assert(x >= 0 && x < kMaxAlphabet);
  return names[x];
}

std::optional<Letter> letter_of_char(char c) {
  switch (c) {
    case 's': return 0;
    case 't': return 1;
    case 'u': return 2;
    default: return std::nullopt;
  }
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter x : letters) push_back(x);
}

Word Word::parse(std::string_view text) {
  if (text == "1") return Word{};
  Word w;
  for (char c : text) {
    auto x = letter_of_char(c);
    if (!x) throw Error("invalid letter '" + std::string(1, c) + "' in word");
    w.push_back(*x);
  }
  return w;
}

Word Word::power(Letter x, int count) {
  Word w;
  for (int i = 0; i < count; ++i) w.push_back(x);
  return w;
}

void Word::push_back(Letter x) {
  if (len_ >= kWordCapacity)
    throw GuardError(GuardKind::WordLength,
                     "word exceeds inline capacity " + std::to_string(kWordCapacity));
  letters_[len_++] = static_cast<std::uint8_t>(x);
}

Word Word::subword(int pos, int len) const {
  assert(pos >= 0 && len >= 0 && pos + len <= len_);
  Word w;
  for (int i = 0; i < len; ++i) w.letters_[i] = letters_[pos + i];
  w.len_ = static_cast<std::uint8_t>(len);
  return w;
}

std::string Word::str() const {
  if (len_ == 0) return "1";
  std::string out;
  out.reserve(len_);
  for (int i = 0; i < len_; ++i) out.push_back(letter_char(letters_[i]));
  return out;
}

Word concat(const Word& a, const Word& b, const Guards& guards) {
  if (guards.checks_enabled && a.size() + b.size() >= guards.max_word_len)
    throw GuardError(GuardKind::WordLength,
                     a.str() + " . " + b.str() + " has length " +
                         std::to_string(a.size() + b.size()) + " >= " +
                         std::to_string(guards.max_word_len));
  Word w = a;
  for (int i = 0; i < b.size(); ++i) w.push_back(b.letter(i));
  return w;
}

std::string MonomialOrder::str(int alphabet_size) const {
  std::string out = kind == OrderKind::Qlex ? "qlex(" : "rqlex(";
  // Letters from highest to lowest rank.
  std::array<Letter, kMaxAlphabet> byrank{};
  for (int x = 0; x < alphabet_size; ++x) byrank[rank[x]] = x;
  for (int r = alphabet_size - 1; r >= 0; --r) {
    out.push_back(letter_char(byrank[r]));
    if (r > 0) out.push_back('>');
  }
  out.push_back(')');
  return out;
}

int compare(const MonomialOrder& ord, const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const int n = a.size();
  if (ord.kind == OrderKind::Qlex) {
    for (int i = 0; i < n; ++i) {
      if (a.letter(i) != b.letter(i))
        return ord.rank[a.letter(i)] < ord.rank[b.letter(i)] ? -1 : 1;
    }
  } else {
    for (int i = n - 1; i >= 0; --i) {
      if (a.letter(i) != b.letter(i))
        return ord.rank[a.letter(i)] < ord.rank[b.letter(i)] ? -1 : 1;
    }
  }
  return 0;
}

namespace {

bool matches_at(const Word& w, const Word& v, int offset) {
  for (int i = 0; i < w.size(); ++i)
    if (v.letter(offset + i) != w.letter(i)) return false;
  return true;
}

}  // namespace

std::optional<Factorization> divides(const Word& w, const Word& v) {
  if (w.size() > v.size()) return std::nullopt;
  for (int off = 0; off + w.size() <= v.size(); ++off) {
    if (matches_at(w, v, off))
      return Factorization{v.prefix(off), v.suffix(v.size() - off - w.size())};
  }
  return std::nullopt;
}

std::vector<int> occurrences(const Word& w, const Word& v) {
  std::vector<int> offs;
  for (int off = 0; off + w.size() <= v.size(); ++off)
    if (matches_at(w, v, off)) offs.push_back(off);
  return offs;
}

std::vector<Overlap> overlaps(const Word& w1, const Word& w2) {
  std::vector<Overlap> out;
  const int bmax = std::min(w1.size(), w2.size()) - 1;
  for (int blen = 1; blen <= bmax; ++blen) {
    if (w1.suffix(blen) == w2.prefix(blen))
      out.push_back(Overlap{w1.prefix(w1.size() - blen), w1.suffix(blen),
                            w2.suffix(w2.size() - blen)});
  }
  return out;
}

std::vector<Inclusion> inclusions(const Word& w1, const Word& w2) {
  std::vector<Inclusion> out;
  for (int off : occurrences(w1, w2))
    out.push_back(
        Inclusion{w2.prefix(off), w2.suffix(w2.size() - off - w1.size()), off});
  return out;
}

}  // namespace bmr
