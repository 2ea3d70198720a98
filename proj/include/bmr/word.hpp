#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmr/guards.hpp"

namespace bmr {

// Letters are small integers 0,1,2 printed as s,t,u.
using Letter = int;

inline constexpr int kMaxAlphabet = 3;

// Hard capacity of the inline word storage. The runtime word-length guard may
// be raised up to kWordCapacity + 1 (error threshold one past the capacity).
inline constexpr int kWordCapacity = 63;

char letter_char(Letter x);
std::optional<Letter> letter_of_char(char c);

// A word over {s,t,u}: fixed-capacity letter sequence with value semantics.
// Unused slots are kept zeroed so that equality is plain field comparison.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  // Accepts a string of letters; "" and "1" both denote the empty word.
  static Word parse(std::string_view text);
  static Word power(Letter x, int count);

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Letter letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }

  void push_back(Letter x);
  Word subword(int pos, int len) const;
  Word prefix(int len) const { return subword(0, len); }
  Word suffix(int len) const { return subword(len_ - len, len); }

  std::string str() const;  // empty word printed as "1"

  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::uint8_t len_ = 0;
  std::array<std::uint8_t, kWordCapacity> letters_{};
};

Word concat(const Word& a, const Word& b, const Guards& guards = {});

enum class OrderKind { Qlex, Rqlex };

// Length-graded (reverse) quasi-lexicographic order. rank[x] ranks the
// letters, larger rank wins. Both kinds compare lengths first; on equal
// length Qlex decides at the first differing position, Rqlex at the last.
struct MonomialOrder {
  OrderKind kind = OrderKind::Rqlex;
  std::array<std::uint8_t, kMaxAlphabet> rank = {0, 1, 2};

  std::string str(int alphabet_size = kMaxAlphabet) const;  // e.g. "rqlex(t>s)"

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

// Total order: -1, 0, +1.
int compare(const MonomialOrder& ord, const Word& a, const Word& b);

inline bool word_less(const MonomialOrder& o, const Word& a, const Word& b) {
  return compare(o, a, b) < 0;
}
inline bool word_greater(const MonomialOrder& o, const Word& a, const Word& b) {
  return compare(o, a, b) > 0;
}

// Leftmost factor occurrence: decomposition v = prefix . w . suffix with the
// shortest prefix, when w occurs in v.
struct Factorization {
  Word prefix;
  Word suffix;
};
std::optional<Factorization> divides(const Word& w, const Word& v);

// All offsets at which w occurs in v, ascending.
std::vector<int> occurrences(const Word& w, const Word& v);

// Proper overlaps w1 = a.b, w2 = b.c with a, b, c all nonempty, |b| ascending.
struct Overlap {
  Word a;
  Word b;
  Word c;
};
std::vector<Overlap> overlaps(const Word& w1, const Word& w2);

// Inclusions a.w1.c = w2, ascending by offset = |a|.
struct Inclusion {
  Word a;
  Word c;
  int offset;
};
std::vector<Inclusion> inclusions(const Word& w1, const Word& w2);

}  // namespace bmr
