#pragma once

#include <string>
#include <vector>

#include "bmr/ncpoly.hpp"

namespace bmr {

// Defining data of one cyclotomic Hecke algebra H_n (4 <= n <= 22): the
// generator alphabet, the parameter count, the group order, the monomial
// order, and the defining relations as polynomials w - w' with +-1 leading
// coefficient, listed in presentation order (power relations first).
struct GroupPresentation {
  int n = 0;
  int alphabet_size = 0;
  int param_count = 0;    // number of Hecke parameters a1..al
  long group_order = 0;   // |G_n|
  MonomialOrder order;
  std::vector<NCPoly> relations;
  std::vector<std::string> relation_text;  // human-readable "w = w'" forms
};

// Throws std::out_of_range unless 4 <= n <= 22.
GroupPresentation presentation(int n);

inline constexpr int kMinGroup = 4;
inline constexpr int kMaxGroup = 22;

}  // namespace bmr
