//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_ENERGY_FREE_GROUP_HPP_
#define CAT0LAB_ENERGY_FREE_GROUP_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cat0lab::energy {

// Elements of the free group F_k are reduced words. Generator s_i is the
// letter 'a' + i and its inverse is 'A' + i, so k <= 26.
using Word = std::string;

inline constexpr int kMaxRank = 26;

char letter(int generator, bool inverse = false);
int generator_of(char c);
bool is_inverse_letter(char c);
char inverse_letter(char c);
/// All 2k letters: s_1, s_1^-1, s_2, s_2^-1, ...
std::vector<char> alphabet(int k);

/// Free cancellation.
Word reduce(std::string_view w);
Word multiply(std::string_view a, std::string_view b);
Word inverse(std::string_view w);
bool is_reduced(std::string_view w);

/// mu^n(e, .) for the standard walk mu(e, s) = 1/2k on F_k.
struct FreeWalkDistribution {
  int k = 1;
  int n = 0;
  std::map<Word, double> table;

  double operator()(const Word& w) const;
  double total() const;
};

inline constexpr int kMaxWalkSteps = 12;
inline constexpr double kMaxWalkSupport = 4.0e6;

/// Support size bound sum over l <= n, l = n mod 2 of 2k(2k-1)^(l-1).
double walk_support_bound(int k, int n);

/// Exact distribution by stepping the boundary word. Throws a size error
/// for n > 12 or a support bound above 4e6 words.
FreeWalkDistribution free_walk_distribution(int k, int n);
/// mu^1, ..., mu^n_max in one pass; index i holds mu^(i+1).
std::vector<FreeWalkDistribution> free_walk_powers(int k, int n_max);

/// Law of |X_n| for the walk. The length is itself a birth-death chain
/// (0 -> 1; l -> l+1 with probability (2k-1)/2k), so no enumeration and no
/// step cap.
std::vector<double> word_length_distribution(int k, int n);

}  // namespace cat0lab::energy

#endif  // CAT0LAB_ENERGY_FREE_GROUP_HPP_
