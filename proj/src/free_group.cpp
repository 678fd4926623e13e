//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/energy/free_group.hpp"

#include <cmath>

#include "cat0lab/error.hpp"

namespace cat0lab::energy {

namespace {

void check_rank(int k) {
  require(k >= 1 && k <= kMaxRank, "free group: rank must lie in [1, 26]");
}

void check_letter(char c) {
  require((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'), "free group: bad letter");
}

// Append c to the reduced word w in place.
void push_reduced(Word& w, char c) {
  if (!w.empty() && w.back() == inverse_letter(c)) {
    w.pop_back();
  } else {
    w.push_back(c);
  }
}

}  // namespace

char letter(int generator, bool inverse) {
  require(generator >= 0 && generator < kMaxRank, "free group: generator out of range");
  return static_cast<char>((inverse ? 'A' : 'a') + generator);
}

int generator_of(char c) {
  check_letter(c);
  return c >= 'a' ? c - 'a' : c - 'A';
}

bool is_inverse_letter(char c) {
  check_letter(c);
  return c < 'a';
}

char inverse_letter(char c) {
  check_letter(c);
  return c >= 'a' ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c - 'A' + 'a');
}

std::vector<char> alphabet(int k) {
  check_rank(k);
  std::vector<char> out;
  for (int i = 0; i < k; ++i) {
    out.push_back(letter(i));
    out.push_back(letter(i, true));
  }
  return out;
}

Word reduce(std::string_view w) {
  Word out;
  for (char c : w) push_reduced(out, c);
  return out;
}

Word multiply(std::string_view a, std::string_view b) {
  Word out = reduce(a);
  for (char c : b) push_reduced(out, c);
  return out;
}

Word inverse(std::string_view w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return reduce(out);
}

bool is_reduced(std::string_view w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == inverse_letter(w[i])) return false;
  }
  return true;
}

double FreeWalkDistribution::operator()(const Word& w) const {
  const auto it = table.find(w);
  return it == table.end() ? 0.0 : it->second;
}

double FreeWalkDistribution::total() const {
  // Neumaier summation; the table can hold millions of tiny entries.
  double s = 0.0;
  double c = 0.0;
  for (const auto& [w, p] : table) {
    const double t = s + p;
    c += std::abs(s) >= std::abs(p) ? (s - t) + p : (p - t) + s;
    s = t;
  }
  return s + c;
}

double walk_support_bound(int k, int n) {
  check_rank(k);
  double total = 0.0;
  for (int l = n % 2; l <= n; l += 2) {
    total += l == 0 ? 1.0 : 2.0 * k * std::pow(2.0 * k - 1.0, l - 1);
  }
  return total;
}

std::vector<FreeWalkDistribution> free_walk_powers(int k, int n_max) {
  check_rank(k);
  require(n_max >= 1, "free_walk_distribution: need n >= 1");
  if (n_max > kMaxWalkSteps) {
    fail(ErrorKind::kSize, "free_walk_distribution: n = " + std::to_string(n_max) +
                               " exceeds the cap of " + std::to_string(kMaxWalkSteps));
  }
  if (walk_support_bound(k, n_max) > kMaxWalkSupport) {
    fail(ErrorKind::kSize, "free_walk_distribution: support too large for k = " +
                               std::to_string(k) + ", n = " + std::to_string(n_max));
  }
  const std::vector<char> letters = alphabet(k);
  const double step = 1.0 / static_cast<double>(letters.size());
  std::vector<FreeWalkDistribution> out;
  std::map<Word, double> current{{Word(), 1.0}};
  for (int n = 1; n <= n_max; ++n) {
    std::map<Word, double> next;
    for (const auto& [w, p] : current) {
      for (char c : letters) {
        Word x = w;
        push_reduced(x, c);
        next[x] += p * step;
      }
    }
    current = std::move(next);
    out.push_back({k, n, current});
  }
  return out;
}

FreeWalkDistribution free_walk_distribution(int k, int n) {
  return std::move(free_walk_powers(k, n).back());
}

std::vector<double> word_length_distribution(int k, int n) {
  check_rank(k);
  require(n >= 0, "word_length_distribution: need n >= 0");
  const double back = 1.0 / (2.0 * k);
  std::vector<double> p(n + 2, 0.0);
  p[0] = 1.0;
  for (int step = 0; step < n; ++step) {
    std::vector<double> q(n + 2, 0.0);
    q[1] += p[0];
    for (int l = 1; l <= step; ++l) {
      q[l + 1] += p[l] * (1.0 - back);
      q[l - 1] += p[l] * back;
    }
    p = std::move(q);
  }
  p.resize(n + 1);
  return p;
}

}  // namespace cat0lab::energy
