#pragma once

#include <random>
#include <vector>

#include <semicov/frobenius_fixed.hpp>
#include <semicov/semigroup.hpp>

namespace testutil {

/// All randomness in the suite flows through fixed-seed generators so that
/// failures reproduce exactly.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Random member of A(f): a walk down from {0, f+1, ->} that adjoins random
/// admissible special gaps and stops early with probability 1/4 per step.
inline semicov::NumericalSemigroup random_af_member(int f, std::mt19937_64& g) {
  semicov::NumericalSemigroup s = semicov::delta(f);
  while (true) {
    std::vector<int> theta;
    for (int x : s.special_gaps())
      if (x < s.multiplicity() && x != f) theta.push_back(x);
    if (theta.empty()) return s;
    if (std::uniform_int_distribution<int>(0, 3)(g) == 0) return s;
    std::uniform_int_distribution<std::size_t> pick(0, theta.size() - 1);
    s = s.adjoin(theta[pick(g)]);
  }
}

/// Random semigroup with Frobenius number in [1, max_f].
inline semicov::NumericalSemigroup random_semigroup(int max_f, std::mt19937_64& g) {
  std::uniform_int_distribution<int> fd(1, max_f);
  return random_af_member(fd(g), g);
}

/// Random nonzero element of s, drawn from [1, F+1] (always nonempty there).
inline int random_nonzero_element(const semicov::NumericalSemigroup& s, std::mt19937_64& g) {
  std::vector<int> elements;
  for (int x = 1; x <= s.frobenius() + 1; ++x)
    if (s.contains(x)) elements.push_back(x);
  if (elements.empty()) return 1;  // the naturals
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  return elements[pick(g)];
}

}  // namespace testutil
