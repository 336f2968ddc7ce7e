#pragma once

#include <vector>

#include "semicov/semigroup.hpp"

namespace semicov::oracle {

/// All numerical semigroups with Frobenius number f, found by exhaustive
/// search over the subsets of [1, f-1].  Canonically sorted.  Costs
/// 2^(f-1) candidate checks, so f is capped at 22.  Throws InvalidFError
/// for f < 1 and TooLargeError past the cap.
std::vector<NumericalSemigroup> brute_enumerate(int f);

/// Pseudo-Frobenius numbers straight from the definition: gaps x with
/// x + s in S for every nonzero element s.  No Apery shortcut.
/// Throws TrivialSemigroupError for the naturals.
std::vector<int> brute_pf(const NumericalSemigroup& s);

/// Special gaps straight from the definition: gaps x such that S united
/// with {x} is closed under addition, tested pair by pair.
/// Throws TrivialSemigroupError for the naturals.
std::vector<int> brute_sg(const NumericalSemigroup& s);

/// Least family containing `family` and `delta` closed under pairwise
/// intersection and removal of the multiplicity.  Canonically sorted.
/// Throws DeltaNotMinimumError unless delta is contained in every member.
std::vector<NumericalSemigroup> brute_covariety_closure(
    const std::vector<NumericalSemigroup>& family, const NumericalSemigroup& delta);

}  // namespace semicov::oracle
