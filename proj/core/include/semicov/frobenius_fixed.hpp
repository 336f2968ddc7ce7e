#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "semicov/covariety.hpp"
#include "semicov/semigroup.hpp"

namespace semicov {

/// One node of the level-synchronous walk over all numerical semigroups with
/// a fixed Frobenius number F.
struct FrontierNode {
  NumericalSemigroup semigroup;
  AperyTable apery;  // with respect to F + 1
  int depth = 0;     // genus({0, F+1, ->}) - genus(semigroup)
};

struct EnumerateOptions {
  int workers = 1;
  bool order_insensitive = false;  // permit unsorted levels
  bool low_memory = false;         // recompute Apery tables per level instead of carrying them
};

using FrontierVisitor = std::function<void(const FrontierNode&)>;

/// {0, F+1, ->}, the minimum of A(F).  Throws InvalidFError for F < 1 and
/// FrobeniusTooLargeError past the representable range.
NumericalSemigroup delta(int frobenius);

/// Visits every numerical semigroup with Frobenius number F exactly once and
/// returns how many there are.  The walk is level-synchronous: level k holds
/// the members of genus F - k, visited in canonical order, which within a
/// level is ascending order of the element adjoined last.  Children of a
/// node are its unions with one special gap below the multiplicity and
/// different from F; their Apery tables come from the single-entry update.
/// A level may be expanded by several workers, but the visitor always runs
/// on the calling thread and, unless order_insensitive is set, the visiting
/// order does not depend on the worker count.
std::uint64_t enumerate(int frobenius, const FrontierVisitor& visit,
                        const EnumerateOptions& options = {});

/// The members of A(F) in visiting order.
std::vector<NumericalSemigroup> af_members(int frobenius,
                                           const EnumerateOptions& options = {});

/// Whether s is not the intersection of two strictly larger numerical
/// semigroups.  That holds exactly when s is maximal among semigroups with
/// its Frobenius number, i.e. when its only special gap is the Frobenius
/// number itself.  The naturals count as irreducible.
bool is_irreducible(const NumericalSemigroup& s);

/// Least member of A(F) containing the given values: the monoid they
/// generate together with {F+1, ->}.  The values must lie in [1, F-1] and
/// their monoid must miss F.  Throws InvalidFError, NotAnAFSetError.
NumericalSemigroup af_closure(int frobenius, const std::vector<int>& values);

/// The unique inclusion-minimal generating A(F)-set of s: the minimal
/// generators of s not exceeding F.  It is contained in every generating
/// A(F)-set of s.  Throws WrongFrobeniusError unless F(s) = F.
std::vector<int> af_minimal_system(int frobenius, const NumericalSemigroup& s);

/// Size of the unique minimal system; between 0 and m(s) - 1.
/// Throws WrongFrobeniusError.
int af_rank(int frobenius, const NumericalSemigroup& s);

/// The members of A(F) of rank one: for every m in (0, F) not dividing F,
/// the multiples of m joined with {F+1, ->}.  Canonically sorted; there are
/// F minus d(F) of them, d the divisor count.  Throws InvalidFError for
/// F < 2.
std::vector<NumericalSemigroup> rank1_classify(int frobenius);

/// Genus of the rank-one member with multiplicity m: F - floor(F/m).
/// Throws NotRank1FormError unless 0 < m < F and m does not divide F.
int rank1_genus(int frobenius, int m);

/// The members of A(F) whose rank attains the bound m(S) - 1.  Each is
/// P minus {F} for a semigroup P of maximal embedding dimension whose
/// largest minimal generator is F; every such P is a med_lift of a base
/// semigroup with Frobenius number F - 2m.  Canonically sorted.
/// Throws InvalidFError for F < 2.
std::vector<NumericalSemigroup> max_rank_members(int frobenius);

/// Genus of a maximal-rank member from its minimal system alone: with
/// m = min(A), the sum of (A minus {m}) and F over m, minus (m-3)/2.
/// Throws NotMaxRankError unless A is the minimal system of a maximal-rank
/// member of A(F).
int max_rank_genus(int frobenius, const std::vector<int>& values);

/// All numerical semigroups with Frobenius number at most F, the naturals
/// included, as a covariety with minimum {0, F+1, ->}.
/// Throws InvalidFError.
Covariety bf_family(int frobenius);

}  // namespace semicov
