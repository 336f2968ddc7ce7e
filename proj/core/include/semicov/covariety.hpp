#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "semicov/semigroup.hpp"

namespace semicov {

/// A generating set usable inside a covariety: positive integers disjoint
/// from the minimum and contained in some maximal member, the host.
struct CSet {
  std::vector<int> elements;  // ascending
  std::size_t host = 0;       // index into members() of a maximal member
};

/// A finite nonempty family of numerical semigroups with a minimum, closed
/// under intersection and under removal of the multiplicity.  Members are
/// kept unique in canonical order, so equal covarieties compare equal
/// member-by-member.
class Covariety {
public:
  /// Checks the three axioms in order and reports the first violation with
  /// a witness.  Throws NoMinimumError, NotIntersectionClosedError,
  /// NotMultiplicityRemovalClosedError.
  static Covariety validate(std::vector<NumericalSemigroup> family);

  const std::vector<NumericalSemigroup>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const NumericalSemigroup& minimum() const noexcept { return members_[delta_]; }
  std::size_t minimum_index() const noexcept { return delta_; }

  bool contains(const NumericalSemigroup& s) const;
  /// Index of s among members(), or size() when absent.
  std::size_t index_of(const NumericalSemigroup& s) const;

  std::vector<std::size_t> maximal_member_indices() const;
  std::vector<NumericalSemigroup> maximal_members() const;

  /// Validates values as a C-set and resolves its host.  Throws NotACSetError.
  CSet cset(const std::vector<int>& values) const;

  /// Least member containing the given C-set; the minimum for the empty set.
  /// Throws NotACSetError.
  NumericalSemigroup closure(const std::vector<int>& values) const;

  /// All inclusion-minimal C-sets with closure s, ordered by size then
  /// lexicographically.  Every one of them contains m(s) when s is not the
  /// minimum, which bounds the search to subsets of s minus the minimum.
  /// Exponential in the number of candidate elements at worst.
  /// Throws NotMemberError.
  std::vector<CSet> minimal_csystems(const NumericalSemigroup& s) const;

  /// Least size of a C-set with closure s: 0 exactly for the minimum.
  /// Throws NotMemberError.
  int rank(const NumericalSemigroup& s) const;

  struct Tree {
    std::size_t root = 0;
    std::vector<std::size_t> parent;                          // parent[root] == root
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // (child, parent)
  };

  /// The rooted tree on the members, each non-minimum joined to itself minus
  /// its multiplicity.
  Tree tree() const;

private:
  Covariety(std::vector<NumericalSemigroup> members, std::size_t delta)
      : members_(std::move(members)), delta_(delta) {}

  std::vector<NumericalSemigroup> members_;
  std::size_t delta_ = 0;
};

/// The chain from a semigroup down to {0, F+1, ->} by repeatedly deleting
/// the multiplicity; consecutive links differ in exactly one element.
struct ChainCad {
  NumericalSemigroup base;
  std::vector<NumericalSemigroup> links;  // front() == base, back() == {0, F+1, ->}
};

/// Builds the chain with respect to the target Frobenius number F, which
/// must be attainable: F >= F(s) and F != 0.  Throws FrobeniusTooSmallError.
ChainCad chain_cad(const NumericalSemigroup& s, int frobenius);

/// Smallest covariety containing the whole family.  Its minimum is
/// {0, F+1, ->} for F the largest Frobenius number occurring; the members
/// are all intersections of chains of the family members.
/// Throws EmptyFamilyError.
Covariety generated_covariety(const std::vector<NumericalSemigroup>& family);

}  // namespace semicov
