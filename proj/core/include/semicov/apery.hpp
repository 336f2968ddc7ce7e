#pragma once

#include <vector>

namespace semicov {

class NumericalSemigroup;

namespace detail {
struct frontier_ops;
std::vector<int> special_gaps_from_pf(const std::vector<int>& pf);
}  // namespace detail

/// Apery table of a numerical semigroup S with respect to a nonzero element
/// n of S: entry i is the least element of S congruent to i modulo n.  The
/// table determines S completely (x belongs to S iff entries[x mod n] <= x),
/// so the maximal elements, the pseudo-Frobenius numbers and the special gaps
/// can all be read off it without going back to the element table.
class AperyTable {
public:
  /// Validates shape and superadditivity of the entries; throws
  /// NotASemigroupError if they are not the Apery table of any numerical
  /// semigroup, FrobeniusTooLargeError past the representable range.
  AperyTable(int modulus, std::vector<int> entries);

  int modulus() const noexcept { return modulus_; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  /// Largest gap of the underlying semigroup: max entry minus modulus.
  /// Equals -1 exactly when the table describes the naturals.
  int frobenius() const;
  int multiplicity() const;

  /// Membership of x in the underlying semigroup.
  bool contains_element(int x) const;
  /// Membership of x in the Apery set itself.
  bool in_apery_set(int x) const;

  /// Entries w such that w + w' lies outside the Apery set for every nonzero
  /// entry w'; these are the maximal elements in the order a <= b iff
  /// b - a in S.  Ascending.
  std::vector<int> maximals() const;
  /// maximals() shifted down by the modulus; {-1} for the naturals.
  std::vector<int> pseudo_frobenius() const;
  /// Gaps whose adjunction leaves a numerical semigroup.  Ascending; empty
  /// for the naturals.
  std::vector<int> special_gaps() const;

  friend bool operator==(const AperyTable&, const AperyTable&) = default;

private:
  struct unchecked_t {};
  AperyTable(unchecked_t, int modulus, std::vector<int> entries);

  int modulus_ = 1;
  std::vector<int> entries_;

  friend class NumericalSemigroup;
  friend struct detail::frontier_ops;
  friend AperyTable apery_swap(const AperyTable&, int);
};

/// Table of S united with {x}, for a special gap x of S, obtained by the
/// single-entry update: the entry x + n of residue x mod n becomes x.
/// Throws NotSpecialGapError unless x is a special gap of S.
AperyTable apery_swap(const AperyTable& table, int x);

}  // namespace semicov
