#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "semicov/apery.hpp"
#include "semicov/bitvec.hpp"

namespace semicov {

/// A numerical semigroup: an additively closed subset of the naturals that
/// contains 0 and has finite complement.  Stored canonically as the Frobenius
/// number F (largest gap) plus the element table over [0, F+1]; everything
/// above F is a member by cofiniteness.  The naturals are representable with
/// F = -1 so that intersections and constructors are total; the operations
/// that are undefined there reject them explicitly.
///
/// Values are immutable.  The minimal generators and pseudo-Frobenius numbers
/// are computed on first use and cached write-once, so const values are safe
/// to share between threads.
class NumericalSemigroup {
public:
  /// Frobenius numbers above this are rejected to bound memory.
  static constexpr int max_frobenius = 1 << 16;

  /// The naturals.
  NumericalSemigroup();

  static NumericalSemigroup naturals() { return NumericalSemigroup(); }

  /// {0, f+1, ->}.  Accepts f = -1 (the naturals) and f >= 1; there is no
  /// numerical semigroup with Frobenius number 0.
  static NumericalSemigroup ordinary(int f);

  /// The monoid generated by gens, which is a numerical semigroup iff
  /// gcd(gens) = 1.  Throws EmptyInputError, NotASemigroupError on
  /// nonpositive generators, NotCoprimeError, FrobeniusTooLargeError.
  static NumericalSemigroup from_generators(const std::vector<int>& gens);

  /// Builds from the exact element list of [0, frobenius+1].  The list must
  /// contain 0 and frobenius+1, omit frobenius, and be closed under addition
  /// within the window.  Throws NotASemigroupError otherwise.
  static NumericalSemigroup from_small_elements(int frobenius,
                                                const std::vector<int>& elements);

  /// Builds from the full gap list; the empty list gives the naturals.
  static NumericalSemigroup from_gaps(const std::vector<int>& gaps);

  int frobenius() const noexcept { return frobenius_; }
  int multiplicity() const noexcept { return multiplicity_; }
  int genus() const noexcept { return genus_; }
  bool is_naturals() const noexcept { return frobenius_ == -1; }

  bool contains(long long x) const noexcept;

  /// The unique minimal generating set, ascending.  Smallest is the
  /// multiplicity; the size is the embedding dimension.
  const std::vector<int>& msg() const;
  int embedding_dimension() const { return static_cast<int>(msg().size()); }

  /// Gaps x with x + s in S for every nonzero s in S.  Ascending; contains
  /// the Frobenius number.  Throws TrivialSemigroupError for the naturals.
  const std::vector<int>& pseudo_frobenius() const;
  /// Number of pseudo-Frobenius numbers.  Throws TrivialSemigroupError.
  int type() const;
  /// Gaps whose adjunction leaves a numerical semigroup.  Ascending; throws
  /// TrivialSemigroupError for the naturals.
  std::vector<int> special_gaps() const;

  /// Maximal embedding dimension: embedding dimension equals multiplicity.
  bool is_med() const { return embedding_dimension() == multiplicity_; }

  /// Apery table with respect to n, which must be a nonzero element.
  /// Throws NotAnElementError.
  AperyTable apery(int n) const;

  /// S united with {x} for a special gap x.  Throws NotSpecialGapError.
  NumericalSemigroup adjoin(int x) const;

  /// S minus {x} for a minimal generator x; the result is again a numerical
  /// semigroup exactly in that case.  Throws NotMinimalGeneratorError.
  NumericalSemigroup remove_element(int x) const;

  /// Elements up to and including F+1, ascending.  {0} for the naturals.
  std::vector<int> small_elements() const;
  /// All gaps, ascending.
  std::vector<int> gaps() const;

  bool subset_of(const NumericalSemigroup& other) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.frobenius_ == b.frobenius_ && a.bits_ == b.bits_;
  }

  /// Total order fixing deterministic output everywhere: first by Frobenius
  /// number, then presence-first on the element tables, so among equal F the
  /// semigroup containing the smallest differing value comes first.
  friend bool canonical_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.frobenius_ != b.frobenius_) return a.frobenius_ < b.frobenius_;
    return lex_less(a.bits_, b.bits_);
  }

  std::size_t hash() const noexcept {
    return bits_.hash() * 1099511628211ull ^ static_cast<std::size_t>(frobenius_ + 2);
  }

  NumericalSemigroup(const NumericalSemigroup& o)
      : frobenius_(o.frobenius_),
        multiplicity_(o.multiplicity_),
        genus_(o.genus_),
        bits_(o.bits_),
        derived_(std::atomic_load_explicit(&o.derived_, std::memory_order_acquire)) {}

  NumericalSemigroup(NumericalSemigroup&& o) noexcept
      : frobenius_(o.frobenius_),
        multiplicity_(o.multiplicity_),
        genus_(o.genus_),
        bits_(std::move(o.bits_)),
        derived_(std::atomic_load_explicit(&o.derived_, std::memory_order_acquire)) {}

  NumericalSemigroup& operator=(const NumericalSemigroup& o) {
    if (this != &o) {
      frobenius_ = o.frobenius_;
      multiplicity_ = o.multiplicity_;
      genus_ = o.genus_;
      bits_ = o.bits_;
      derived_ = std::atomic_load_explicit(&o.derived_, std::memory_order_acquire);
    }
    return *this;
  }

  NumericalSemigroup& operator=(NumericalSemigroup&& o) noexcept {
    if (this != &o) {
      frobenius_ = o.frobenius_;
      multiplicity_ = o.multiplicity_;
      genus_ = o.genus_;
      bits_ = std::move(o.bits_);
      derived_ = std::atomic_load_explicit(&o.derived_, std::memory_order_acquire);
    }
    return *this;
  }

  ~NumericalSemigroup() = default;

private:
  struct Derived {
    std::vector<int> msg;
    std::vector<int> pf;  // {-1} for the naturals
  };

  NumericalSemigroup(int frobenius, BitVec bits, int multiplicity, int genus)
      : frobenius_(frobenius),
        multiplicity_(multiplicity),
        genus_(genus),
        bits_(std::move(bits)) {}

  /// Construction from a table already known to satisfy all invariants.
  static NumericalSemigroup from_bits_trusted(int frobenius, BitVec bits);
  /// Same, but validates the table and throws NotASemigroupError.
  static NumericalSemigroup from_bits_checked(int frobenius, BitVec bits);

  const Derived& derived() const;
  Derived compute_derived() const;

  int frobenius_ = -1;
  int multiplicity_ = 1;
  int genus_ = 0;
  BitVec bits_;
  mutable std::shared_ptr<const Derived> derived_;

  friend struct detail::frontier_ops;
  friend NumericalSemigroup intersect(const NumericalSemigroup&, const NumericalSemigroup&);
  friend NumericalSemigroup med_lift(const NumericalSemigroup&, int);
  friend std::pair<NumericalSemigroup, int> med_unlift(const NumericalSemigroup&);
};

inline bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return !(a == b);
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// Human-readable element list, e.g. "{0, 5, 6, ->}".
std::string display_string(const NumericalSemigroup& s);

/// ({m} + S) united with {0} for a nonzero element m of S: a semigroup of
/// maximal embedding dimension with multiplicity m and Frobenius F(S) + m.
/// Throws NotAnElementError, FrobeniusTooLargeError.
NumericalSemigroup med_lift(const NumericalSemigroup& s, int m);

/// Inverse of med_lift: strips the multiplicity shift off a semigroup of
/// maximal embedding dimension.  Returns (S, m(P)).  Throws NotMEDError.
std::pair<NumericalSemigroup, int> med_unlift(const NumericalSemigroup& p);

/// Direct witness for maximal embedding dimension: whether the set
/// (P minus {0}) shifted down by the multiplicity is additively closed.
/// Agrees with is_med() on every semigroup.
bool med_shift_closed(const NumericalSemigroup& p);

/// Genus of a semigroup of maximal embedding dimension from its generators
/// alone: the generator sum over the multiplicity minus (m-1)/2.
/// Throws NotMEDError.
int med_genus(const NumericalSemigroup& p);

}  // namespace semicov

template <>
struct std::hash<semicov::NumericalSemigroup> {
  std::size_t operator()(const semicov::NumericalSemigroup& s) const noexcept {
    return s.hash();
  }
};
