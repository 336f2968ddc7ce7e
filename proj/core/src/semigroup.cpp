#include "semicov/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>

#include "semicov/errors.hpp"

namespace semicov {

namespace {

// True when some set index of `bits` shifted up by `a` lands inside the
// window on an unset index.  Sums that leave the window are members by
// cofiniteness and impose nothing.
bool shift_violates(const BitVec& bits, int a) {
  const auto& w = bits.words();
  const int nw = static_cast<int>(w.size());
  const int q = a >> 6, r = a & 63;
  for (int k = q; k < nw; ++k) {
    BitVec::word_t sh = w[k - q] << r;
    if (r != 0 && k - q - 1 >= 0) sh |= w[k - q - 1] >> (64 - r);
    BitVec::word_t viol = sh & ~w[k];
    if (k == nw - 1) viol &= bits.tail_mask();
    if (viol != 0) return true;
  }
  return false;
}

// First pair (a, b) of set indices with a + b inside the window but unset,
// if any.
std::optional<std::pair<int, int>> closure_violation(const BitVec& bits) {
  const int m = bits.find_set(1);
  if (m < 0) return std::nullopt;
  for (int a = m; a != -1 && a + m < bits.size(); a = bits.find_set(a + 1)) {
    if (!shift_violates(bits, a)) continue;
    for (int b = m; b != -1 && a + b < bits.size(); b = bits.find_set(b + 1))
      if (!bits.test(a + b)) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : bits_(1) { bits_.set(0); }

NumericalSemigroup NumericalSemigroup::from_bits_trusted(int frobenius, BitVec bits) {
  assert(frobenius >= -1 && bits.size() == frobenius + 2);
  assert(bits.test(0));
  assert(frobenius == -1 || (!bits.test(frobenius) && bits.test(frobenius + 1)));
  assert(!closure_violation(bits));
  int m = bits.find_set(1);
  if (m < 0) m = 1;
  int genus = frobenius + 2 - bits.count();
  return NumericalSemigroup(frobenius, std::move(bits), m, genus);
}

NumericalSemigroup NumericalSemigroup::from_bits_checked(int frobenius, BitVec bits) {
  if (!bits.test(0)) throw NotASemigroupError("0 must be an element");
  if (frobenius >= 0) {
    if (bits.test(frobenius))
      throw NotASemigroupError("the Frobenius number itself cannot be an element");
    if (!bits.test(frobenius + 1))
      throw NotASemigroupError("the element right above the Frobenius number is missing");
  }
  if (auto viol = closure_violation(bits))
    throw NotASemigroupError("not closed under addition: " + std::to_string(viol->first) +
                             " + " + std::to_string(viol->second) + " is missing");
  return from_bits_trusted(frobenius, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::ordinary(int f) {
  if (f == -1) return naturals();
  if (f < 1)
    throw NotASemigroupError("no numerical semigroup has Frobenius number " + std::to_string(f));
  if (f > max_frobenius)
    throw FrobeniusTooLargeError("Frobenius number " + std::to_string(f) + " exceeds the limit " +
                                 std::to_string(max_frobenius));
  BitVec bits(f + 2);
  bits.set(0);
  bits.set(f + 1);
  return NumericalSemigroup(f, std::move(bits), f + 1, f);
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int>& gens) {
  if (gens.empty()) throw EmptyInputError("at least one generator is required");
  std::vector<int> g = gens;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.front() <= 0) throw NotASemigroupError("generators must be positive");
  if (g.front() == 1) return naturals();
  long long d = 0;
  for (int v : g) d = std::gcd(d, static_cast<long long>(v));
  if (d != 1)
    throw NotCoprimeError("gcd of the generators is " + std::to_string(d) +
                          "; the generated monoid is not cofinite");

  const int m = g.front();
  const long long schur_window = static_cast<long long>(m) * g.back() + 1;
  const long long cap_window = static_cast<long long>(max_frobenius) + m + 2;
  const int window = static_cast<int>(std::min(schur_window, cap_window));

  BitVec dp(window);
  dp.set(0);
  for (int x = 1; x < window; ++x)
    for (int v : g) {
      if (v > x) break;
      if (dp.test(x - v)) {
        dp.set(x);
        break;
      }
    }

  // After m consecutive members everything larger is a member, so the
  // Frobenius number sits below the first such run; no run in the window
  // means it exceeds the representable range.
  int run = 0, run_end = -1;
  for (int x = 0; x < window; ++x) {
    run = dp.test(x) ? run + 1 : 0;
    if (run == m) {
      run_end = x;
      break;
    }
  }
  if (run_end < 0)
    throw FrobeniusTooLargeError("Frobenius number of the generated semigroup exceeds " +
                                 std::to_string(max_frobenius));
  int f = -1;
  for (int x = run_end; x >= 0; --x)
    if (!dp.test(x)) {
      f = x;
      break;
    }
  if (f > max_frobenius)
    throw FrobeniusTooLargeError("Frobenius number " + std::to_string(f) + " exceeds the limit " +
                                 std::to_string(max_frobenius));
  if (f == -1) return naturals();
  BitVec bits(f + 2);
  for (int x = 0; x <= f + 1; ++x)
    if (dp.test(x)) bits.set(x);
  return from_bits_trusted(f, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_small_elements(int frobenius,
                                                           const std::vector<int>& elements) {
  if (frobenius == -1) {
    for (int v : elements)
      if (v != 0) throw NotASemigroupError("the naturals have {0} as explicit element list");
    if (elements.empty()) throw NotASemigroupError("0 must be an element");
    return naturals();
  }
  if (frobenius < 1)
    throw NotASemigroupError("no numerical semigroup has Frobenius number " +
                             std::to_string(frobenius));
  if (frobenius > max_frobenius)
    throw FrobeniusTooLargeError("Frobenius number " + std::to_string(frobenius) +
                                 " exceeds the limit " + std::to_string(max_frobenius));
  BitVec bits(frobenius + 2);
  for (int v : elements) {
    if (v < 0 || v > frobenius + 1)
      throw NotASemigroupError("element " + std::to_string(v) + " is outside [0, F+1]");
    bits.set(v);
  }
  return from_bits_checked(frobenius, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_gaps(const std::vector<int>& gaps) {
  if (gaps.empty()) return naturals();
  int f = 0;
  for (int v : gaps) {
    if (v < 1) throw NotASemigroupError("gaps must be positive");
    f = std::max(f, v);
  }
  if (f > max_frobenius)
    throw FrobeniusTooLargeError("Frobenius number " + std::to_string(f) + " exceeds the limit " +
                                 std::to_string(max_frobenius));
  BitVec bits(f + 2);
  for (int x = 0; x <= f + 1; ++x) bits.set(x);
  for (int v : gaps) bits.reset(v);
  return from_bits_checked(f, std::move(bits));
}

bool NumericalSemigroup::contains(long long x) const noexcept {
  if (x < 0) return false;
  if (x > frobenius_) return true;
  return bits_.test(static_cast<int>(x));
}

const NumericalSemigroup::Derived& NumericalSemigroup::derived() const {
  if (auto p = std::atomic_load_explicit(&derived_, std::memory_order_acquire)) return *p;
  auto fresh = std::make_shared<const Derived>(compute_derived());
  std::shared_ptr<const Derived> expected;
  if (std::atomic_compare_exchange_strong_explicit(&derived_, &expected,
                                                   std::shared_ptr<const Derived>(fresh),
                                                   std::memory_order_acq_rel,
                                                   std::memory_order_acquire))
    return *fresh;
  return *expected;
}

NumericalSemigroup::Derived NumericalSemigroup::compute_derived() const {
  AperyTable t = apery(multiplicity_);
  const auto& e = t.entries();
  const int n = multiplicity_;
  std::vector<char> composite(n, 0);
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int s = e[i] + e[j];
      if (t.in_apery_set(s)) composite[s % n] = 1;
    }
  Derived d;
  d.msg.push_back(n);
  for (int i = 1; i < n; ++i)
    if (!composite[i]) d.msg.push_back(e[i]);
  std::sort(d.msg.begin(), d.msg.end());
  d.pf = t.pseudo_frobenius();
  return d;
}

const std::vector<int>& NumericalSemigroup::msg() const { return derived().msg; }

const std::vector<int>& NumericalSemigroup::pseudo_frobenius() const {
  if (is_naturals())
    throw TrivialSemigroupError("pseudo-Frobenius numbers are undefined for the naturals");
  return derived().pf;
}

int NumericalSemigroup::type() const {
  return static_cast<int>(pseudo_frobenius().size());
}

std::vector<int> NumericalSemigroup::special_gaps() const {
  if (is_naturals()) throw TrivialSemigroupError("special gaps are undefined for the naturals");
  return detail::special_gaps_from_pf(derived().pf);
}

AperyTable NumericalSemigroup::apery(int n) const {
  if (n < 1 || !contains(n))
    throw NotAnElementError(std::to_string(n) + " is not a nonzero element of the semigroup");
  std::vector<int> entries(n, -1);
  entries[0] = 0;
  int filled = 1;
  for (int x = 1; filled < n; ++x) {
    assert(x <= frobenius_ + n + 1);
    if (contains(x) && entries[x % n] < 0) {
      entries[x % n] = x;
      ++filled;
    }
  }
  return AperyTable(AperyTable::unchecked_t{}, n, std::move(entries));
}

NumericalSemigroup NumericalSemigroup::adjoin(int x) const {
  if (is_naturals()) throw NotSpecialGapError("the naturals have no gaps");
  std::vector<int> sg = special_gaps();
  if (!std::binary_search(sg.begin(), sg.end(), x))
    throw NotSpecialGapError(std::to_string(x) + " is not a special gap");
  if (x != frobenius_) {
    BitVec bits = bits_;
    bits.set(x);
    return NumericalSemigroup(frobenius_, std::move(bits), std::min(multiplicity_, x),
                              genus_ - 1);
  }
  BitVec widened = bits_;
  widened.set(x);
  int f = widened.find_last_clear();
  if (f == -1) return naturals();
  BitVec bits(f + 2);
  for (int y = 0; y <= f + 1; ++y)
    if (widened.test(y)) bits.set(y);
  return from_bits_trusted(f, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::remove_element(int x) const {
  const auto& g = msg();
  if (!std::binary_search(g.begin(), g.end(), x))
    throw NotMinimalGeneratorError(std::to_string(x) + " is not a minimal generator");
  int f = std::max(frobenius_, x);
  if (f > max_frobenius)
    throw FrobeniusTooLargeError("removing " + std::to_string(x) +
                                 " pushes the Frobenius number past the limit");
  BitVec bits(f + 2);
  for (int y = 0; y <= f + 1; ++y)
    if (contains(y) && y != x) bits.set(y);
  return from_bits_trusted(f, std::move(bits));
}

std::vector<int> NumericalSemigroup::small_elements() const {
  std::vector<int> out;
  for (int x = bits_.find_set(0); x != -1; x = bits_.find_set(x + 1)) out.push_back(x);
  return out;
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  out.reserve(genus_);
  for (int x = 1; x <= frobenius_; ++x)
    if (!bits_.test(x)) out.push_back(x);
  return out;
}

bool NumericalSemigroup::subset_of(const NumericalSemigroup& other) const {
  if (other.frobenius_ > frobenius_) return false;
  for (int x = bits_.find_set(1); x != -1; x = bits_.find_set(x + 1))
    if (!other.contains(x)) return false;
  return true;
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  int f = std::max(a.frobenius(), b.frobenius());
  if (f == -1) return NumericalSemigroup::naturals();
  BitVec bits(f + 2);
  for (int x = 0; x <= f + 1; ++x)
    if (a.contains(x) && b.contains(x)) bits.set(x);
  return NumericalSemigroup::from_bits_trusted(f, std::move(bits));
}

std::string display_string(const NumericalSemigroup& s) {
  std::string out = "{";
  for (int v : s.small_elements()) {
    out += std::to_string(v);
    out += ", ";
  }
  out += "->}";
  return out;
}

NumericalSemigroup med_lift(const NumericalSemigroup& s, int m) {
  if (m < 1 || !s.contains(m))
    throw NotAnElementError(std::to_string(m) + " is not a nonzero element of the semigroup");
  int f = s.frobenius() + m;
  if (f > NumericalSemigroup::max_frobenius)
    throw FrobeniusTooLargeError("lifted Frobenius number " + std::to_string(f) +
                                 " exceeds the limit");
  if (f == 0) return NumericalSemigroup::naturals();  // m = 1 forces s to be the naturals
  BitVec bits(f + 2);
  bits.set(0);
  for (int y = m; y <= f + 1; ++y)
    if (s.contains(y - m)) bits.set(y);
  return NumericalSemigroup::from_bits_trusted(f, std::move(bits));
}

namespace {

// Element table of (P minus {0}) shifted down by the multiplicity, over the
// window [0, F(P) - m + 1].  Only called with F(P) - m >= 0.
BitVec shifted_down_bits(const NumericalSemigroup& p) {
  const int m = p.multiplicity();
  const int f = p.frobenius() - m;
  BitVec bits(f + 2);
  for (int y = 0; y <= f + 1; ++y)
    if (p.contains(y + m)) bits.set(y);
  return bits;
}

}  // namespace

std::pair<NumericalSemigroup, int> med_unlift(const NumericalSemigroup& p) {
  if (!p.is_med())
    throw NotMEDError("the semigroup does not have maximal embedding dimension");
  const int m = p.multiplicity();
  const int f = p.frobenius() - m;
  if (f < 0) return {NumericalSemigroup::naturals(), m};
  return {NumericalSemigroup::from_bits_trusted(f, shifted_down_bits(p)), m};
}

bool med_shift_closed(const NumericalSemigroup& p) {
  if (p.frobenius() - p.multiplicity() < 0) return true;
  BitVec bits = shifted_down_bits(p);
  return !closure_violation(bits).has_value();
}

int med_genus(const NumericalSemigroup& p) {
  if (!p.is_med())
    throw NotMEDError("the semigroup does not have maximal embedding dimension");
  const int m = p.multiplicity();
  long long sum = 0;
  for (int x : p.msg())
    if (x != m) sum += x;
  long long num = 2 * sum - static_cast<long long>(m) * (m - 1);
  assert(num % (2 * m) == 0);
  return static_cast<int>(num / (2 * m));
}

}  // namespace semicov
