#include "semicov/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "semicov/errors.hpp"

namespace semicov::oracle {

std::vector<NumericalSemigroup> brute_enumerate(int f) {
  if (f < 1) throw InvalidFError("Frobenius number must be at least 1");
  if (f > 22)
    throw TooLargeError("brute-force enumeration is limited to F <= 22, got " +
                        std::to_string(f));
  const int k = f - 1;
  const std::uint64_t window = (std::uint64_t{1} << (f + 1)) - 1;  // sums 0..f matter
  std::vector<NumericalSemigroup> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const std::uint64_t e = (mask << 1) | 1;  // bit i marks element i
    bool closed = true;
    for (int a = 1; a <= k && closed; ++a) {
      if (!((e >> a) & 1)) continue;
      // a plus each element: a sum equal to f (bit f of e is 0) or a missing
      // sum below f rules the candidate out; sums above f are members anyway.
      if ((e << a) & window & ~e) closed = false;
    }
    if (!closed) continue;
    std::vector<int> elems;
    for (int i = 0; i <= k; ++i)
      if ((e >> i) & 1) elems.push_back(i);
    elems.push_back(f + 1);
    out.push_back(NumericalSemigroup::from_small_elements(f, elems));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonical_less(a, b); });
  return out;
}

std::vector<int> brute_pf(const NumericalSemigroup& s) {
  if (s.is_naturals())
    throw TrivialSemigroupError("pseudo-Frobenius numbers are undefined for the naturals");
  std::vector<int> out;
  for (int x : s.gaps()) {
    bool pf = true;
    for (int v = 1; v <= s.frobenius() + 1 && pf; ++v)
      if (s.contains(v) && !s.contains(x + v)) pf = false;
    if (pf) out.push_back(x);
  }
  return out;
}

std::vector<int> brute_sg(const NumericalSemigroup& s) {
  if (s.is_naturals())
    throw TrivialSemigroupError("special gaps are undefined for the naturals");
  const int f = s.frobenius();
  std::vector<int> out;
  for (int x : s.gaps()) {
    std::vector<int> elems{x};
    for (int v = 1; v <= f + 1; ++v)
      if (s.contains(v)) elems.push_back(v);
    auto in_t = [&](int y) { return y == x || s.contains(y); };
    bool closed = true;
    for (std::size_t i = 0; i < elems.size() && closed; ++i)
      for (std::size_t j = i; j < elems.size() && closed; ++j) {
        int sum = elems[i] + elems[j];
        if (sum <= f && !in_t(sum)) closed = false;
      }
    if (closed) out.push_back(x);
  }
  return out;
}

std::vector<NumericalSemigroup> brute_covariety_closure(
    const std::vector<NumericalSemigroup>& family, const NumericalSemigroup& delta) {
  for (const auto& s : family)
    if (!delta.subset_of(s))
      throw DeltaNotMinimumError("delta is not contained in " + display_string(s));

  std::vector<NumericalSemigroup> set;
  std::vector<NumericalSemigroup> queue;
  auto add = [&](const NumericalSemigroup& s) {
    auto it = std::lower_bound(set.begin(), set.end(), s,
                               [](const auto& a, const auto& b) { return canonical_less(a, b); });
    if (it != set.end() && *it == s) return;
    set.insert(it, s);
    queue.push_back(s);
  };
  add(delta);
  for (const auto& s : family) add(s);
  while (!queue.empty()) {
    NumericalSemigroup cur = queue.back();
    queue.pop_back();
    if (cur != delta) add(cur.remove_element(cur.multiplicity()));
    std::vector<NumericalSemigroup> snapshot = set;
    for (const auto& other : snapshot) add(intersect(cur, other));
  }
  return set;
}

}  // namespace semicov::oracle
