#include "semicov/frobenius_fixed.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <thread>

#include "semicov/errors.hpp"

namespace semicov {

namespace detail {

/// Fast paths for the fixed-Frobenius walk.  Every member bypasses a
/// validating constructor, so callers must establish the invariant the
/// constructor would have checked; each call site states which fact makes
/// that legitimate.
struct frontier_ops {
  static AperyTable table_unchecked(int modulus, std::vector<int> entries) {
    return AperyTable(AperyTable::unchecked_t{}, modulus, std::move(entries));
  }

  /// Single-entry update for a special gap x of the table's semigroup: the
  /// entry of residue x mod n drops from x + n to x.
  static AperyTable swap_unchecked(const AperyTable& t, int x) {
    std::vector<int> entries = t.entries_;
    entries[x % t.modulus_] = x;
    return AperyTable(AperyTable::unchecked_t{}, t.modulus_, std::move(entries));
  }

  /// S united with {x} for a special gap x below the multiplicity: the new
  /// multiplicity is x, the genus drops by one, the Frobenius number is
  /// untouched because x < m <= F forces x != F to be checked by the caller.
  static NumericalSemigroup adjoin_gap_below_multiplicity(const NumericalSemigroup& s,
                                                          int x) {
    BitVec bits = s.bits_;
    bits.set(x);
    return NumericalSemigroup(s.frobenius_, std::move(bits), x, s.genus_ - 1);
  }

  static NumericalSemigroup from_bits(int frobenius, BitVec bits) {
    return NumericalSemigroup::from_bits_trusted(frobenius, std::move(bits));
  }
};

}  // namespace detail

namespace {

void check_frobenius(int f, int least) {
  if (f < least)
    throw InvalidFError("Frobenius number must be at least " + std::to_string(least) +
                        ", got " + std::to_string(f));
  if (f > NumericalSemigroup::max_frobenius)
    throw FrobeniusTooLargeError("Frobenius number " + std::to_string(f) +
                                 " exceeds the supported limit " +
                                 std::to_string(NumericalSemigroup::max_frobenius));
}

void expand_range(const std::vector<FrontierNode>& level, std::size_t begin,
                  std::size_t end, int f, bool low_memory,
                  std::vector<FrontierNode>& out) {
  for (std::size_t i = begin; i < end; ++i) {
    const FrontierNode& node = level[i];
    const int m = node.semigroup.multiplicity();
    for (int x : node.apery.special_gaps()) {
      if (x >= m) break;
      if (x == f) continue;
      AperyTable table = low_memory
                             ? detail::frontier_ops::table_unchecked(1, {0})
                             : detail::frontier_ops::swap_unchecked(node.apery, x);
      out.push_back(FrontierNode{
          detail::frontier_ops::adjoin_gap_below_multiplicity(node.semigroup, x),
          std::move(table), node.depth + 1});
    }
  }
}

}  // namespace

NumericalSemigroup delta(int frobenius) {
  check_frobenius(frobenius, 1);
  return NumericalSemigroup::ordinary(frobenius);
}

std::uint64_t enumerate(int frobenius, const FrontierVisitor& visit,
                        const EnumerateOptions& options) {
  check_frobenius(frobenius, 1);
  const int n = frobenius + 1;

  std::vector<int> root_entries(n, 0);
  for (int i = 1; i < n; ++i) root_entries[i] = n + i;
  std::vector<FrontierNode> level;
  level.push_back(FrontierNode{NumericalSemigroup::ordinary(frobenius),
                               detail::frontier_ops::table_unchecked(n, std::move(root_entries)),
                               0});

  const std::size_t workers = static_cast<std::size_t>(std::max(1, options.workers));
  std::uint64_t count = 0;
  while (!level.empty()) {
    if (options.low_memory && level.front().depth > 0)
      for (FrontierNode& node : level) node.apery = node.semigroup.apery(n);

    count += level.size();
    if (visit)
      for (const FrontierNode& node : level) visit(node);

    std::vector<FrontierNode> next;
    const std::size_t w = std::min(workers, level.size());
    if (w <= 1) {
      expand_range(level, 0, level.size(), frobenius, options.low_memory, next);
    } else {
      std::vector<std::vector<FrontierNode>> parts(w);
      std::vector<std::thread> threads;
      threads.reserve(w);
      const std::size_t chunk = (level.size() + w - 1) / w;
      for (std::size_t t = 0; t < w; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(level.size(), begin + chunk);
        threads.emplace_back([&level, begin, end, frobenius, &options, &parts, t] {
          expand_range(level, begin, end, frobenius, options.low_memory, parts[t]);
        });
      }
      for (std::thread& th : threads) th.join();
      for (std::vector<FrontierNode>& part : parts)
        for (FrontierNode& node : part) next.push_back(std::move(node));
    }

    if (!options.order_insensitive)
      std::sort(next.begin(), next.end(), [](const FrontierNode& a, const FrontierNode& b) {
        return canonical_less(a.semigroup, b.semigroup);
      });
    level = std::move(next);
  }
  return count;
}

std::vector<NumericalSemigroup> af_members(int frobenius, const EnumerateOptions& options) {
  std::vector<NumericalSemigroup> out;
  enumerate(
      frobenius, [&out](const FrontierNode& node) { out.push_back(node.semigroup); },
      options);
  return out;
}

bool is_irreducible(const NumericalSemigroup& s) {
  if (s.is_naturals()) return true;
  return s.special_gaps().size() == 1;
}

NumericalSemigroup af_closure(int frobenius, const std::vector<int>& values) {
  check_frobenius(frobenius, 1);
  for (int v : values)
    if (v < 1 || v >= frobenius)
      throw NotAnAFSetError("value " + std::to_string(v) + " lies outside [1, " +
                            std::to_string(frobenius - 1) + "]");

  std::vector<char> reachable(frobenius + 1, 0);
  reachable[0] = 1;
  for (int x = 1; x <= frobenius; ++x)
    for (int v : values)
      if (v <= x && reachable[x - v]) {
        reachable[x] = 1;
        break;
      }
  if (reachable[frobenius])
    throw NotAnAFSetError("the values generate " + std::to_string(frobenius));

  BitVec bits(frobenius + 2);
  for (int x = 0; x <= frobenius; ++x)
    if (reachable[x]) bits.set(x);
  bits.set(frobenius + 1);
  return detail::frontier_ops::from_bits(frobenius, std::move(bits));
}

std::vector<int> af_minimal_system(int frobenius, const NumericalSemigroup& s) {
  check_frobenius(frobenius, 1);
  if (s.frobenius() != frobenius)
    throw WrongFrobeniusError("semigroup has Frobenius number " +
                              std::to_string(s.frobenius()) + ", expected " +
                              std::to_string(frobenius));
  std::vector<int> out;
  for (int x : s.msg())
    if (x <= frobenius) out.push_back(x);
  return out;
}

int af_rank(int frobenius, const NumericalSemigroup& s) {
  return static_cast<int>(af_minimal_system(frobenius, s).size());
}

std::vector<NumericalSemigroup> rank1_classify(int frobenius) {
  check_frobenius(frobenius, 2);
  std::vector<NumericalSemigroup> out;
  for (int m = 2; m < frobenius; ++m) {
    if (frobenius % m == 0) continue;
    BitVec bits(frobenius + 2);
    for (int x = 0; x <= frobenius; x += m) bits.set(x);
    bits.set(frobenius + 1);
    out.push_back(detail::frontier_ops::from_bits(frobenius, std::move(bits)));
  }
  std::sort(out.begin(), out.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
              return canonical_less(a, b);
            });
  return out;
}

int rank1_genus(int frobenius, int m) {
  if (m <= 0 || m >= frobenius || frobenius % m == 0)
    throw NotRank1FormError("need 0 < m < F with m not dividing F, got m = " +
                            std::to_string(m) + ", F = " + std::to_string(frobenius));
  return frobenius - frobenius / m;
}

std::vector<NumericalSemigroup> max_rank_members(int frobenius) {
  check_frobenius(frobenius, 2);
  std::vector<NumericalSemigroup> out;
  for (int m = 1; frobenius - 2 * m >= -1; ++m) {
    const int base_frobenius = frobenius - 2 * m;
    if (base_frobenius == 0) continue;
    std::vector<NumericalSemigroup> bases;
    if (base_frobenius == -1)
      bases.push_back(NumericalSemigroup::naturals());
    else
      bases = af_members(base_frobenius);
    for (const NumericalSemigroup& s : bases) {
      if (!s.contains(m)) continue;
      NumericalSemigroup lifted = med_lift(s, m);
      out.push_back(lifted.remove_element(frobenius));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
              return canonical_less(a, b);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int max_rank_genus(int frobenius, const std::vector<int>& values) {
  check_frobenius(frobenius, 2);
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw NotMaxRankError("the empty set generates only the minimum");

  NumericalSemigroup s = NumericalSemigroup::naturals();
  try {
    s = af_closure(frobenius, sorted);
  } catch (const NotAnAFSetError& e) {
    throw NotMaxRankError(e.what());
  }
  if (af_minimal_system(frobenius, s) != sorted)
    throw NotMaxRankError("the set is not the minimal system of its closure");
  const int m = s.multiplicity();
  if (static_cast<int>(sorted.size()) != m - 1)
    throw NotMaxRankError("the closure has rank " + std::to_string(sorted.size()) +
                          ", not the maximum " + std::to_string(m - 1));

  long long sum = frobenius;
  for (int v : sorted)
    if (v != m) sum += v;
  const long long num = 2 * sum - static_cast<long long>(m) * (m - 3);
  assert(num % (2 * m) == 0);
  return static_cast<int>(num / (2 * m));
}

Covariety bf_family(int frobenius) {
  check_frobenius(frobenius, 1);
  std::vector<NumericalSemigroup> members{NumericalSemigroup::naturals()};
  for (int f = 1; f <= frobenius; ++f) {
    std::vector<NumericalSemigroup> level = af_members(f);
    members.insert(members.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
  }
  return Covariety::validate(std::move(members));
}

}  // namespace semicov
