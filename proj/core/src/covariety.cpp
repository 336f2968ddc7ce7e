#include "semicov/covariety.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "semicov/errors.hpp"

namespace semicov {

namespace {

bool canonical_pred(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return canonical_less(a, b);
}

// Next k-combination of indices over [0, n) in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Covariety Covariety::validate(std::vector<NumericalSemigroup> family) {
  std::sort(family.begin(), family.end(), canonical_pred);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.empty()) throw NoMinimumError("a covariety is a nonempty family");

  std::size_t delta = family.size();
  for (std::size_t i = 0; i < family.size() && delta == family.size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < family.size() && below_all; ++j)
      below_all = family[i].subset_of(family[j]);
    if (below_all) delta = i;
  }
  if (delta == family.size()) throw NoMinimumError("the family has no minimum");

  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      NumericalSemigroup t = intersect(family[i], family[j]);
      if (!std::binary_search(family.begin(), family.end(), t, canonical_pred))
        throw NotIntersectionClosedError("intersection of " + display_string(family[i]) +
                                         " and " + display_string(family[j]) +
                                         " is not a member");
    }

  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i == delta) continue;
    NumericalSemigroup r = family[i].remove_element(family[i].multiplicity());
    if (!std::binary_search(family.begin(), family.end(), r, canonical_pred))
      throw NotMultiplicityRemovalClosedError(display_string(family[i]) +
                                              " minus its multiplicity is not a member");
  }

  return Covariety(std::move(family), delta);
}

bool Covariety::contains(const NumericalSemigroup& s) const {
  return std::binary_search(members_.begin(), members_.end(), s, canonical_pred);
}

std::size_t Covariety::index_of(const NumericalSemigroup& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, canonical_pred);
  if (it == members_.end() || *it != s) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<std::size_t> Covariety::maximal_member_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < members_.size() && maximal; ++j)
      if (j != i && members_[i].subset_of(members_[j])) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<NumericalSemigroup> Covariety::maximal_members() const {
  std::vector<NumericalSemigroup> out;
  for (std::size_t i : maximal_member_indices()) out.push_back(members_[i]);
  return out;
}

CSet Covariety::cset(const std::vector<int>& values) const {
  CSet cs;
  cs.elements = values;
  std::sort(cs.elements.begin(), cs.elements.end());
  cs.elements.erase(std::unique(cs.elements.begin(), cs.elements.end()), cs.elements.end());
  for (int x : cs.elements) {
    if (x < 1) throw NotACSetError("C-set elements must be positive, got " + std::to_string(x));
    if (minimum().contains(x))
      throw NotACSetError(std::to_string(x) + " lies in the minimum of the covariety");
  }
  for (std::size_t idx : maximal_member_indices()) {
    bool hosts = true;
    for (int x : cs.elements)
      if (!members_[idx].contains(x)) {
        hosts = false;
        break;
      }
    if (hosts) {
      cs.host = idx;
      return cs;
    }
  }
  throw NotACSetError("no maximal member contains the whole set");
}

NumericalSemigroup Covariety::closure(const std::vector<int>& values) const {
  CSet cs = cset(values);
  NumericalSemigroup acc = members_[cs.host];
  for (const auto& s : members_) {
    bool covers = true;
    for (int x : cs.elements)
      if (!s.contains(x)) {
        covers = false;
        break;
      }
    if (covers) acc = intersect(acc, s);
  }
  return acc;
}

std::vector<CSet> Covariety::minimal_csystems(const NumericalSemigroup& s) const {
  if (!contains(s)) throw NotMemberError(display_string(s) + " is not a member");
  std::vector<CSet> out;
  if (s == minimum()) {
    out.push_back(cset({}));
    return out;
  }

  const NumericalSemigroup& delta = minimum();
  const int m = s.multiplicity();
  std::vector<int> others;
  for (int x = 1; x <= delta.frobenius(); ++x)
    if (x != m && s.contains(x) && !delta.contains(x)) others.push_back(x);
  assert(!delta.contains(m));

  std::vector<std::vector<int>> found;
  auto dominated = [&](const std::vector<int>& a) {
    for (const auto& f : found)
      if (std::includes(a.begin(), a.end(), f.begin(), f.end())) return true;
    return false;
  };
  const int n = static_cast<int>(others.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      std::vector<int> a{m};
      for (int i : comb) a.push_back(others[i]);
      std::sort(a.begin(), a.end());
      if (!dominated(a) && closure(a) == s) found.push_back(a);
    } while (next_combination(comb, n));
  }
  for (auto& a : found) out.push_back(cset(a));
  return out;
}

int Covariety::rank(const NumericalSemigroup& s) const {
  if (!contains(s)) throw NotMemberError(display_string(s) + " is not a member");
  if (s == minimum()) return 0;

  const NumericalSemigroup& delta = minimum();
  const int m = s.multiplicity();
  std::vector<int> others;
  for (int x = 1; x <= delta.frobenius(); ++x)
    if (x != m && s.contains(x) && !delta.contains(x)) others.push_back(x);

  const int n = static_cast<int>(others.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      std::vector<int> a{m};
      for (int i : comb) a.push_back(others[i]);
      if (closure(a) == s) return k + 1;
    } while (next_combination(comb, n));
  }
  assert(false && "every member is generated by its elements outside the minimum");
  return n + 1;
}

Covariety::Tree Covariety::tree() const {
  Tree t;
  t.root = delta_;
  t.parent.resize(members_.size());
  t.parent[delta_] = delta_;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i == delta_) continue;
    NumericalSemigroup p = members_[i].remove_element(members_[i].multiplicity());
    std::size_t j = index_of(p);
    assert(j < members_.size());
    t.parent[i] = j;
    t.edges.emplace_back(i, j);
  }
  return t;
}

ChainCad chain_cad(const NumericalSemigroup& s, int frobenius) {
  if (frobenius == 0 || frobenius < -1)
    throw FrobeniusTooSmallError("no numerical semigroup has Frobenius number " +
                                 std::to_string(frobenius));
  if (frobenius < s.frobenius())
    throw FrobeniusTooSmallError("F = " + std::to_string(frobenius) + " is below F(S) = " +
                                 std::to_string(s.frobenius()));
  const NumericalSemigroup delta = NumericalSemigroup::ordinary(frobenius);
  ChainCad chain{s, {}};
  NumericalSemigroup cur = s;
  while (true) {
    chain.links.push_back(cur);
    if (cur == delta) break;
    cur = cur.remove_element(cur.multiplicity());
  }
  return chain;
}

Covariety generated_covariety(const std::vector<NumericalSemigroup>& family) {
  if (family.empty()) throw EmptyFamilyError("cannot generate a covariety from an empty family");
  int f = -1;
  for (const auto& s : family) f = std::max(f, s.frobenius());

  std::vector<NumericalSemigroup> set;
  std::vector<NumericalSemigroup> queue;
  auto add = [&](const NumericalSemigroup& s) {
    auto it = std::lower_bound(set.begin(), set.end(), s, canonical_pred);
    if (it != set.end() && *it == s) return;
    set.insert(it, s);
    queue.push_back(s);
  };
  for (const auto& s : family)
    for (const auto& link : chain_cad(s, f).links) add(link);

  // Intersections of several chain links reduce to iterated pairwise
  // intersections, and links of one chain are nested, so closing the union
  // of the chains under pairwise intersection yields every intersection of
  // the original formula.
  while (!queue.empty()) {
    NumericalSemigroup cur = queue.back();
    queue.pop_back();
    std::vector<NumericalSemigroup> snapshot = set;
    for (const auto& other : snapshot) add(intersect(cur, other));
  }
  return Covariety::validate(std::move(set));
}

}  // namespace semicov
