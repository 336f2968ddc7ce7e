#include "semicov/apery.hpp"

#include <algorithm>
#include <string>

#include "semicov/errors.hpp"
#include "semicov/semigroup.hpp"

namespace semicov {

namespace detail {

std::vector<int> special_gaps_from_pf(const std::vector<int>& pf) {
  std::vector<int> sg;
  for (int x : pf)
    if (!std::binary_search(pf.begin(), pf.end(), 2 * x)) sg.push_back(x);
  return sg;
}

}  // namespace detail

AperyTable::AperyTable(unchecked_t, int modulus, std::vector<int> entries)
    : modulus_(modulus), entries_(std::move(entries)) {}

AperyTable::AperyTable(int modulus, std::vector<int> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus_ < 1) throw NotASemigroupError("Apery table modulus must be at least 1");
  if (static_cast<int>(entries_.size()) != modulus_)
    throw NotASemigroupError("Apery table needs exactly one entry per residue class");
  if (entries_[0] != 0) throw NotASemigroupError("Apery table entry 0 must be 0");
  for (int i = 1; i < modulus_; ++i) {
    if (entries_[i] < 1 || entries_[i] % modulus_ != i)
      throw NotASemigroupError("Apery table entry " + std::to_string(i) +
                               " must be a positive representative of its residue class");
  }
  if (frobenius() > NumericalSemigroup::max_frobenius)
    throw FrobeniusTooLargeError("Apery table describes a semigroup with Frobenius number above " +
                                 std::to_string(NumericalSemigroup::max_frobenius));
  // Superadditivity is exactly closure under addition of the described set.
  for (int i = 0; i < modulus_; ++i)
    for (int j = i; j < modulus_; ++j) {
      int k = (i + j) % modulus_;
      if (static_cast<long long>(entries_[i]) + entries_[j] < entries_[k])
        throw NotASemigroupError("Apery table entries are not superadditive at residues " +
                                 std::to_string(i) + " and " + std::to_string(j));
    }
}

int AperyTable::frobenius() const {
  return *std::max_element(entries_.begin(), entries_.end()) - modulus_;
}

int AperyTable::multiplicity() const {
  int m = modulus_;
  for (int i = 1; i < modulus_; ++i) m = std::min(m, entries_[i]);
  return m;
}

bool AperyTable::contains_element(int x) const {
  return x >= 0 && entries_[x % modulus_] <= x;
}

bool AperyTable::in_apery_set(int x) const {
  return x >= 0 && entries_[x % modulus_] == x;
}

std::vector<int> AperyTable::maximals() const {
  std::vector<int> out;
  for (int w : entries_) {
    bool maximal = true;
    for (int i = 1; i < modulus_ && maximal; ++i)
      if (in_apery_set(w + entries_[i])) maximal = false;
    if (maximal) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> AperyTable::pseudo_frobenius() const {
  std::vector<int> pf = maximals();
  for (int& w : pf) w -= modulus_;
  return pf;
}

std::vector<int> AperyTable::special_gaps() const {
  if (frobenius() < 0) return {};
  return detail::special_gaps_from_pf(pseudo_frobenius());
}

AperyTable apery_swap(const AperyTable& table, int x) {
  std::vector<int> sg = table.special_gaps();
  if (!std::binary_search(sg.begin(), sg.end(), x))
    throw NotSpecialGapError(std::to_string(x) + " is not a special gap of the tabled semigroup");
  std::vector<int> entries = table.entries_;
  entries[x % table.modulus_] = x;
  return AperyTable(AperyTable::unchecked_t{}, table.modulus_, std::move(entries));
}

}  // namespace semicov
