// Search for distinct array geometries whose centered positions have equal
// sums of squares, i.e. equal spatial variance and therefore an identical
// angle-estimation bound.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crbdesign/geometry.hpp"

namespace crbdesign {

// Arrays of one size with identical variance_key. Members are canonical
// (minimum position 0, lexicographically no larger than their mirror image)
// and listed in lexicographic order.
struct VarianceClass {
  std::int64_t variance_key = 0;
  std::vector<SensorArray> members;
};

// N*sum(d^2) - (sum d)^2. Invariant under translation; two same-size arrays
// have equal spatial variance iff their keys are equal.
inline std::int64_t variance_key(const SensorArray& d) {
  return detail::variance_numerator(d.positions());
}

// Enumerates all canonical n-subsets of {0..l_max} and groups them by
// variance_key. Returns only groups with at least two members, ordered by
// key. Canonical form: translate so min == 0, then keep the
// lexicographically smaller of the subset and its mirror image.
inline std::vector<VarianceClass> equal_variance_search(
    int n, int l_max, std::uint64_t budget = 10'000'000) {
  if (n < 2) throw std::invalid_argument("equal_variance_search: need n >= 2");
  if (l_max < 1)
    throw std::invalid_argument("equal_variance_search: need l_max >= 1");
  const std::uint64_t count =
      detail::binomial_capped(l_max + 1, n, UINT64_MAX);
  if (count > budget)
    throw std::invalid_argument(
        "equal_variance_search: " + std::to_string(count) +
        " candidate subsets exceed the enumeration budget of " +
        std::to_string(budget));

  // Every translation class has exactly one representative containing 0, so
  // fix subset[0] = 0 and choose the remaining n-1 positions from {1..l_max}.
  std::vector<int> subset(n), mirror(n);
  subset[0] = 0;
  for (int i = 1; i < n; ++i) subset[i] = i;
  std::map<std::int64_t, std::vector<SensorArray>> groups;
  while (true) {
    const int top = subset[n - 1];
    for (int i = 0; i < n; ++i) mirror[i] = top - subset[n - 1 - i];
    if (subset <= mirror)
      groups[detail::variance_numerator(subset)].emplace_back(
          SensorArray(subset));
    int i = n - 1;
    while (i >= 1 && subset[i] == l_max - (n - 1 - i)) --i;
    if (i < 1) break;
    ++subset[i];
    for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
  }

  std::vector<VarianceClass> classes;
  for (auto& [key, members] : groups)
    if (members.size() >= 2)
      classes.push_back(VarianceClass{key, std::move(members)});
  return classes;
}

}  // namespace crbdesign
