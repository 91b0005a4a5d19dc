// Integer sensor array geometries, their spatial statistics, sum co-array
// algebra, and the variance-maximizing sparse array constructors.
#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crbdesign/rational.hpp"

namespace crbdesign {

// Linear array on the half-wavelength integer grid. Positions are strictly
// increasing and immutable after construction.
class SensorArray {
 public:
  explicit SensorArray(std::vector<int> positions)
      : positions_(std::move(positions)) {
    if (positions_.empty())
      throw std::invalid_argument("SensorArray: needs at least one sensor");
    for (std::size_t i = 1; i < positions_.size(); ++i)
      if (positions_[i] <= positions_[i - 1])
        throw std::invalid_argument(
            "SensorArray: positions must be strictly increasing");
  }
  SensorArray(std::initializer_list<int> positions)
      : SensorArray(std::vector<int>(positions)) {}

  // Parses a comma-separated integer list, e.g. "0,1,2,12,13,14".
  static SensorArray parse(const std::string& text) {
    std::vector<int> p;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      std::size_t a = start, b = end;
      while (a < b && text[a] == ' ') ++a;
      while (b > a && text[b - 1] == ' ') --b;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + a, text.data() + b, value);
      if (ec != std::errc{} || ptr != text.data() + b)
        throw std::invalid_argument("SensorArray: cannot parse '" + text +
                                    "' as a comma-separated integer list");
      p.push_back(value);
      start = end + 1;
    }
    return SensorArray(std::move(p));
  }

  const std::vector<int>& positions() const { return positions_; }
  int operator[](std::size_t i) const { return positions_[i]; }
  int size() const { return static_cast<int>(positions_.size()); }
  int min() const { return positions_.front(); }
  int max() const { return positions_.back(); }
  int aperture() const { return max() - min(); }

  SensorArray translated(int offset) const {
    std::vector<int> p(positions_);
    for (int& d : p) d += offset;
    return SensorArray(std::move(p));
  }

  // Mirror image through the origin, reordered to stay increasing.
  SensorArray reflected() const {
    std::vector<int> p(positions_.rbegin(), positions_.rend());
    for (int& d : p) d = -d;
    return SensorArray(std::move(p));
  }

  SensorArray dilated(int factor) const {
    if (factor < 1)
      throw std::invalid_argument("SensorArray: dilation factor must be >= 1");
    std::vector<int> p(positions_);
    for (int& d : p) d *= factor;
    return SensorArray(std::move(p));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(positions_[i]);
    }
    return s;
  }

  friend bool operator==(const SensorArray&, const SensorArray&) = default;

 private:
  std::vector<int> positions_;
};

// All pairwise Tx+Rx position sums. The multiplicity of an element counts the
// (tx, rx) pairs producing it; multiplicities add up to Nt*Nr.
struct CoArray {
  std::vector<int> elements;        // sorted, distinct
  std::map<int, int> multiplicity;  // element -> pair count
};

namespace detail {

struct PositionSums {
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
};

inline PositionSums position_sums(const std::vector<int>& p) {
  PositionSums s;
  for (int d : p) {
    s.sum += d;
    s.sum_sq += std::int64_t(d) * d;
  }
  return s;
}

// N*sum(d^2) - (sum d)^2; translation-invariant numerator of the spatial
// variance (chi = key / N^2).
inline std::int64_t variance_numerator(const std::vector<int>& p) {
  const PositionSums s = position_sums(p);
  const __int128 key =
      __int128(p.size()) * s.sum_sq - __int128(s.sum) * s.sum;
  if (key > INT64_MAX)
    throw std::overflow_error("variance key exceeds 64-bit range");
  return static_cast<std::int64_t>(key);
}

// C(n, k), saturating at `cap` to keep budget checks overflow-free.
inline std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;  // exact at every step
    if (value > __int128(cap)) return cap;
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace detail

// (sum of positions) / N, exact.
inline Rational spatial_mean(const SensorArray& d) {
  return Rational(detail::position_sums(d.positions()).sum, d.size());
}

// chi(D) = mean squared deviation of the positions from their mean, exact:
// (N*sum(d^2) - (sum d)^2) / N^2.
inline Rational spatial_variance(const SensorArray& d) {
  const std::int64_t n = d.size();
  return Rational(detail::variance_numerator(d.positions()), n * n);
}

// {0, 1, ..., n-1}.
inline SensorArray ula(int n) {
  if (n < 1) throw std::invalid_argument("ula: need n >= 1");
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return SensorArray(std::move(p));
}

// Two clusters of n/2 sensors at the ends of an aperture-l segment:
// {0..n/2-1} and {l-n/2+1..l}. Requires even n with 2 <= n <= l+1.
inline SensorArray clustered_array(int n, int l) {
  if (l < 1) throw std::invalid_argument("clustered_array: need l >= 1");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("clustered_array: n must be even and >= 2");
  if (n > l + 1)
    throw std::invalid_argument(
        "clustered_array: " + std::to_string(n) +
        " sensors do not fit an aperture of " + std::to_string(l));
  std::vector<int> p;
  p.reserve(n);
  const int half = n / 2;
  for (int i = 0; i < half; ++i) p.push_back(i);
  for (int i = half - 1; i >= 0; --i) p.push_back(l - i);
  return SensorArray(std::move(p));
}

// Spatial variance of clustered_array(n, l) in closed form:
// ((l+1-n/2)^2 + (n^2/4 - 1)/3) / 4.
inline Rational clustered_variance_closed_form(int n, int l) {
  if (l < 1) throw std::invalid_argument("clustered_variance: need l >= 1");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("clustered_variance: n must be even and >= 2");
  if (n > l + 1)
    throw std::invalid_argument(
        "clustered_variance: " + std::to_string(n) +
        " sensors do not fit an aperture of " + std::to_string(l));
  const std::int64_t a = l + 1 - n / 2;
  const std::int64_t q = std::int64_t(n) * n / 4 - 1;
  return (Rational(a * a) + Rational(q, 3)) / Rational(4);
}

// Exhaustive search for the variance-maximizing n-subset of {0..l}. Serves as
// the brute-force certificate for clustered_array; not a production path.
// Mirror-image subsets (d <-> l-d) are enumerated once. Ties resolve to the
// lexicographically smallest subset.
inline SensorArray max_variance_subset(int n, int l,
                                       std::uint64_t budget = 10'000'000) {
  if (l < 1) throw std::invalid_argument("max_variance_subset: need l >= 1");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "max_variance_subset: n must be even and >= 2");
  if (n > l + 1)
    throw std::invalid_argument(
        "max_variance_subset: " + std::to_string(n) +
        " sensors do not fit an aperture of " + std::to_string(l));
  const std::uint64_t count = detail::binomial_capped(l + 1, n, UINT64_MAX);
  if (count > budget)
    throw std::invalid_argument(
        "max_variance_subset: " + std::to_string(count) +
        " candidate subsets exceed the enumeration budget of " +
        std::to_string(budget));

  std::vector<int> subset(n), mirror(n), best;
  for (int i = 0; i < n; ++i) subset[i] = i;
  std::int64_t best_key = -1;
  while (true) {
    for (int i = 0; i < n; ++i) mirror[i] = l - subset[n - 1 - i];
    if (subset <= mirror) {
      const std::int64_t key = detail::variance_numerator(subset);
      if (key > best_key) {
        best_key = key;
        best = subset;
      }
    }
    // advance to the next combination in lexicographic order
    int i = n - 1;
    while (i >= 0 && subset[i] == l - (n - 1 - i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
  }
  return SensorArray(std::move(best));
}

// Tx array completing the clustered Rx array to a contiguous nonredundant sum
// co-array: {0, nr/2, 2*nr/2, ..., (nt-1)*nr/2}.
inline SensorArray optimal_tx_array(int nt, int nr) {
  if (nt < 1) throw std::invalid_argument("optimal_tx_array: need nt >= 1");
  if (nr < 2 || nr % 2 != 0)
    throw std::invalid_argument("optimal_tx_array: nr must be even and >= 2");
  std::vector<int> p(nt);
  for (int i = 0; i < nt; ++i) p[i] = i * (nr / 2);
  return SensorArray(std::move(p));
}

// Rx aperture paired with optimal_tx_array: (nt+1)*nr/2 - 1.
inline int corollary_aperture(int nt, int nr) {
  if (nt < 1) throw std::invalid_argument("corollary_aperture: need nt >= 1");
  if (nr < 2 || nr % 2 != 0)
    throw std::invalid_argument(
        "corollary_aperture: nr must be even and >= 2");
  return (nt + 1) * nr / 2 - 1;
}

// Nested MIMO reference pair: Tx ULA of nt sensors, Rx ULA dilated by nt.
// Its sum co-array is the full ULA of nt*nr elements.
inline std::pair<SensorArray, SensorArray> canonical_mimo(int nt, int nr) {
  if (nt < 1 || nr < 1)
    throw std::invalid_argument("canonical_mimo: need nt, nr >= 1");
  return {ula(nt), ula(nr).dilated(nt)};
}

inline CoArray sum_coarray(const SensorArray& tx, const SensorArray& rx) {
  CoArray c;
  for (int dt : tx.positions())
    for (int dr : rx.positions()) ++c.multiplicity[dt + dr];
  c.elements.reserve(c.multiplicity.size());
  for (const auto& [element, count] : c.multiplicity)
    c.elements.push_back(element);
  return c;
}

// True iff the elements form a run of consecutive integers.
inline bool is_contiguous(const CoArray& c) {
  if (c.elements.empty()) return false;
  return c.elements.back() - c.elements.front() + 1 ==
         static_cast<int>(c.elements.size());
}

// True iff every (tx, rx) pair lands on a distinct sum: |elements| == nt*nr.
inline bool is_nonredundant(const CoArray& c, int nt, int nr) {
  return static_cast<std::int64_t>(c.elements.size()) ==
         std::int64_t(nt) * nr;
}

// chi_rx > chi_tx, compared exactly. Under this condition Tx beamforming is
// the bound-minimizing transmission.
inline bool beamforming_condition(const SensorArray& tx,
                                  const SensorArray& rx) {
  return spatial_variance(rx) > spatial_variance(tx);
}

}  // namespace crbdesign
