#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel_lab/avoiding_set.hpp"
#include "hankel_lab/bigint.hpp"

namespace hankel_lab {

struct SeriesOrigin {
  std::optional<AvoidingSet> set;  // unset for series built from raw coefficients
  bool decremented = false;        // true for -1 + D

  friend bool operator==(const SeriesOrigin&, const SeriesOrigin&) = default;
};

// Truncated power series f_0 + f_1 x + ... + f_N x^N.
struct CoeffSeries {
  std::vector<BigInt> coeffs;
  SeriesOrigin origin;

  std::size_t size() const { return coeffs.size(); }
  // Highest available index, N.
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs[i]; }

  friend bool operator==(const CoeffSeries&, const CoeffSeries&) = default;
};

CoeffSeries raw_series(std::vector<BigInt> coeffs);

// d_0..d_N by dynamic programming over (height, last step was up) states of
// nonnegative lattice paths; a down step right after an up step at height h
// is rejected when h belongs to the set.
CoeffSeries dyck_count_dp(const AvoidingSet& set, std::size_t max_size);

// Largest size accepted by dyck_count_bruteforce.
inline constexpr int kBruteforceMaxSize = 14;

// Generates every Dyck path of size n and counts those with no peak in the
// set. Throws SizeLimitError for n > kBruteforceMaxSize.
BigInt dyck_count_bruteforce(const AvoidingSet& set, int n);

// Coefficients from the first-return recursion
//   D(V) = 1 / (1 + [1 in V] x - x D(V-1)),
// unrolled max_size+1 levels deep with the innermost tail set to 1.
CoeffSeries series_cf(const AvoidingSet& set, std::size_t max_size);

// -1 + D. Throws PreconditionError when the series is already decremented.
CoeffSeries decrement_constant(const CoeffSeries& s);
// Inverse of decrement_constant.
CoeffSeries increment_constant(const CoeffSeries& s);

BigInt catalan(unsigned n);

// JSON array of decimal strings.
std::string to_json(const CoeffSeries& s);
CoeffSeries series_from_json(const std::string& text);

}  // namespace hankel_lab
