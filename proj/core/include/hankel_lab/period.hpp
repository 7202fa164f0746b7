#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel_lab/avoiding_set.hpp"
#include "hankel_lab/bigint.hpp"
#include "hankel_lab/eventually_periodic.hpp"

namespace hankel_lab {

enum class PeriodStatus { kPeriodicConjectured, kNoPeriodFound };

std::string to_string(PeriodStatus status);

// What a finite prefix says about periodicity. A period found here is
// evidence only; covering_theorem names a proof when one applies.
struct PeriodReport {
  PeriodStatus status = PeriodStatus::kNoPeriodFound;
  std::optional<EventuallyPeriodic> witness;
  std::size_t terms_examined = 0;
  std::size_t repeats_observed = 0;
  std::optional<std::string> covering_theorem;
};

// Smallest period p, then smallest preperiod r, such that the prefix from r
// on has period p, with r <= length/3 and r + min_repeats * p <= length.
// Throws std::invalid_argument when length < 4 or min_repeats < 2.
PeriodReport detect_period(const std::vector<BigInt>& prefix, std::size_t min_repeats);

// (H_1..H_count) of D(m,V), from the dynamic-programming coefficients.
std::vector<BigInt> direct_hankel_sequence(const AvoidingSet& set, std::size_t count);

// The first `terms` Hankel determinants agree with the claim. Needs
// terms >= 2 * (preperiod + period) (std::invalid_argument otherwise).
bool verify_claim(const AvoidingSet& set, const EventuallyPeriodic& claim, std::size_t terms);

// Conjectured H(D(m,{1..m-1})):
//   (1, 0^(m-2), 1, 1)*                           for m = 1, 2 mod 4
//   (1, 0^(m-2), -1, -1, -1, 0^(m-2), 1, 1)*      for m = 0, 3 mod 4
EventuallyPeriodic conjecture_pattern(int modulus);

struct ConjectureOutcome {
  bool holds = false;
  std::optional<std::size_t> first_mismatch;  // 0-based index into H
  std::vector<BigInt> computed;
};

// Needs m >= 3 and terms >= 2 * (2m + 2) (std::invalid_argument otherwise).
ConjectureOutcome conjecture_outcome(int modulus, std::size_t terms);
bool conjecture_check(int modulus, std::size_t terms);

// A label for the result that proves H(D(m,V)) periodic, when one applies
// to this set directly.
std::optional<std::string> covering_theorem(const AvoidingSet& set);

// {"status", "preperiod", "period", "period_length", "terms_examined",
//  "covering_theorem"?}; integers as decimal strings.
std::string to_json(const PeriodReport& report);

}  // namespace hankel_lab
