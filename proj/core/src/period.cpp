#include "hankel_lab/period.hpp"

#include <stdexcept>

#include "hankel_lab/hankel.hpp"
#include "hankel_lab/series.hpp"
#include "hankel_lab/structure.hpp"
#include "json.hpp"

namespace hankel_lab {

std::string to_string(PeriodStatus status) {
  return status == PeriodStatus::kPeriodicConjectured ? "periodic_conjectured" : "no_period_found";
}

PeriodReport detect_period(const std::vector<BigInt>& prefix, std::size_t min_repeats) {
  const std::size_t length = prefix.size();
  if (length < 4) {
    throw std::invalid_argument("period detection needs at least 4 terms");
  }
  if (min_repeats < 2) {
    throw std::invalid_argument("period detection needs min_repeats >= 2");
  }
  PeriodReport report;
  report.terms_examined = length;
  const std::size_t max_preperiod = length / 3;
  for (std::size_t p = 1; min_repeats * p <= length; ++p) {
    // Smallest r with prefix[i] == prefix[i + p] for every i >= r.
    std::size_t r = 0;
    for (std::size_t i = length - p; i-- > 0;) {
      if (prefix[i] != prefix[i + p]) {
        r = i + 1;
        break;
      }
    }
    if (r > max_preperiod || r + min_repeats * p > length) continue;
    std::vector<BigInt> pre(prefix.begin(), prefix.begin() + static_cast<long>(r));
    std::vector<BigInt> cycle(prefix.begin() + static_cast<long>(r),
                              prefix.begin() + static_cast<long>(r + p));
    report.status = PeriodStatus::kPeriodicConjectured;
    report.witness = EventuallyPeriodic(std::move(pre), std::move(cycle));
    report.repeats_observed = (length - r) / p;
    return report;
  }
  return report;
}

std::vector<BigInt> direct_hankel_sequence(const AvoidingSet& set, std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("Hankel sequence length must be positive");
  }
  const CoeffSeries series = dyck_count_dp(set, 2 * count - 2);
  return hankel_sequence(series, count);
}

bool verify_claim(const AvoidingSet& set, const EventuallyPeriodic& claim, std::size_t terms) {
  const std::size_t needed = 2 * (claim.preperiod().size() + claim.period().size());
  if (terms < needed) {
    throw std::invalid_argument("claim verification needs at least " + std::to_string(needed) +
                                " terms");
  }
  return direct_hankel_sequence(set, terms) == claim.expand(terms);
}

EventuallyPeriodic conjecture_pattern(int modulus) {
  if (modulus < 3) {
    throw std::invalid_argument("conjecture concerns m >= 3");
  }
  const std::size_t zeros = static_cast<std::size_t>(modulus - 2);
  std::vector<BigInt> cycle{1};
  cycle.insert(cycle.end(), zeros, BigInt(0));
  const int r = modulus % 4;
  if (r == 1 || r == 2) {
    cycle.insert(cycle.end(), {BigInt(1), BigInt(1)});
  } else {
    cycle.insert(cycle.end(), {BigInt(-1), BigInt(-1), BigInt(-1)});
    cycle.insert(cycle.end(), zeros, BigInt(0));
    cycle.insert(cycle.end(), {BigInt(1), BigInt(1)});
  }
  return EventuallyPeriodic({}, std::move(cycle));
}

ConjectureOutcome conjecture_outcome(int modulus, std::size_t terms) {
  if (modulus < 3) {
    throw std::invalid_argument("conjecture concerns m >= 3");
  }
  const std::size_t needed = 2 * (2 * static_cast<std::size_t>(modulus) + 2);
  if (terms < needed) {
    throw std::invalid_argument("conjecture check needs at least " + std::to_string(needed) +
                                " terms");
  }
  std::vector<int> residues;
  for (int r = 1; r < modulus; ++r) residues.push_back(r);
  ConjectureOutcome outcome;
  outcome.computed = direct_hankel_sequence(AvoidingSet(modulus, residues), terms);
  const std::vector<BigInt> expected = conjecture_pattern(modulus).expand(terms);
  outcome.holds = true;
  for (std::size_t i = 0; i < terms; ++i) {
    if (outcome.computed[i] != expected[i]) {
      outcome.holds = false;
      outcome.first_mismatch = i;
      break;
    }
  }
  return outcome;
}

bool conjecture_check(int modulus, std::size_t terms) {
  return conjecture_outcome(modulus, terms).holds;
}

std::optional<std::string> covering_theorem(const AvoidingSet& set) {
  const bool even_modulus = set.modulus() % 2 == 0;
  if (set.empty()) {
    return "unrestricted-catalan";
  }
  if (even_modulus && set.all_odd()) {
    return "even-modulus-odd-residues";
  }
  if (auto match = match_primitive_feasible(set)) {
    if (even_modulus || match->s == 1) {
      return "primitive-feasible-set";
    }
  }
  if (even_modulus && set.all_even() && structure_period(set, 64)) {
    return "arithmetic-progression-structure";
  }
  return std::nullopt;
}

std::string to_json(const PeriodReport& report) {
  nlohmann::ordered_json out;
  out["status"] = to_string(report.status);
  nlohmann::json pre = nlohmann::json::array();
  nlohmann::json per = nlohmann::json::array();
  if (report.witness) {
    for (const auto& v : report.witness->preperiod()) pre.push_back(to_decimal(v));
    for (const auto& v : report.witness->period()) per.push_back(to_decimal(v));
  }
  out["preperiod"] = pre;
  out["period"] = per;
  out["period_length"] = report.witness ? report.witness->period_length() : 0;
  out["terms_examined"] = report.terms_examined;
  if (report.covering_theorem) {
    out["covering_theorem"] = *report.covering_theorem;
  }
  return out.dump();
}

}  // namespace hankel_lab
