#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hankel_lab/bigint.hpp"

namespace hankel_lab {

// An infinite integer sequence given as a finite preperiod followed by a
// cycle repeated forever. Always held in minimal form: the cycle is not a
// power of a shorter word and the preperiod cannot be rolled into it.
class EventuallyPeriodic {
 public:
  // Normalizes its input; throws std::invalid_argument on an empty period.
  EventuallyPeriodic(std::vector<BigInt> preperiod, std::vector<BigInt> period);

  static EventuallyPeriodic constant(const BigInt& value);

  const std::vector<BigInt>& preperiod() const { return preperiod_; }
  const std::vector<BigInt>& period() const { return period_; }
  std::size_t period_length() const { return period_.size(); }

  // Terms 0..count-1 of the infinite sequence.
  std::vector<BigInt> expand(std::size_t count) const;
  BigInt term(std::size_t index) const;

  // `(c1,c2)*` or `(p1,p2 | c1,c2)*`.
  std::string star() const;

  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;

 private:
  std::vector<BigInt> preperiod_;
  std::vector<BigInt> period_;
};

EventuallyPeriodic normalize(const std::vector<BigInt>& raw_preperiod,
                             const std::vector<BigInt>& raw_period);

// Accepts the rendering of star() plus a few lenient spellings: `^*` in
// place of `*`, spaces anywhere, and U+2212 as a minus sign.
EventuallyPeriodic parse_star(std::string_view text);

}  // namespace hankel_lab
