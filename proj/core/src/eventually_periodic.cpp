#include "hankel_lab/eventually_periodic.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hankel_lab/errors.hpp"

namespace hankel_lab {

namespace {

std::vector<BigInt> minimal_cycle(const std::vector<BigInt>& period) {
  const std::size_t n = period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) {
      repeats = period[i] == period[i - d];
    }
    if (repeats) {
      return std::vector<BigInt>(period.begin(), period.begin() + static_cast<long>(d));
    }
  }
  return period;
}

}  // namespace

EventuallyPeriodic::EventuallyPeriodic(std::vector<BigInt> preperiod, std::vector<BigInt> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) {
    throw std::invalid_argument("period must be nonempty");
  }
  period_ = minimal_cycle(period_);
  // Roll trailing preperiod terms into the cycle.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    BigInt last = period_.back();
    period_.pop_back();
    period_.insert(period_.begin(), last);
    preperiod_.pop_back();
  }
}

EventuallyPeriodic EventuallyPeriodic::constant(const BigInt& value) {
  return EventuallyPeriodic({}, {value});
}

BigInt EventuallyPeriodic::term(std::size_t index) const {
  if (index < preperiod_.size()) return preperiod_[index];
  return period_[(index - preperiod_.size()) % period_.size()];
}

std::vector<BigInt> EventuallyPeriodic::expand(std::size_t count) const {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(term(i));
  }
  return out;
}

std::string EventuallyPeriodic::star() const {
  std::ostringstream os;
  os << '(';
  if (!preperiod_.empty()) {
    os << join(preperiod_) << " | ";
  }
  os << join(period_) << ")*";
  return os.str();
}

EventuallyPeriodic normalize(const std::vector<BigInt>& raw_preperiod,
                             const std::vector<BigInt>& raw_period) {
  return EventuallyPeriodic(raw_preperiod, raw_period);
}

namespace {

class StarParser {
 public:
  explicit StarParser(std::string_view text) : text_(text) {}

  EventuallyPeriodic parse() {
    skip_space();
    expect('(');
    std::vector<BigInt> first = parse_list();
    std::vector<BigInt> pre;
    std::vector<BigInt> per;
    skip_space();
    if (peek() == '|') {
      ++pos_;
      pre = std::move(first);
      per = parse_list();
    } else {
      per = std::move(first);
    }
    skip_space();
    expect(')');
    skip_space();
    if (peek() == '^') ++pos_;
    expect('*');
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("trailing characters after star notation", pos_);
    }
    if (per.empty()) {
      throw ParseError("empty cycle", pos_);
    }
    return EventuallyPeriodic(std::move(pre), std::move(per));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool at_minus() {
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  BigInt parse_integer() {
    skip_space();
    const std::size_t start = pos_;
    const bool negative = at_minus();
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      throw ParseError("expected integer", start);
    }
    BigInt value(std::string(text_.substr(digits, pos_ - digits)), 10);
    return negative ? BigInt(-value) : value;
  }

  std::vector<BigInt> parse_list() {
    std::vector<BigInt> out;
    skip_space();
    if (peek() == '|' || peek() == ')') return out;
    while (true) {
      out.push_back(parse_integer());
      skip_space();
      if (peek() != ',') break;
      ++pos_;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EventuallyPeriodic parse_star(std::string_view text) { return StarParser(text).parse(); }

}  // namespace hankel_lab
