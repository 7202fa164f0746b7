#include "hankel_lab/bigint.hpp"

#include <sstream>
#include <stdexcept>

namespace hankel_lab {

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::domain_error("zero denominator");
  }
  ExactRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_string(const ExactRational& value) { return value.get_str(10); }

std::vector<BigInt> to_bigints(const std::vector<long>& values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (long v : values) {
    out.emplace_back(v);
  }
  return out;
}

std::string join(const std::vector<BigInt>& values, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i].get_str(10);
  }
  return os.str();
}

std::string join(const std::vector<int>& values, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

}  // namespace hankel_lab
