#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hankel_lab {

using BigInt = mpz_class;

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation; construct through make_rational.
using ExactRational = mpq_class;

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator);

std::string to_decimal(const BigInt& value);
std::string to_string(const ExactRational& value);

std::vector<BigInt> to_bigints(const std::vector<long>& values);

// "a,b,c" with no spaces.
std::string join(const std::vector<BigInt>& values, const std::string& sep = ",");
std::string join(const std::vector<int>& values, const std::string& sep = ",");

}  // namespace hankel_lab
