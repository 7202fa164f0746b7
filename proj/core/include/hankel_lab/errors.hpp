#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel_lab {

// An exhaustive oracle or search was asked for more than it is built to do.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A Hankel determinant needs coefficients beyond the end of the series.
class InsufficientCoefficients : public std::out_of_range {
 public:
  InsufficientCoefficients(std::size_t needed_index, std::size_t available)
      : std::out_of_range("series has " + std::to_string(available) +
                          " coefficients, index " + std::to_string(needed_index) +
                          " required"),
        needed_index_(needed_index),
        available_(available) {}

  std::size_t needed_index() const { return needed_index_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t needed_index_;
  std::size_t available_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hankel_lab
