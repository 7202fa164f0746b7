#pragma once

#include <cstddef>
#include <vector>

#include "hankel_lab/bigint.hpp"
#include "hankel_lab/series.hpp"

namespace hankel_lab {

// Dense square matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order) : order_(order), data_(order * order) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t order() const { return order_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  // Drops row i and column j.
  IntMatrix minor_matrix(std::size_t i, std::size_t j) const;
  // Rows and columns 0..count-1.
  IntMatrix leading(std::size_t count) const;

 private:
  std::size_t order_ = 0;
  std::vector<BigInt> data_;
};

// H_n^(k): an order-n matrix read from coefficients starting at f_k.
struct HankelSpec {
  std::size_t n = 1;
  std::size_t k = 0;

  std::size_t last_index() const { return k + 2 * n - 2; }
};

// Entry (i, j) is f_{k+i+j}. Throws InsufficientCoefficients when the series
// stops before index k+2n-2.
IntMatrix hankel_matrix(const CoeffSeries& s, const HankelSpec& spec);

// Fraction-free elimination; pivots on the first nonzero entry down the
// column and returns 0 as soon as a column has no pivot. Destroys its input.
BigInt bareiss_det(IntMatrix m);

inline constexpr std::size_t kNaiveDetMaxOrder = 8;

// Cofactor expansion along the first row. Throws SizeLimitError above
// kNaiveDetMaxOrder.
BigInt naive_det(const IntMatrix& m);

BigInt hankel_det(const CoeffSeries& s, const HankelSpec& spec);

enum class HankelMethod {
  kMinorSweep,     // one elimination pass producing every leading minor
  kIndependent,    // a separate hankel_det per order
};

// (H_1^(k), ..., H_count^(k)). Needs coefficients up to k + 2*count - 2.
std::vector<BigInt> hankel_sequence(const CoeffSeries& s, std::size_t count,
                                    std::size_t shift = 0,
                                    HankelMethod method = HankelMethod::kMinorSweep);

// Every leading principal minor det(A[0..j, 0..j]), j = 0..order-1, from a
// single fraction-free pass. A run of vanishing minors is crossed by
// eliminating the whole block up to the next nonzero minor at once, using
// Sylvester's identity for the bordered minors.
std::vector<BigInt> leading_minors(IntMatrix m);

}  // namespace hankel_lab
