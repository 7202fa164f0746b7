#include "hankel_lab/hankel.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "hankel_lab/errors.hpp"

namespace hankel_lab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : order_(rows.size()), data_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) {
      throw std::invalid_argument("IntMatrix rows must form a square");
    }
    std::size_t j = 0;
    for (long v : row) {
      (*this)(i, j++) = v;
    }
    ++i;
  }
}

IntMatrix IntMatrix::minor_matrix(std::size_t row, std::size_t col) const {
  IntMatrix out(order_ - 1);
  for (std::size_t i = 0, oi = 0; i < order_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < order_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

IntMatrix IntMatrix::leading(std::size_t count) const {
  IntMatrix out(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      out(i, j) = (*this)(i, j);
    }
  }
  return out;
}

IntMatrix hankel_matrix(const CoeffSeries& s, const HankelSpec& spec) {
  if (spec.n == 0) {
    throw std::invalid_argument("Hankel order must be positive");
  }
  if (spec.last_index() >= s.size()) {
    throw InsufficientCoefficients(spec.last_index(), s.size());
  }
  IntMatrix m(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      m(i, j) = s.coeffs[spec.k + i + j];
    }
  }
  return m;
}

BigInt bareiss_det(IntMatrix m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  BigInt scratch;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) {
        swap(m(k, j), m(pivot, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& e = m(i, j);
        e *= m(k, k);
        scratch = m(i, k) * m(k, j);
        e -= scratch;
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return sign < 0 ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

BigInt naive_det(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n > kNaiveDetMaxOrder) {
    throw SizeLimitError("cofactor expansion is limited to order " +
                         std::to_string(kNaiveDetMaxOrder) + ", got " + std::to_string(n));
  }
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    BigInt term = m(0, j) * naive_det(m.minor_matrix(0, j));
    if (j % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

BigInt hankel_det(const CoeffSeries& s, const HankelSpec& spec) {
  return bareiss_det(hankel_matrix(s, spec));
}

namespace {

BigInt power(const BigInt& base, std::size_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

// adj(B), so that B * adj(B) = det(B) * I.
IntMatrix adjugate(const IntMatrix& b) {
  const std::size_t l = b.order();
  IntMatrix adj(l);
  if (l == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      BigInt cofactor = bareiss_det(b.minor_matrix(i, j));
      adj(j, i) = (i + j) % 2 ? BigInt(-cofactor) : cofactor;
    }
  }
  return adj;
}

}  // namespace

std::vector<BigInt> leading_minors(IntMatrix w) {
  const std::size_t total = w.order();
  std::vector<BigInt> minors;
  minors.reserve(total);
  // w(i, j) holds det(A[0..k-1 + {k+i}, 0..k-1 + {k+j}]); `previous` is
  // det(A[0..k-1, 0..k-1]), nonzero by construction.
  BigInt previous = 1;
  std::size_t k = 0;
  BigInt scratch;
  while (k < total) {
    const std::size_t rest = total - k;
    // Sylvester: det(w[0..j-1, 0..j-1]) = previous^(j-1) * det(A[0..k+j-1, ..]).
    std::size_t block = 0;
    BigInt block_det;
    for (std::size_t j = 1; j <= rest; ++j) {
      block_det = bareiss_det(w.leading(j));
      if (block_det != 0) {
        block = j;
        break;
      }
    }
    if (block == 0) {
      minors.resize(total, BigInt(0));
      return minors;
    }
    for (std::size_t j = 1; j < block; ++j) {
      minors.emplace_back(0);
    }
    BigInt next_minor = block_det;
    if (block > 1) {
      mpz_divexact(next_minor.get_mpz_t(), next_minor.get_mpz_t(),
                   power(previous, block - 1).get_mpz_t());
    }
    minors.push_back(next_minor);
    if (k + block == total) break;

    // Eliminate the leading block: for the bordered (block+1)-minors,
    //   det [[B, c], [r, a]] = a det(B) - r adj(B) c.
    const std::size_t l = block;
    const std::size_t r = rest - l;
    const IntMatrix adj = adjugate(w.leading(l));
    std::vector<BigInt> y(l * r);  // y(a, j) = (adj(B) c_j)_a
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t j = 0; j < r; ++j) {
        BigInt acc = 0;
        for (std::size_t b = 0; b < l; ++b) {
          if (adj(a, b) == 0) continue;
          scratch = adj(a, b) * w(b, l + j);
          acc += scratch;
        }
        y[a * r + j] = std::move(acc);
      }
    }
    const BigInt divisor = power(previous, l);
    IntMatrix reduced(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        BigInt value = w(l + i, l + j) * block_det;
        for (std::size_t a = 0; a < l; ++a) {
          if (w(l + i, a) == 0) continue;
          scratch = w(l + i, a) * y[a * r + j];
          value -= scratch;
        }
        if (divisor != 1) {
          mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
        }
        reduced(i, j) = std::move(value);
      }
    }
    w = std::move(reduced);
    previous = next_minor;
    k += l;
  }
  return minors;
}

std::vector<BigInt> hankel_sequence(const CoeffSeries& s, std::size_t count, std::size_t shift,
                                    HankelMethod method) {
  if (count == 0) {
    throw std::invalid_argument("Hankel sequence length must be positive");
  }
  const HankelSpec widest{count, shift};
  if (widest.last_index() >= s.size()) {
    throw InsufficientCoefficients(widest.last_index(), s.size());
  }
  if (method == HankelMethod::kMinorSweep) {
    return leading_minors(hankel_matrix(s, widest));
  }
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    out.push_back(hankel_det(s, HankelSpec{n, shift}));
  }
  return out;
}

}  // namespace hankel_lab
