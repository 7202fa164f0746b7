#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hankel_lab/avoiding_set.hpp"
#include "hankel_lab/bigint.hpp"

namespace hankel_lab {

// Which of the two tracked series an atom refers to: D or -1 + D.
enum class SeriesFlag { kD, kDminus1 };

std::string to_string(SeriesFlag flag);

// The symbolic determinant H_n of D(m,V) or of -1 + D(m,V).
struct Atom {
  int n = 1;
  AvoidingSet set;
  SeriesFlag flag = SeriesFlag::kD;

  std::string describe() const;  // `(m:V,D)` style

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// Integer linear combination of atoms; zero coefficients are never stored.
class TermCombo {
 public:
  TermCombo() = default;
  static TermCombo single(Atom atom, BigInt coefficient = 1);

  void add(const Atom& atom, const BigInt& coefficient);
  void add_scaled(const TermCombo& other, const BigInt& factor);

  const std::map<Atom, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // `c1*(m:V,D) + c2*(m:V,Dminus1)`, or `0`.
  std::string describe() const;

  friend bool operator==(const TermCombo&, const TermCombo&) = default;

 private:
  std::map<Atom, BigInt> terms_;
};

// The reduction rules do not apply to H_n(-1 + D(m,V)) when 1 is in V.
struct Obstruction {
  Atom atom;
  int depth = 0;  // reduction rounds performed before reaching the atom

  std::string describe() const;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

using StepResult = std::variant<TermCombo, Obstruction>;
using EvalResult = std::variant<BigInt, Obstruction>;

// One application of the reduction rules. Requires atom.n >= 2 (throws
// std::invalid_argument otherwise).
StepResult reduce_step(const Atom& atom);

struct ReductionTrace {
  std::vector<std::pair<int, TermCombo>> levels;  // (n, combination at that level)
  EvalResult result;
};

// H_n(D(m,V)) or H_n(-1 + D(m,V)) by the reduction rules alone, bottoming
// out at H_1(D) = 1 and H_1(-1 + D) = 0.
EvalResult evaluate(int n, const AvoidingSet& set, SeriesFlag flag);
ReductionTrace evaluate_with_trace(int n, const AvoidingSet& set, SeriesFlag flag);

}  // namespace hankel_lab
