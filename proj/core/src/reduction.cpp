#include "hankel_lab/reduction.hpp"

#include <sstream>
#include <stdexcept>

namespace hankel_lab {

std::string to_string(SeriesFlag flag) { return flag == SeriesFlag::kD ? "D" : "Dminus1"; }

std::string Atom::describe() const {
  return "(" + set.literal() + "," + to_string(flag) + ")";
}

TermCombo TermCombo::single(Atom atom, BigInt coefficient) {
  TermCombo c;
  c.add(atom, coefficient);
  return c;
}

void TermCombo::add(const Atom& atom, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(atom, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void TermCombo::add_scaled(const TermCombo& other, const BigInt& factor) {
  for (const auto& [atom, c] : other.terms_) {
    add(atom, c * factor);
  }
}

std::string TermCombo::describe() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [atom, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str(10) << "*" << atom.describe();
  }
  return os.str();
}

std::string Obstruction::describe() const {
  std::ostringstream os;
  os << "obstruction at depth " << depth << ": H_" << atom.n << " of " << atom.describe()
     << " has residue 1 in its set";
  return os.str();
}

StepResult reduce_step(const Atom& atom) {
  if (atom.n < 2) {
    throw std::invalid_argument("reduce_step needs n >= 2, got " + std::to_string(atom.n));
  }
  const AvoidingSet lowered = atom.set.shift(-2);
  const int n = atom.n - 1;
  if (atom.flag == SeriesFlag::kD) {
    const SeriesFlag flag = atom.set.contains(2) ? SeriesFlag::kDminus1 : SeriesFlag::kD;
    return TermCombo::single(Atom{n, lowered, flag});
  }
  if (atom.set.contains(1)) {
    return Obstruction{atom, 0};
  }
  TermCombo out;
  out.add(Atom{n, lowered, SeriesFlag::kD}, -1);
  out.add(Atom{n, lowered, SeriesFlag::kDminus1}, 1);
  return out;
}

ReductionTrace evaluate_with_trace(int n, const AvoidingSet& set, SeriesFlag flag) {
  if (n < 1) {
    throw std::invalid_argument("evaluate needs n >= 1, got " + std::to_string(n));
  }
  ReductionTrace trace;
  TermCombo level = TermCombo::single(Atom{n, set, flag});
  int depth = 0;
  for (int current = n; current > 1; --current, ++depth) {
    trace.levels.emplace_back(current, level);
    TermCombo next;
    for (const auto& [atom, c] : level.terms()) {
      StepResult step = reduce_step(atom);
      if (auto* obstruction = std::get_if<Obstruction>(&step)) {
        obstruction->depth = depth;
        trace.result = *obstruction;
        return trace;
      }
      next.add_scaled(std::get<TermCombo>(step), c);
    }
    level = std::move(next);
  }
  trace.levels.emplace_back(1, level);
  BigInt total = 0;
  for (const auto& [atom, c] : level.terms()) {
    if (atom.flag == SeriesFlag::kD) total += c;
  }
  trace.result = total;
  return trace;
}

EvalResult evaluate(int n, const AvoidingSet& set, SeriesFlag flag) {
  return evaluate_with_trace(n, set, flag).result;
}

}  // namespace hankel_lab
