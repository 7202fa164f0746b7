#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hankel_lab/avoiding_set.hpp"
#include "hankel_lab/bigint.hpp"
#include "hankel_lab/eventually_periodic.hpp"

namespace hankel_lab {

// Arithmetic-progression layout of H(D(m,V)) for even m and a nonempty V of
// even residues: s1 leading ones, then sections cycling through
// section_lengths, section j running anchors[j], anchors[j] + differences[j], ...
struct SectionPlan {
  int s1 = 1;
  std::vector<int> section_lengths;  // one full cycle, sums to m/2
  std::vector<BigInt> anchors;       // first value of each generated section
  std::vector<BigInt> differences;   // common difference of each generated section
};

// Throws PreconditionError for an odd modulus, an empty V or an odd residue.
SectionPlan section_plan(const AvoidingSet& set, std::size_t sections);

std::vector<BigInt> theorem1_sequence(const AvoidingSet& set, std::size_t count);

// Single residue 2s; every section has length m/2. Needs even m and
// 1 <= s <= m/2.
std::vector<BigInt> singleton_sequence(int modulus, int s, std::size_t count);

// The exact period of the progression layout when its (anchor, difference)
// state returns to the start within max_cycles full cycles of sections.
std::optional<EventuallyPeriodic> structure_period(const AvoidingSet& set,
                                                   std::size_t max_cycles);

struct DualSequence {
  std::vector<int> ts;
  std::vector<ExactRational> hs;  // h(t_1), h(t_1,t_2), ...

  bool admissible() const;  // every value nonzero except possibly the last
  bool primitive() const;   // admissible and the last value is zero
  // hs[0] * ... * hs[count-1]; the empty product is 1.
  ExactRational partial_product(std::size_t count) const;
};

// The value h(t_1..t_j) hit zero before the end of the input.
struct ZeroEncountered {
  std::size_t position = 0;  // 1-based j with h(t_1..t_j) == 0
  DualSequence prefix;       // values up to and including the zero
};

// Throws std::invalid_argument for an empty list or a nonpositive entry.
std::variant<DualSequence, ZeroEncountered> dual_sequence(const std::vector<int>& ts);

bool is_primitive(const std::vector<int>& ts);

// {2s, 2(s+t_1), ..., 2(s+t_1+...+t_b)} for primitive ts = (t_1..t_b).
// Throws PreconditionError for non-primitive input or s < 1.
std::vector<int> feasible_set(const std::vector<int>& ts, int s);

// m/2 or m (odd m), doubled when the dual values before the final zero
// multiply to 1. Throws PreconditionError for non-primitive ts and
// std::logic_error if that product is not +-1.
int predict_period(const std::vector<int>& ts, int modulus);

struct PeriodPrediction {
  std::vector<int> ts;
  int s = 1;
  int modulus = 2;
  std::vector<int> feasible;
  DualSequence dual;
  ExactRational partial_product;
  int base_period = 1;  // p
  int period = 1;       // p or 2p
  // Odd modulus with s > 1: the period statement is only established for s = 1.
  bool unproven_regime = false;
};

// Throws PreconditionError when ts is not primitive or m < max(feasible set).
PeriodPrediction explain_prediction(const std::vector<int>& ts, int modulus, int s);

// Recognizes V as a feasible set {2s, 2(s+t_1), ...} of a primitive sequence.
struct PrimitiveMatch {
  std::vector<int> ts;
  int s = 1;
};
std::optional<PrimitiveMatch> match_primitive_feasible(const AvoidingSet& set);

struct SynthesisPart {
  std::vector<int> ts;  // primitive
  int shift = 0;        // k_j
};

struct PreconditionViolation {
  std::size_t part_index = 0;  // 0-based
  std::string message;
};

// (V_1 + k_1) u ... u (V_b + k_b) with V_j the feasible set of ts_j at
// s = 1, provided k_1 >= -1 and k_{j+1} >= max(V_j + k_j) - 1.
std::variant<std::vector<int>, PreconditionViolation> synthesize(
    const std::vector<SynthesisPart>& parts);

// `(t1,t2,...)@k;(...)@k`.
std::vector<SynthesisPart> parse_parts(std::string_view text);

enum class ExtensionTarget { kPrimitive, kMinusOne, kPlusOne };

struct NotApplicable {
  std::string reason;
};

// The t_{b+1} that makes the next dual value 0, -1 or 1.
std::variant<int, NotApplicable> extend_admissible(const std::vector<int>& ts,
                                                   ExtensionTarget target);

inline constexpr int kPrimitiveMaxLength = 6;
inline constexpr int kPrimitiveMaxEntry = 9;

// Every primitive sequence with length <= max_len and entries in
// {1..max_t}, in lexicographic order. Throws SizeLimitError past the limits.
std::vector<std::vector<int>> generate_primitive(int max_len, int max_t);

std::vector<int> parse_int_list(std::string_view text);

}  // namespace hankel_lab
