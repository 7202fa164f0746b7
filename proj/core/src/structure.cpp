#include "hankel_lab/structure.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hankel_lab/errors.hpp"

namespace hankel_lab {

namespace {

struct Layout {
  int s1 = 1;
  std::vector<int> lengths;
};

Layout progression_layout(const AvoidingSet& set) {
  if (set.modulus() % 2 != 0) {
    throw PreconditionError("progression layout needs an even modulus, got " +
                            std::to_string(set.modulus()));
  }
  if (set.empty()) {
    throw PreconditionError("progression layout needs a nonempty residue set");
  }
  if (!set.all_even()) {
    throw PreconditionError("progression layout needs even residues, got " + set.literal());
  }
  Layout layout;
  const auto& v = set.residues();
  layout.s1 = v.front() / 2;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    layout.lengths.push_back((v[j + 1] - v[j]) / 2);
  }
  layout.lengths.push_back(set.modulus() / 2 - v.back() / 2 + layout.s1);
  return layout;
}

// Rolling (anchor, difference) state of the current section.
struct SectionState {
  BigInt anchor = 0;
  BigInt difference = -1;

  BigInt last(int length) const { return anchor + (length - 1) * difference; }

  void advance(int length) {
    BigInt end = last(length);
    anchor = difference;
    difference -= end;
  }
};

}  // namespace

SectionPlan section_plan(const AvoidingSet& set, std::size_t sections) {
  const Layout layout = progression_layout(set);
  SectionPlan plan;
  plan.s1 = layout.s1;
  plan.section_lengths = layout.lengths;
  SectionState state;
  for (std::size_t j = 0; j < sections; ++j) {
    const int length = layout.lengths[j % layout.lengths.size()];
    plan.anchors.push_back(state.anchor);
    plan.differences.push_back(state.difference);
    state.advance(length);
  }
  return plan;
}

std::vector<BigInt> theorem1_sequence(const AvoidingSet& set, std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("sequence length must be positive");
  }
  const Layout layout = progression_layout(set);
  std::vector<BigInt> out;
  out.reserve(count);
  for (int i = 0; i < layout.s1 && out.size() < count; ++i) {
    out.emplace_back(1);
  }
  SectionState state;
  for (std::size_t j = 0; out.size() < count; ++j) {
    const int length = layout.lengths[j % layout.lengths.size()];
    for (int k = 0; k < length && out.size() < count; ++k) {
      out.push_back(state.anchor + k * state.difference);
    }
    state.advance(length);
  }
  return out;
}

std::vector<BigInt> singleton_sequence(int modulus, int s, std::size_t count) {
  if (modulus < 2 || modulus % 2 != 0) {
    throw PreconditionError("singleton layout needs an even modulus, got " +
                            std::to_string(modulus));
  }
  const int p = modulus / 2;
  if (s < 1 || s > p) {
    throw PreconditionError("singleton layout needs 1 <= s <= m/2, got s = " + std::to_string(s));
  }
  std::vector<BigInt> out(std::min<std::size_t>(count, static_cast<std::size_t>(s)), BigInt(1));
  BigInt a = 0;
  BigInt d = -1;
  while (out.size() < count) {
    for (int k = 0; k < p && out.size() < count; ++k) {
      out.push_back(a + k * d);
    }
    const BigInt end = a + (p - 1) * d;
    a = d;
    d -= end;
  }
  return out;
}

std::optional<EventuallyPeriodic> structure_period(const AvoidingSet& set,
                                                   std::size_t max_cycles) {
  const Layout layout = progression_layout(set);
  std::vector<BigInt> cycle;
  SectionState state;
  for (std::size_t c = 0; c < max_cycles; ++c) {
    for (int length : layout.lengths) {
      for (int k = 0; k < length; ++k) {
        cycle.push_back(state.anchor + k * state.difference);
      }
      state.advance(length);
    }
    if (state.anchor == 0 && state.difference == -1) {
      std::vector<BigInt> ones(static_cast<std::size_t>(layout.s1), BigInt(1));
      return EventuallyPeriodic(std::move(ones), std::move(cycle));
    }
  }
  return std::nullopt;
}

bool DualSequence::admissible() const {
  for (std::size_t j = 0; j + 1 < hs.size(); ++j) {
    if (hs[j] == 0) return false;
  }
  return true;
}

bool DualSequence::primitive() const {
  return !hs.empty() && admissible() && hs.back() == 0;
}

ExactRational DualSequence::partial_product(std::size_t count) const {
  ExactRational product = 1;
  for (std::size_t j = 0; j < count && j < hs.size(); ++j) {
    product *= hs[j];
  }
  return product;
}

std::variant<DualSequence, ZeroEncountered> dual_sequence(const std::vector<int>& ts) {
  if (ts.empty()) {
    throw std::invalid_argument("dual sequence of an empty list");
  }
  DualSequence dual;
  dual.ts = ts;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    if (ts[j] < 1) {
      throw std::invalid_argument("entries must be positive integers");
    }
    ExactRational h = 2 - ts[j];
    if (j > 0) {
      h -= 1 / dual.hs.back();
    }
    dual.hs.push_back(h);
    if (h == 0 && j + 1 < ts.size()) {
      DualSequence prefix;
      prefix.ts.assign(ts.begin(), ts.begin() + static_cast<long>(j + 1));
      prefix.hs = dual.hs;
      return ZeroEncountered{j + 1, std::move(prefix)};
    }
  }
  return dual;
}

bool is_primitive(const std::vector<int>& ts) {
  if (ts.empty()) return false;
  const auto result = dual_sequence(ts);
  const auto* dual = std::get_if<DualSequence>(&result);
  return dual != nullptr && dual->primitive();
}

std::vector<int> feasible_set(const std::vector<int>& ts, int s) {
  if (s < 1) {
    throw PreconditionError("feasible set needs s >= 1");
  }
  if (!is_primitive(ts)) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? "," : "") << ts[i];
    os << ") is not primitive";
    throw PreconditionError(os.str());
  }
  std::vector<int> v{2 * s};
  int acc = s;
  for (int t : ts) {
    acc += t;
    v.push_back(2 * acc);
  }
  return v;
}

int predict_period(const std::vector<int>& ts, int modulus) {
  if (!is_primitive(ts)) {
    throw PreconditionError("period prediction needs a primitive sequence");
  }
  if (modulus < 2) {
    throw PreconditionError("modulus must be at least 2");
  }
  const auto dual = std::get<DualSequence>(dual_sequence(ts));
  const ExactRational product = dual.partial_product(ts.size() - 1);
  const int p = modulus % 2 == 0 ? modulus / 2 : modulus;
  if (product == -1) return p;
  if (product == 1) return 2 * p;
  throw std::logic_error("dual partial product " + to_string(product) + " is not +-1");
}

PeriodPrediction explain_prediction(const std::vector<int>& ts, int modulus, int s) {
  PeriodPrediction out;
  out.ts = ts;
  out.s = s;
  out.modulus = modulus;
  out.feasible = feasible_set(ts, s);
  if (modulus < out.feasible.back()) {
    throw PreconditionError("modulus " + std::to_string(modulus) + " is below max(V) = " +
                            std::to_string(out.feasible.back()));
  }
  out.dual = std::get<DualSequence>(dual_sequence(ts));
  out.partial_product = out.dual.partial_product(ts.size() - 1);
  out.base_period = modulus % 2 == 0 ? modulus / 2 : modulus;
  out.period = predict_period(ts, modulus);
  out.unproven_regime = modulus % 2 != 0 && s > 1;
  return out;
}

std::optional<PrimitiveMatch> match_primitive_feasible(const AvoidingSet& set) {
  const auto& v = set.residues();
  if (v.size() < 2 || !set.all_even()) return std::nullopt;
  PrimitiveMatch match;
  match.s = v.front() / 2;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    match.ts.push_back((v[j + 1] - v[j]) / 2);
  }
  if (!is_primitive(match.ts)) return std::nullopt;
  return match;
}

std::variant<std::vector<int>, PreconditionViolation> synthesize(
    const std::vector<SynthesisPart>& parts) {
  if (parts.empty()) {
    return PreconditionViolation{0, "no parts given"};
  }
  std::vector<int> out;
  std::vector<int> previous;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& part = parts[j];
    if (!is_primitive(part.ts)) {
      return PreconditionViolation{j, "part " + std::to_string(j + 1) + ": (" + join(part.ts) +
                                          ") is not primitive"};
    }
    if (j == 0 && part.shift < -1) {
      return PreconditionViolation{
          j, "part 1: shift " + std::to_string(part.shift) + " < -1"};
    }
    if (j > 0) {
      const int bound = previous.back() - 1;
      if (part.shift < bound) {
        return PreconditionViolation{
            j, "part " + std::to_string(j + 1) + ": shift " + std::to_string(part.shift) +
                   " < max{" + join(previous) + "} - 1 = " + std::to_string(bound)};
      }
    }
    std::vector<int> shifted = feasible_set(part.ts, 1);
    for (int& v : shifted) v += part.shift;
    out.insert(out.end(), shifted.begin(), shifted.end());
    previous = std::move(shifted);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || ptr != text.data() + pos || pos == start) {
      throw ParseError("expected integer", start);
    }
    out.push_back(value);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw ParseError("expected ','", pos);
    }
    ++pos;
    if (pos == text.size()) {
      throw ParseError("trailing ','", pos - 1);
    }
  }
  if (out.empty()) {
    throw ParseError("empty list", 0);
  }
  return out;
}

std::vector<SynthesisPart> parse_parts(std::string_view text) {
  std::vector<SynthesisPart> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t open = item.find('(');
    const std::size_t close = item.find(')');
    const std::size_t at = item.find('@');
    if (open != 0 || close == std::string_view::npos || at != close + 1) {
      throw ParseError("expected '(t1,...)@k'", pos);
    }
    SynthesisPart part;
    try {
      part.ts = parse_int_list(item.substr(1, close - 1));
      const std::vector<int> shift = parse_int_list(item.substr(at + 1));
      if (shift.size() != 1) {
        throw ParseError("expected a single shift", at + 1);
      }
      part.shift = shift.front();
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad part: ") + e.what(), pos);
    }
    parts.push_back(std::move(part));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return parts;
}

std::variant<int, NotApplicable> extend_admissible(const std::vector<int>& ts,
                                                   ExtensionTarget target) {
  const auto result = dual_sequence(ts);
  if (std::holds_alternative<ZeroEncountered>(result)) {
    return NotApplicable{"sequence is not admissible"};
  }
  const auto& dual = std::get<DualSequence>(result);
  const ExactRational& last = dual.hs.back();
  if (last == 0) {
    return NotApplicable{"last dual value is 0"};
  }
  const ExactRational product = dual.partial_product(dual.hs.size());
  if (abs(product) != 1) {
    return NotApplicable{"dual product " + to_string(product) + " is not +-1"};
  }
  const ExactRational half(1, 2);
  int target_value = 0;
  bool hypothesis = false;
  switch (target) {
    case ExtensionTarget::kPrimitive:
      target_value = 0;
      hypothesis = last == 1 || last < 0;
      break;
    case ExtensionTarget::kMinusOne:
      target_value = -1;
      hypothesis = last == half || last < 0;
      break;
    case ExtensionTarget::kPlusOne:
      target_value = 1;
      hypothesis = last < 0;
      break;
  }
  if (!hypothesis) {
    return NotApplicable{"last dual value " + to_string(last) + " violates the branch hypothesis"};
  }
  const ExactRational next = 2 - target_value - 1 / last;
  if (next.get_den() != 1 || next < 1) {
    throw std::logic_error("extension term " + to_string(next) + " is not a positive integer");
  }
  return static_cast<int>(next.get_num().get_si());
}

namespace {

void search_primitive(std::vector<int>& prefix, const ExactRational& h, int max_len, int max_t,
                      std::vector<std::vector<int>>& out) {
  for (int t = 1; t <= max_t; ++t) {
    ExactRational next = 2 - t;
    if (!prefix.empty()) next -= 1 / h;
    prefix.push_back(t);
    if (next == 0) {
      out.push_back(prefix);
    } else if (static_cast<int>(prefix.size()) < max_len) {
      search_primitive(prefix, next, max_len, max_t, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> generate_primitive(int max_len, int max_t) {
  if (max_len < 1 || max_t < 1) {
    throw std::invalid_argument("bounds must be positive");
  }
  if (max_len > kPrimitiveMaxLength || max_t > kPrimitiveMaxEntry) {
    throw SizeLimitError("primitive search is limited to length " +
                         std::to_string(kPrimitiveMaxLength) + " and entries " +
                         std::to_string(kPrimitiveMaxEntry));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  search_primitive(prefix, ExactRational(0), max_len, max_t, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hankel_lab
