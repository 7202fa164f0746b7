#include "hankel_lab/avoiding_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hankel_lab/errors.hpp"

namespace hankel_lab {

AvoidingSet::AvoidingSet(int modulus, std::vector<int> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus_ < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus_));
  }
  for (int r : residues_) {
    if (r < 1 || r > modulus_) {
      throw std::invalid_argument("residue " + std::to_string(r) + " outside 1.." +
                                  std::to_string(modulus_));
    }
  }
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
}

int AvoidingSet::residue_of(long k) const {
  long r = ((k - 1) % modulus_ + modulus_) % modulus_;
  return static_cast<int>(r + 1);
}

bool AvoidingSet::contains(long k) const {
  return std::binary_search(residues_.begin(), residues_.end(), residue_of(k));
}

AvoidingSet AvoidingSet::shift(long t) const {
  std::vector<int> out;
  out.reserve(residues_.size());
  for (int r : residues_) {
    out.push_back(residue_of(r + t));
  }
  return AvoidingSet(modulus_, std::move(out));
}

bool AvoidingSet::all_even() const {
  return std::all_of(residues_.begin(), residues_.end(), [](int r) { return r % 2 == 0; });
}

bool AvoidingSet::all_odd() const {
  return std::all_of(residues_.begin(), residues_.end(), [](int r) { return r % 2 != 0; });
}

std::string AvoidingSet::literal() const {
  std::ostringstream os;
  os << modulus_ << ':';
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) os << ',';
    os << residues_[i];
  }
  return os.str();
}

std::string AvoidingSet::pretty() const {
  std::ostringstream os;
  os << '(' << modulus_ << ",{";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) os << ',';
    os << residues_[i];
  }
  os << "})";
  return os.str();
}

namespace {

int parse_int(std::string_view text, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == start) {
    throw ParseError(std::string("expected ") + what, start);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc()) {
    throw ParseError(std::string(what) + " out of range", start);
  }
  return value;
}

}  // namespace

AvoidingSet parse_avoiding_set(std::string_view text) {
  std::size_t pos = 0;
  const int modulus = parse_int(text, pos, "modulus");
  if (pos >= text.size() || text[pos] != ':') {
    throw ParseError("expected ':' after modulus", pos);
  }
  ++pos;
  std::vector<int> residues;
  if (pos < text.size()) {
    while (true) {
      const std::size_t at = pos;
      const int r = parse_int(text, pos, "residue");
      if (r < 1 || r > modulus) {
        throw ParseError("residue " + std::to_string(r) + " outside 1.." + std::to_string(modulus),
                         at);
      }
      if (std::find(residues.begin(), residues.end(), r) != residues.end()) {
        throw ParseError("duplicate residue " + std::to_string(r), at);
      }
      residues.push_back(r);
      if (pos == text.size()) break;
      if (text[pos] != ',') {
        throw ParseError("expected ',' between residues", pos);
      }
      ++pos;
    }
  }
  if (modulus < 2) {
    throw ParseError("modulus must be at least 2", 0);
  }
  return AvoidingSet(modulus, std::move(residues));
}

std::vector<AvoidingSet> all_sets(int modulus) {
  if (modulus < 2 || modulus > 20) {
    throw std::invalid_argument("all_sets supports moduli 2..20");
  }
  std::vector<AvoidingSet> out;
  const unsigned count = 1u << modulus;
  out.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<int> residues;
    for (int r = 1; r <= modulus; ++r) {
      if (mask & (1u << (r - 1))) residues.push_back(r);
    }
    out.emplace_back(modulus, std::move(residues));
  }
  return out;
}

}  // namespace hankel_lab
