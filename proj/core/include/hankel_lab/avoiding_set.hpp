#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hankel_lab {

// The heights k >= 1 with k congruent mod `modulus` to one of `residues`.
// Residues live in {1..m}; residue m stands for the zero class.
class AvoidingSet {
 public:
  // Throws std::invalid_argument when modulus < 2 or a residue is outside
  // {1..m}. Residues are sorted and deduplicated.
  AvoidingSet(int modulus, std::vector<int> residues);

  int modulus() const { return modulus_; }
  const std::vector<int>& residues() const { return residues_; }
  bool empty() const { return residues_.empty(); }
  std::size_t size() const { return residues_.size(); }

  // Residue of k in {1..m}; k may be any integer.
  int residue_of(long k) const;

  // k >= 1.
  bool contains(long k) const;

  // V + t with every element reduced into {1..m}; t may be negative.
  AvoidingSet shift(long t) const;

  bool all_even() const;
  bool all_odd() const;

  // `m:r1,r2,...`; an empty V renders as `m:`.
  std::string literal() const;
  // `(m,{r1,r2})`.
  std::string pretty() const;

  friend auto operator<=>(const AvoidingSet&, const AvoidingSet&) = default;
  friend bool operator==(const AvoidingSet&, const AvoidingSet&) = default;

 private:
  int modulus_;
  std::vector<int> residues_;
};

// Parses `m:` or `m:r1,r2,...`. Throws ParseError with the offending offset.
AvoidingSet parse_avoiding_set(std::string_view text);

// Every V with the given modulus, in increasing bitmask order (bit r-1 set
// when residue r is present). Includes the empty and the full set.
std::vector<AvoidingSet> all_sets(int modulus);

}  // namespace hankel_lab
