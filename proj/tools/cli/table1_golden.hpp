#pragma once

#include <string_view>
#include <vector>

namespace hankel_lab::cli {

// One published row: the set literal, then either the cycle in star notation
// (period > 0) or the printed prefix of a sequence with no period (period 0).
struct GoldenRow {
  std::string_view set;
  std::string_view sequence;
  int period;
};

const std::vector<GoldenRow>& table1_golden();

}  // namespace hankel_lab::cli
