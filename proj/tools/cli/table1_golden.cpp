#include "table1_golden.hpp"

namespace hankel_lab::cli {

// Periodicity of H(D(m,V)) for every nonempty proper V of [m], m <= 5.
// The (4,{2}) cycle is printed without a star in the source table but is
// listed with period 8; it is read as purely periodic. The (4,{3,4}) cycle
// has a dropped comma in the source ("-1-1") restored here.
const std::vector<GoldenRow>& table1_golden() {
  static const std::vector<GoldenRow> rows = {
      {"2:1", "(1)*", 1},
      {"2:2", "(1,0,-1,-1,0,1)*", 6},

      {"3:1", "(1,1,0,-1,-1,-1,-1,0,1,1)*", 10},
      {"3:2", "(1,0,-1,-1,-1,-1,0,1,1,1)*", 10},
      {"3:3", "(1,1,1,0,-1,-1,-1,-1,0,1)*", 10},
      {"3:1,2", "(1,0,-1,-1,-1,0,1,1)*", 8},
      {"3:1,3", "(1,1,0,-1,-1,-1,0,1)*", 8},
      {"3:2,3", "(1,0,0,-1,-1,0,0,1)*", 8},

      {"4:1", "(1)*", 1},
      {"4:2", "(1,0,-1,-1,-1,0,1,1)*", 8},
      {"4:3", "(1)*", 1},
      {"4:4", "(1,1,0,-1,-1,-1,0,1)*", 8},
      {"4:1,2", "(1,0,-1,0,1,1,1,0,0,-1,-1,-1,0,1,0,-1,-1,-1,0,0,1,1)*", 22},
      {"4:1,3", "(1)*", 1},
      {"4:1,4", "(1,1,0,0,-1,-1,-1,0,1,0,-1,-1,-1,0,0,1,1,1,0,-1,0,1)*", 22},
      {"4:2,3", "(1,0,0,-1,-1,-1,0,1,0,-1,-1,-1,0,0,1,1,1,0,-1,0,1,1)*", 22},
      {"4:2,4", "(1,0,-1,-1,0,1)*", 6},
      {"4:3,4", "(1,1,0,-1,0,1,1,1,0,0,-1,-1,-1,0,1,0,-1,-1,-1,0,0,1)*", 22},
      {"4:1,2,3", "(1,0,0,-1,-1,-1,0,0,1,1)*", 10},
      {"4:1,2,4", "(1,0,-1,0,1)*", 5},
      {"4:1,3,4", "(1,1,0,0,-1,-1,-1,0,0,1)*", 10},
      {"4:2,3,4", "(1,0,0,0,1)*", 5},

      {"5:1", "1,1,1,0,-1,-2,-2,-3,-4,-5,-1,7,23,31,51,116,149", 0},
      {"5:2", "1,0,-1,-2,-2,-3,-4,-5,-1,7,23,31,51,116,149,118,-426", 0},
      {"5:3", "1,1,1,1,0,-1,-2,-2,-3,-4,-5,-1,7,23,31,51,116,149", 0},
      {"5:4", "1,1,0,-1,-2,-2,-3,-4,-5,-1,7,23,31,51,116,149,118", 0},
      {"5:5", "1,1,1,1,1,0,-1,-2,-2,-3,-4,-5,-1,7,23,31,51,116,149", 0},
      {"5:1,2", "(1,0,-1,-1,-1,-1,0,1,1,1)*", 10},
      {"5:1,3", "1,1,1,0,-1,-2,-2,-3,-4,-1,7,15,23,47,68,53,-202,-618", 0},
      {"5:1,4", "1,1,0,-1,-2,-2,-3,-4,-1,7,15,23,47,68,53,-202,-618", 0},
      {"5:1,5", "(1,1,1,0,-1,-1,-1,-1,0,1)*", 10},
      {"5:2,3", "(1,0,0,-1,-1,-1,0,0,1,1)*", 10},
      {"5:2,4", "1,0,-1,-2,-2,-3,-4,-1,7,15,23,47,68,53,-202,-618", 0},
      {"5:2,5", "1,0,-1,-1,-2,-4,-2,5,13,20,43,67,60,-187,-595,-1338", 0},
      {"5:3,4", "(1,1,0,-1,-1,-1,-1,0,1,1)*", 10},
      {"5:3,5", "1,1,1,1,0,-1,-2,-2,-3,-4,-1,7,15,23,47,68,53,-202", 0},
      {"5:4,5", "(1,1,0,0,-1,-1,-1,0,0,1)*", 10},
      {"5:1,2,3", "(1,0,0,-1,0,1,1,0,-1,0,0,1,1,1,0,0,0,1,1)*", 19},
      {"5:1,2,4", "(1,0,-1,-1,-1,-1,0,1,1,1)*", 10},
      {"5:1,2,5", "(1,0,-1,0,0,1,1,1,0,0,0,1,1,1,0,0,-1,0,1)*", 19},
      {"5:1,3,4", "(1,1,0,-1,-1,-1,-1,0,1,1)*", 10},
      {"5:1,3,5", "(1,1,1,0,-1,-1,-1,-1,0,1)*", 10},
      {"5:1,4,5", "(1,1,0,0,0,1,1,1,0,0,-1,0,1,1,0,-1,0,0,1)*", 19},
      {"5:2,3,4", "(1,0,0,0,1,1,1,0,0,-1,0,1,1,0,-1,0,0,1,1)*", 19},
      {"5:2,3,5", "1,0,0,-1,-1,0,1,1,2,1,-1,-2,-2,-3,-1,2,3,3,4,1,-3,-4", 0},
      {"5:2,4,5", "1,0,-1,-1,-2,-1,1,2,2,3,1,-2,-3,-3,-4,-1,3,4,4,5,1", 0},
      {"5:3,4,5", "(1,1,0,0,-1,0,1,1,0,-1,0,0,1,1,1,0,0,0,1)*", 19},
      {"5:1,2,3,4", "(1,0,0,0,1,1)*", 6},
      {"5:1,2,3,5", "(1,0,0,-1,0,1)*", 6},
      {"5:1,2,4,5", "(1,0,-1,0,0,1)*", 6},
      {"5:1,3,4,5", "(1,1,0,0,0,1)*", 6},
      {"5:2,3,4,5", "(1,0,0,0,0,1)*", 6},
  };
  return rows;
}

}  // namespace hankel_lab::cli
