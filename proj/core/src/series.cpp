#include "hankel_lab/series.hpp"

#include <string>

#include "hankel_lab/errors.hpp"
#include "json.hpp"

namespace hankel_lab {

CoeffSeries raw_series(std::vector<BigInt> coeffs) {
  return CoeffSeries{std::move(coeffs), SeriesOrigin{}};
}

CoeffSeries dyck_count_dp(const AvoidingSet& set, std::size_t max_size) {
  const std::size_t heights = max_size + 2;
  // ways[h][u]: prefixes ending at height h, u == 1 when the last step was up.
  std::vector<BigInt> down(heights), up(heights), next_down(heights), next_up(heights);
  down[0] = 1;

  std::vector<BigInt> counts;
  counts.reserve(max_size + 1);
  counts.emplace_back(1);

  std::vector<char> forbidden(heights, 0);
  for (std::size_t h = 1; h < heights; ++h) {
    forbidden[h] = set.contains(static_cast<long>(h)) ? 1 : 0;
  }

  const std::size_t steps = 2 * max_size;
  for (std::size_t step = 1; step <= steps; ++step) {
    const std::size_t remaining = steps - step;
    // A prefix that must still come back to 0 never climbs above `top`.
    const std::size_t top = std::min(step, std::min(remaining, max_size));
    for (std::size_t h = 0; h <= top; ++h) {
      // Arrive at h with an up step from h-1.
      if (h >= 1) {
        next_up[h] = down[h - 1] + up[h - 1];
      }
      // Arrive at h with a down step from h+1; a turn at h+1 forms a peak there.
      if (h + 1 < heights) {
        next_down[h] = down[h + 1];
        if (!forbidden[h + 1]) {
          next_down[h] += up[h + 1];
        }
      }
    }
    for (std::size_t h = top + 1; h < heights; ++h) {
      next_down[h] = 0;
      next_up[h] = 0;
    }
    down.swap(next_down);
    up.swap(next_up);
    if (step % 2 == 0) {
      counts.push_back(down[0]);
    }
  }
  return CoeffSeries{std::move(counts), SeriesOrigin{set, false}};
}

namespace {

// Builds every ballot word of the given size and tests it afterwards, so the
// count never shares logic with the dynamic program.
class PathEnumerator {
 public:
  PathEnumerator(const AvoidingSet& set, int size) : set_(set), size_(size), path_(static_cast<std::size_t>(2 * size), 'U') {}

  long count() {
    extend(0, 0, 0);
    return accepted_;
  }

 private:
  void extend(int position, int ups, int height) {
    if (position == 2 * size_) {
      if (accepts()) ++accepted_;
      return;
    }
    if (ups < size_) {
      path_[position] = 'U';
      extend(position + 1, ups + 1, height + 1);
    }
    if (height > 0) {
      path_[position] = 'D';
      extend(position + 1, ups, height - 1);
    }
  }

  bool accepts() const {
    int height = 0;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      height += path_[i] == 'U' ? 1 : -1;
      if (path_[i] == 'U' && i + 1 < path_.size() && path_[i + 1] == 'D' &&
          set_.contains(height)) {
        return false;
      }
    }
    return true;
  }

  const AvoidingSet& set_;
  int size_;
  std::string path_;
  long accepted_ = 0;
};

// 1 / a for a power series with a[0] == 1, truncated to a.size() terms.
std::vector<BigInt> invert_unit(const std::vector<BigInt>& a) {
  std::vector<BigInt> b(a.size());
  if (a.empty()) return b;
  b[0] = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      acc -= a[i] * b[k - i];
    }
    b[k] = acc;
  }
  return b;
}

}  // namespace

BigInt dyck_count_bruteforce(const AvoidingSet& set, int n) {
  if (n < 0) {
    throw std::invalid_argument("path size must be nonnegative");
  }
  if (n > kBruteforceMaxSize) {
    throw SizeLimitError("brute-force enumeration is limited to size " +
                         std::to_string(kBruteforceMaxSize) + ", got " + std::to_string(n));
  }
  return BigInt(PathEnumerator(set, n).count());
}

CoeffSeries series_cf(const AvoidingSet& set, std::size_t max_size) {
  const std::size_t len = max_size + 1;
  // Level j holds D(V - j); only len - j terms matter there, since the
  // level is reached through j factors of x.
  std::vector<BigInt> tail(len, 0);
  tail[0] = 1;
  for (std::size_t level = len; level-- > 0;) {
    const std::size_t terms = len - level;
    const AvoidingSet shifted = set.shift(-static_cast<long>(level));
    std::vector<BigInt> denom(terms, 0);
    denom[0] = 1;
    if (terms > 1 && shifted.contains(1)) {
      denom[1] += 1;
    }
    // denom -= x * tail
    for (std::size_t i = 1; i < terms; ++i) {
      denom[i] -= tail[i - 1];
    }
    tail = invert_unit(denom);
  }
  return CoeffSeries{std::move(tail), SeriesOrigin{set, false}};
}

CoeffSeries decrement_constant(const CoeffSeries& s) {
  if (s.origin.decremented) {
    throw PreconditionError("series constant term is already decremented");
  }
  CoeffSeries out = s;
  if (!out.coeffs.empty()) {
    out.coeffs[0] -= 1;
  }
  out.origin.decremented = true;
  return out;
}

CoeffSeries increment_constant(const CoeffSeries& s) {
  if (!s.origin.decremented) {
    throw PreconditionError("series constant term is not decremented");
  }
  CoeffSeries out = s;
  if (!out.coeffs.empty()) {
    out.coeffs[0] += 1;
  }
  out.origin.decremented = false;
  return out;
}

BigInt catalan(unsigned n) {
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  return binom / (n + 1);
}

std::string to_json(const CoeffSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coeffs) {
    arr.push_back(to_decimal(c));
  }
  return arr.dump();
}

CoeffSeries series_from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) {
    throw std::invalid_argument("coefficient JSON must be an array");
  }
  std::vector<BigInt> coeffs;
  for (const auto& item : arr) {
    coeffs.emplace_back(item.get<std::string>(), 10);
  }
  return raw_series(std::move(coeffs));
}

}  // namespace hankel_lab
