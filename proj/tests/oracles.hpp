#pragma once

// Test-only reference computations. Each one works straight from a
// definition and shares no code path with the library it checks.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sgp::oracle {

using Int = std::int64_t;

// Membership of <gens> over [0, limit] by forward dynamic programming.
inline std::vector<bool> membership_dp(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (Int x = 1; x <= limit; ++x) {
    for (Int g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return in;
}

// Schur's bound: F(<gens>) <= (a1 - 1)(ak - 1) - 1 for coprime generators.
inline Int schur_window(const std::vector<Int>& gens) {
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  return (*lo - 1) * (*hi - 1) + *hi;
}

// Gaps of <gens>: every x in [1, window] the DP leaves out.
inline std::vector<Int> gaps_dp(const std::vector<Int>& gens) {
  const Int window = schur_window(gens);
  const auto in = membership_dp(gens, window);
  std::vector<Int> out;
  for (Int x = 1; x <= window; ++x) {
    if (!in[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

// Least element of S in each residue class mod n, by scanning upward.
template <class Contains>
std::vector<Int> apery_scan(Contains contains, Int n) {
  std::vector<Int> w(static_cast<std::size_t>(n), -1);
  for (Int x = 0, found = 0; found < n; ++x) {
    if (contains(x) && w[static_cast<std::size_t>(x % n)] < 0) {
      w[static_cast<std::size_t>(x % n)] = x;
      ++found;
    }
  }
  std::sort(w.begin(), w.end());
  return w;
}

// Minimal generators: nonzero elements up to `window` that are not a sum of
// two nonzero elements.
template <class Contains>
std::vector<Int> msg_filter(Contains contains, Int window) {
  std::vector<Int> out;
  for (Int x = 1; x <= window; ++x) {
    if (!contains(x)) continue;
    bool sum = false;
    for (Int a = 1; a < x && !sum; ++a) sum = contains(a) && contains(x - a);
    if (!sum) out.push_back(x);
  }
  return out;
}

// Gap sets of every semigroup of genus g: all g-subsets of [1, 2g-1] whose
// complement is closed, each returned as a sorted vector.
inline std::vector<std::vector<Int>> gapsets_of_genus(int g) {
  std::vector<std::vector<Int>> out;
  if (g == 0) return {{}};
  const int n = 2 * g - 1;
  std::vector<Int> current;
  auto closed = [&](const std::vector<Int>& gaps) {
    auto gap = [&](Int x) { return std::binary_search(gaps.begin(), gaps.end(), x); };
    for (Int a = 1; a <= n; ++a) {
      for (Int b = 1; a + b <= n; ++b) {
        if (!gap(a) && !gap(b) && gap(a + b)) return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, Int next) -> void {
    if (static_cast<int>(current.size()) == g) {
      if (closed(current)) out.push_back(current);
      return;
    }
    for (Int x = next; x <= n; ++x) {
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

}  // namespace sgp::oracle
