#include "sgp/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "sgp/error.hpp"

namespace sgp {

namespace {

constexpr Int kInputLimit = std::numeric_limits<Int>::max() / 3;

// Least element of <gens> in every residue class mod gens[0] (the smallest
// generator), by shortest paths on the residue graph. Entries that would
// exceed `limit` are reported as -1.
std::vector<Int> residue_minima(const std::vector<Int>& gens, Int limit) {
  const Int m = gens.front();
  std::vector<Int> dist(static_cast<std::size_t>(m), -1);
  using Entry = std::pair<Int, Int>;  // (distance, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const Int g = gens[i];
      if (g > limit - d) continue;
      const Int nd = d + g;
      const auto nr = static_cast<std::size_t>((r + g) % m);
      if (dist[nr] < 0 || nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, static_cast<Int>(nr));
      }
    }
  }
  return dist;
}

bool is_sum_of_two_nonzero(const NumericalSemigroup& s, Int x) {
  for (Int a = s.multiplicity(); 2 * a <= x; ++a) {
    if (s.contains(a) && s.contains(x - a)) return true;
  }
  return false;
}

}  // namespace

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::gcd_not_one: return "GcdNotOne";
    case Errc::overflow: return "Overflow";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_member: return "NotMember";
    case Errc::no_second_generator: return "NoSecondGenerator";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::divides: return "Divides";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::unknown_theorem: return "UnknownTheorem";
    case Errc::unknown_predicate: return "UnknownPredicate";
    case Errc::malformed_input: return "MalformedInput";
  }
  return "Unknown";
}

NotClosedError::NotClosedError(std::int64_t a, std::int64_t b)
    : Error(Errc::not_closed,
            "NotClosed(" + std::to_string(a) + "," + std::to_string(b) +
                "): " + std::to_string(a + b) + " is listed as a gap"),
      a_(a),
      b_(b) {}

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(std::vector<bool>{true}) {}

NumericalSemigroup::NumericalSemigroup(std::vector<bool> member) {
  if (member.empty() || !member[0]) {
    throw Error(Errc::malformed_input, "membership table must contain 0");
  }
  Int last_gap = -1;
  for (std::size_t i = member.size(); i-- > 0;) {
    if (!member[i]) {
      last_gap = static_cast<Int>(i);
      break;
    }
  }
  member.resize(static_cast<std::size_t>(last_gap + 2), true);
  member_ = std::move(member);
  frobenius_ = last_gap;

  genus_ = static_cast<Int>(std::count(member_.begin(), member_.end(), false));
  multiplicity_ = 1;
  while (!contains(multiplicity_)) ++multiplicity_;

  if (is_full()) {
    msg_ = IntSet{1};
    return;
  }
  // Minimal generators lie in (Ap(S,m) \ {0}) + {m}; keep the irreducible ones.
  const Int m = multiplicity_;
  std::vector<Int> apery(static_cast<std::size_t>(m), -1);
  Int found = 0;
  for (Int x = 0; found < m; ++x) {
    auto& slot = apery[static_cast<std::size_t>(x % m)];
    if (slot < 0 && contains(x)) {
      slot = x;
      ++found;
    }
  }
  std::vector<Int> gens{m};
  for (Int w : apery) {
    if (w != 0 && !is_sum_of_two_nonzero(*this, w)) gens.push_back(w);
  }
  msg_ = IntSet(std::move(gens));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
  if (gens.empty()) {
    throw Error(Errc::bad_parameters, "at least one generator is required");
  }
  Int g = 0;
  for (Int a : gens) {
    if (a < 1) {
      throw Error(Errc::bad_parameters,
                  "generators must be positive, got " + std::to_string(a));
    }
    if (a > kInputLimit) {
      throw Error(Errc::overflow,
                  "generator " + std::to_string(a) + " exceeds the 64-bit contract");
    }
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw Error(Errc::gcd_not_one,
                "GcdNotOne: generators share the factor " + std::to_string(g));
  }

  std::vector<Int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Int m = sorted.front();
  if (m == 1) return NumericalSemigroup();
  if (m > kMaxWindow) {
    throw Error(Errc::overflow, "multiplicity " + std::to_string(m) +
                                    " exceeds the supported window");
  }
  std::erase_if(sorted, [m](Int a) { return a != m && a % m == 0; });

  const auto minima = residue_minima(sorted, kMaxWindow + m);
  if (std::find(minima.begin(), minima.end(), -1) != minima.end()) {
    throw Error(Errc::overflow, "Frobenius number exceeds the supported window");
  }
  const Int frob = *std::max_element(minima.begin(), minima.end()) - m;

  std::vector<bool> member(static_cast<std::size_t>(frob + 2));
  for (Int x = 0; x <= frob + 1; ++x) {
    member[static_cast<std::size_t>(x)] = x >= minima[static_cast<std::size_t>(x % m)];
  }
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_gaps(const IntSet& gaps) {
  if (gaps.empty()) return NumericalSemigroup();
  if (gaps.front() < 1) {
    throw Error(Errc::bad_parameters,
                "gaps must be positive, got " + std::to_string(gaps.front()));
  }
  const Int frob = gaps.back();
  if (frob > kMaxWindow) {
    throw Error(Errc::overflow, "gap " + std::to_string(frob) +
                                    " exceeds the supported window");
  }
  std::vector<bool> member(static_cast<std::size_t>(frob + 2), true);
  for (Int g : gaps) member[static_cast<std::size_t>(g)] = false;

  for (Int a = 1; 2 * a <= frob; ++a) {
    if (!member[static_cast<std::size_t>(a)]) continue;
    for (Int b = a; a + b <= frob; ++b) {
      if (member[static_cast<std::size_t>(b)] &&
          !member[static_cast<std::size_t>(a + b)]) {
        throw NotClosedError(a, b);
      }
    }
  }
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<bool> member) {
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::remove_generator(Int x) const {
  if (x <= frobenius_ || !msg_.contains(x)) {
    throw Error(Errc::bad_parameters,
                std::to_string(x) + " is not a minimal generator above F");
  }
  std::vector<bool> member(member_);
  member.resize(static_cast<std::size_t>(x + 2), true);
  member[static_cast<std::size_t>(x)] = false;
  return NumericalSemigroup(std::move(member));
}

}  // namespace sgp
