#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "sgp/enumerate.hpp"
#include "sgp/int_set.hpp"

namespace sgp {

struct Violation {
  IntSet gaps;  // identifies the offending semigroup
  std::string claim;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::string theorem_id;
  int max_genus = 0;
  std::uint64_t universe_size = 0;  // semigroups the claim applied to
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return violations.empty(); }
};

struct TheoremInfo {
  std::string id;
  std::string statement;
};

/// The registry, in its fixed run order.
const std::vector<TheoremInfo>& theorem_registry();

/**
 * Checks one registered claim on every numerical semigroup of genus at most
 * `max_genus`, skipping the semigroups outside the claim's hypotheses (for
 * instance S = N for the chain 1 <= s <= t <= m-1). The report, elapsed time
 * aside, is identical for every thread count.
 *
 * Errc::unknown_theorem for an id outside the registry, Errc::cap_exceeded
 * past the genus cap.
 */
VerificationReport verify(const std::string& theorem_id, int max_genus,
                          int genus_cap = kDefaultGenusCap,
                          unsigned threads = std::thread::hardware_concurrency());

/// Every registry entry, in registry order.
std::vector<VerificationReport> verify_all(
    int max_genus, int genus_cap = kDefaultGenusCap,
    unsigned threads = std::thread::hardware_concurrency());

}  // namespace sgp
