#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sgp/semigroup.hpp"

namespace sgp {

inline constexpr int kDefaultGenusCap = 30;

enum class Predicate : unsigned {
  symmetric = 1u << 0,
  almost_symmetric = 1u << 1,
  med = 1u << 2,
  max_reduced_type = 1u << 3,
};

/// Conjunction of predicates; the empty filter ("none") accepts everything.
class Filter {
 public:
  Filter() = default;

  /// "none", a single predicate name, or names joined by '+',
  /// e.g. "almost_symmetric+max_reduced_type". Errc::unknown_predicate.
  static Filter parse(const std::string& text);

  Filter& require(Predicate p) {
    bits_ |= static_cast<unsigned>(p);
    return *this;
  }
  bool accepts(const NumericalSemigroup& s) const;
  std::string to_string() const;

 private:
  unsigned bits_ = 0;
};

struct EnumerationQuery {
  int max_genus = 0;
  Filter filter{};
  int genus_cap = kDefaultGenusCap;
};

using Visitor = std::function<void(const NumericalSemigroup&)>;

/// Every numerical semigroup of genus <= max_genus passing the filter,
/// exactly once, in depth-first order of the semigroup tree (root N; the
/// children of S remove one minimal generator above F, in increasing order).
/// Errc::cap_exceeded when max_genus > genus_cap.
void enumerate_by_genus(const EnumerationQuery& query, const Visitor& visit);

std::vector<NumericalSemigroup> collect_by_genus(const EnumerationQuery& query);

/// Independent oracle: all semigroups of genus exactly g, found by testing
/// every g-subset of {1, ..., 2g-1} for closure of its complement. g <= 10.
std::vector<NumericalSemigroup> enumerate_gapsets_bruteforce(int g);

/// (genus, count) for every genus 0..max_genus.
std::vector<std::pair<int, std::uint64_t>> count_by_predicate(
    int max_genus, const Filter& filter, int genus_cap = kDefaultGenusCap);

/**
 * Splits the tree of semigroups with genus <= max_genus into independent
 * work units. Unit 0 holds every node of genus < split_genus; each further
 * unit is the full subtree under one node of genus split_genus. Units are
 * numbered in depth-first order, so concatenating them in order visits the
 * same multiset of semigroups as enumerate_by_genus.
 */
class SubtreePartition {
 public:
  SubtreePartition(int max_genus, int split_genus);

  std::size_t unit_count() const noexcept { return 1 + roots_.size(); }
  void visit_unit(std::size_t unit, const Visitor& visit) const;

 private:
  int max_genus_;
  std::vector<NumericalSemigroup> shallow_;
  std::vector<NumericalSemigroup> roots_;
};

/// Runs `visit(semigroup, partial)` over every unit on `threads` workers and
/// returns the per-unit partial results in unit order. The result does not
/// depend on the thread count.
template <class Partial, class Visit>
std::vector<Partial> map_units(const SubtreePartition& partition,
                               unsigned threads, Visit visit) {
  std::vector<Partial> partials(partition.unit_count());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t u = next++; u < partials.size(); u = next++) {
      partition.visit_unit(u, [&](const NumericalSemigroup& s) {
        visit(s, partials[u]);
      });
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();  // join before partials is moved out
  return partials;
}

/// Throws Errc::cap_exceeded / Errc::bad_parameters for an out-of-range bound.
void check_genus_bound(int max_genus, int genus_cap);

}  // namespace sgp
