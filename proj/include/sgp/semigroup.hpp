#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgp/int_set.hpp"

namespace sgp {

// Largest Frobenius number / multiplicity a semigroup may have before its
// membership window is refused as too large to materialize.
inline constexpr Int kMaxWindow = Int{1} << 22;

/**
 * A numerical semigroup S, stored as its membership table over [0, F+1].
 *
 * Everything above F is in S, everything below 0 is not. S = N is the
 * semigroup with F = -1, m = 1 and minimal generators {1}.
 *
 * Values are immutable once built; every invariant is computed in the
 * constructor, so a const NumericalSemigroup may be shared across threads.
 */
class NumericalSemigroup {
 public:
  /// The full monoid N.
  NumericalSemigroup();

  /// <gens>. Throws Errc::gcd_not_one when the complement would be infinite
  /// and Errc::overflow when a generator (or the resulting Frobenius number)
  /// leaves the supported integer range.
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// N minus `gaps`. Throws NotClosedError naming the lexicographically
  /// first pair a <= b of elements whose sum is a gap.
  static NumericalSemigroup from_gaps(const IntSet& gaps);

  /// Trusted path for callers that already hold a closed table, e.g. the
  /// semigroup tree. `member` must satisfy every class invariant: member[0],
  /// member.back() true, additively closed, all positions past the last
  /// false entry true.
  static NumericalSemigroup from_membership(std::vector<bool> member);

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  Int frobenius() const noexcept { return frobenius_; }
  Int multiplicity() const noexcept { return multiplicity_; }
  Int genus() const noexcept { return genus_; }
  bool is_full() const noexcept { return frobenius_ < 0; }

  const IntSet& minimal_generators() const noexcept { return msg_; }

  /// Membership over [0, F+1].
  const std::vector<bool>& membership() const noexcept { return member_; }

  /// S minus {x}, for a minimal generator x > F (a child in the semigroup
  /// tree). Throws Errc::bad_parameters otherwise.
  NumericalSemigroup remove_generator(Int x) const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.frobenius_ == b.frobenius_ && a.member_ == b.member_;
  }

 private:
  explicit NumericalSemigroup(std::vector<bool> member);

  std::vector<bool> member_;
  Int frobenius_ = -1;
  Int multiplicity_ = 1;
  Int genus_ = 0;
  IntSet msg_;
};

}  // namespace sgp
