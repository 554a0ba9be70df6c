#pragma once

#include <vector>

#include "sgp/int_set.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

/// Ap(S,n): for each residue i mod n, the least element of S congruent to i.
struct AperySet {
  Int n = 1;
  std::vector<Int> elements;  // elements[i] = w(i)

  Int max() const;
  IntSet sorted() const { return IntSet(elements); }
};

/// Throws Errc::not_member unless n is a nonzero element of S.
AperySet apery_set(const NumericalSemigroup& s, Int n);

/// Maximal elements of Ap(S,n) under x <=_S y  <=>  y - x in S.
IntSet apery_maximals(const NumericalSemigroup& s, Int n);

/// PF(S) read off the maximals of Ap(S, m(S)). PF(N) = {-1}.
IntSet pseudo_frobenius(const NumericalSemigroup& s);

/// PF(S) straight from the definition: gaps x in [-1, F] with x + s in S for
/// every nonzero s in S. Only s <= F - x need testing, since x + s > F is
/// always in S; negative x < -1 fail at s = F - x.
IntSet pf_bruteforce(const NumericalSemigroup& s);

/// t(S) = |PF(S)|.
Int type(const NumericalSemigroup& s);

/// rPF(S): integers outside S in the window [F - m + 1, F].
IntSet reduced_pf(const NumericalSemigroup& s);

/// s(S) = |rPF(S)|.
Int reduced_type(const NumericalSemigroup& s);

IntSet minimal_generators(const NumericalSemigroup& s);

Int embedding_dimension(const NumericalSemigroup& s);

/// n2, the second smallest minimal generator. Throws
/// Errc::no_second_generator for S = N.
Int second_generator(const NumericalSemigroup& s);

IntSet gaps(const NumericalSemigroup& s);

}  // namespace sgp
