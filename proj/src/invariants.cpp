#include "sgp/invariants.hpp"

#include <algorithm>
#include <string>

#include "sgp/error.hpp"

namespace sgp {

Int AperySet::max() const {
  return *std::max_element(elements.begin(), elements.end());
}

AperySet apery_set(const NumericalSemigroup& s, Int n) {
  if (n <= 0 || !s.contains(n)) {
    throw Error(Errc::not_member,
                "NotMember: " + std::to_string(n) + " is not a nonzero element");
  }
  if (n > kMaxWindow) {
    throw Error(Errc::overflow, "Apery set of size " + std::to_string(n) +
                                    " exceeds the supported window");
  }
  AperySet ap;
  ap.n = n;
  ap.elements.assign(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int x = 0; found < n; ++x) {
    auto& slot = ap.elements[static_cast<std::size_t>(x % n)];
    if (slot < 0 && s.contains(x)) {
      slot = x;
      ++found;
    }
  }
  return ap;
}

IntSet apery_maximals(const NumericalSemigroup& s, Int n) {
  const AperySet ap = apery_set(s, n);
  std::vector<Int> out;
  for (Int w : ap.elements) {
    const bool dominated = std::any_of(
        ap.elements.begin(), ap.elements.end(),
        [&](Int other) { return other != w && s.contains(other - w); });
    if (!dominated) out.push_back(w);
  }
  return IntSet(std::move(out));
}

IntSet pseudo_frobenius(const NumericalSemigroup& s) {
  return apery_maximals(s, s.multiplicity()).shifted(-s.multiplicity());
}

IntSet pf_bruteforce(const NumericalSemigroup& s) {
  const Int frob = s.frobenius();
  std::vector<Int> out;
  for (Int x = -1; x <= frob; ++x) {
    if (s.contains(x)) continue;
    bool pseudo = true;
    for (Int e = 1; e <= frob - x && pseudo; ++e) {
      pseudo = !s.contains(e) || s.contains(x + e);
    }
    if (pseudo) out.push_back(x);
  }
  return IntSet::from_sorted(std::move(out));
}

Int type(const NumericalSemigroup& s) {
  return static_cast<Int>(pseudo_frobenius(s).size());
}

IntSet reduced_pf(const NumericalSemigroup& s) {
  std::vector<Int> out;
  for (Int x = s.frobenius() - s.multiplicity() + 1; x <= s.frobenius(); ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return IntSet::from_sorted(std::move(out));
}

Int reduced_type(const NumericalSemigroup& s) {
  return static_cast<Int>(reduced_pf(s).size());
}

IntSet minimal_generators(const NumericalSemigroup& s) {
  return s.minimal_generators();
}

Int embedding_dimension(const NumericalSemigroup& s) {
  return static_cast<Int>(s.minimal_generators().size());
}

Int second_generator(const NumericalSemigroup& s) {
  const IntSet& msg = s.minimal_generators();
  if (msg.size() < 2) {
    throw Error(Errc::no_second_generator,
                "NoSecondGenerator: embedding dimension is 1");
  }
  return msg[1];
}

IntSet gaps(const NumericalSemigroup& s) {
  std::vector<Int> out;
  for (Int x = 1; x <= s.frobenius(); ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return IntSet::from_sorted(std::move(out));
}

}  // namespace sgp
