#pragma once

#include <string>
#include <variant>

#include "sgp/int_set.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

// Predicates. All are total; S = N satisfies every one of them.
bool is_symmetric(const NumericalSemigroup& s);
bool is_almost_symmetric(const NumericalSemigroup& s);  // 2g = F + t
bool is_med(const NumericalSemigroup& s);               // e = m
bool has_maximal_reduced_type(const NumericalSemigroup& s);  // s(S) = t(S)
bool is_half_line(const NumericalSemigroup& s);         // m >= F

// Construction families.

/// Delta(m) = {0} + [m, inf). Errc::bad_parameters unless m >= 1.
NumericalSemigroup construct_half_line(Int m);

/// Delta(m) \ {2m - t} for 1 <= t < m. For t >= 2 this is almost symmetric
/// with s = t(S) = t; t = 1 gives a symmetric semigroup with F = 2m - 1.
NumericalSemigroup construct_delta_minus(Int m, Int t);

/// Delta(F,m) = <m> + [F+1, inf) for 2 <= m < F with m not dividing F.
/// Errc::bad_parameters on the range, Errc::divides when m | F.
NumericalSemigroup construct_delta_fm(Int frobenius, Int m);

/// Delta(e+1) \ {2(e+1) - t}: almost symmetric, maximal reduced type, type t
/// and embedding dimension e. Requires 2 <= t <= e - 1.
NumericalSemigroup exists_with_type_and_edim(Int t, Int e);

// Verdicts.

struct HalfLine {
  friend bool operator==(const HalfLine&, const HalfLine&) = default;
};
struct Symmetric {
  friend bool operator==(const Symmetric&, const Symmetric&) = default;
};
struct DeltaMinus {
  Int m;
  Int t;
  friend bool operator==(const DeltaMinus&, const DeltaMinus&) = default;
};
struct DeltaFm {
  Int frobenius;
  Int m;
  friend bool operator==(const DeltaFm&, const DeltaFm&) = default;
};
struct NotClassified {
  friend bool operator==(const NotClassified&, const NotClassified&) = default;
};

using Classification =
    std::variant<HalfLine, Symmetric, DeltaMinus, DeltaFm, NotClassified>;

inline bool is_classified(const Classification& c) {
  return !std::holds_alternative<NotClassified>(c);
}

/// "HalfLine", "Symmetric", "DeltaMinus(7,4)", "DeltaFm(4,3)" or "No".
std::string to_string(const Classification& c);

/// Parses the tagged form produced by to_string. Errc::malformed_input on
/// anything else.
Classification parse_classification(const std::string& text);

/// Almost symmetric semigroups with maximal reduced type: HalfLine if
/// m >= F, else Symmetric if t = 1, else DeltaMinus(m, 2m - F) when S is
/// literally Delta(m) \ {F} with 2 <= 2m - F < m, else No. The structural
/// case is decided by comparing membership tables, not by the predicates.
Classification classify_almost_symmetric_max_reduced(const NumericalSemigroup& s);

/// MED semigroups with maximal reduced type: HalfLine if m >= F, else
/// DeltaFm(F, m) when S is literally Delta(F, m), else No.
Classification classify_med_max_reduced(const NumericalSemigroup& s);

}  // namespace sgp
