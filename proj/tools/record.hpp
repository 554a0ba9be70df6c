#pragma once

#include <string>

#include "sgp/classify.hpp"
#include "sgp/int_set.hpp"
#include "sgp/semigroup.hpp"

namespace sgp::cli {

inline constexpr const char* kSchemaVersion = "v1";

/// Every invariant of one semigroup, as printed by `info`, `construct` and
/// `enumerate`.
struct SemigroupRecord {
  IntSet gens;
  IntSet gaps;
  Int frobenius = -1;
  Int multiplicity = 1;
  Int genus = 0;
  Int type = 1;
  Int reduced_type = 1;
  Int embedding_dimension = 1;
  IntSet pf;
  IntSet rpf;
  IntSet apery_m;
  bool symmetric = true;
  bool almost_symmetric = true;
  bool med = true;
  bool max_reduced_type = true;
  bool half_line = true;
  Classification classification_as = HalfLine{};
  Classification classification_med = HalfLine{};

  friend bool operator==(const SemigroupRecord&, const SemigroupRecord&) = default;
};

SemigroupRecord make_record(const NumericalSemigroup& s);

/**
 * One-line JSON object. Keys always appear in this order:
 *   v, gens, gaps, frobenius, multiplicity, genus, type, reduced_type,
 *   embedding_dimension, pf, rpf, apery_m, flags{symmetric,
 *   almost_symmetric, med, max_reduced_type, half_line},
 *   classification_as, classification_med
 * Sets are sorted arrays; the Frobenius number of N is written as -1.
 */
std::string serialize(const SemigroupRecord& record);

/// Inverse of serialize. Errc::malformed_input on bad JSON, a wrong schema
/// version, missing keys or wrongly typed values.
SemigroupRecord parse_record(const std::string& line);

/// Rebuilds the semigroup from the record's gaps and checks that every other
/// field matches what it recomputes (Errc::malformed_input if not).
NumericalSemigroup to_semigroup(const SemigroupRecord& record);

/// Human-readable multi-line form.
std::string to_text(const SemigroupRecord& record);

}  // namespace sgp::cli
