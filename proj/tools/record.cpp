#include "record.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "sgp/error.hpp"
#include "sgp/invariants.hpp"

namespace sgp::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_array(const IntSet& set) {
  Json out = Json::array();
  for (Int v : set) out.push_back(v);
  return out;
}

const Json& field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(Errc::malformed_input, std::string("record is missing '") + key + "'");
  }
  return *it;
}

Int get_int(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_integer()) {
    throw Error(Errc::malformed_input, std::string("'") + key + "' must be an integer");
  }
  return v.get<Int>();
}

bool get_bool(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_boolean()) {
    throw Error(Errc::malformed_input, std::string("'") + key + "' must be a boolean");
  }
  return v.get<bool>();
}

IntSet get_set(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_array()) {
    throw Error(Errc::malformed_input, std::string("'") + key + "' must be an array");
  }
  std::vector<Int> values;
  for (const Json& e : v) {
    if (!e.is_number_integer()) {
      throw Error(Errc::malformed_input,
                  std::string("'") + key + "' must hold integers");
    }
    values.push_back(e.get<Int>());
  }
  IntSet set(values);
  if (set.size() != values.size() ||
      !std::equal(values.begin(), values.end(), set.begin())) {
    throw Error(Errc::malformed_input,
                std::string("'") + key + "' must be strictly increasing");
  }
  return set;
}

Classification get_classification(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_string()) {
    throw Error(Errc::malformed_input, std::string("'") + key + "' must be a string");
  }
  return parse_classification(v.get<std::string>());
}

}  // namespace

SemigroupRecord make_record(const NumericalSemigroup& s) {
  SemigroupRecord r;
  r.gens = minimal_generators(s);
  r.gaps = gaps(s);
  r.frobenius = s.frobenius();
  r.multiplicity = s.multiplicity();
  r.genus = s.genus();
  r.pf = pseudo_frobenius(s);
  r.rpf = reduced_pf(s);
  r.type = static_cast<Int>(r.pf.size());
  r.reduced_type = static_cast<Int>(r.rpf.size());
  r.embedding_dimension = static_cast<Int>(r.gens.size());
  r.apery_m = apery_set(s, s.multiplicity()).sorted();
  r.symmetric = is_symmetric(s);
  r.almost_symmetric = is_almost_symmetric(s);
  r.med = is_med(s);
  r.max_reduced_type = has_maximal_reduced_type(s);
  r.half_line = is_half_line(s);
  r.classification_as = classify_almost_symmetric_max_reduced(s);
  r.classification_med = classify_med_max_reduced(s);
  return r;
}

std::string serialize(const SemigroupRecord& r) {
  Json j;
  j["v"] = kSchemaVersion;
  j["gens"] = to_array(r.gens);
  j["gaps"] = to_array(r.gaps);
  j["frobenius"] = r.frobenius;
  j["multiplicity"] = r.multiplicity;
  j["genus"] = r.genus;
  j["type"] = r.type;
  j["reduced_type"] = r.reduced_type;
  j["embedding_dimension"] = r.embedding_dimension;
  j["pf"] = to_array(r.pf);
  j["rpf"] = to_array(r.rpf);
  j["apery_m"] = to_array(r.apery_m);
  Json flags;
  flags["symmetric"] = r.symmetric;
  flags["almost_symmetric"] = r.almost_symmetric;
  flags["med"] = r.med;
  flags["max_reduced_type"] = r.max_reduced_type;
  flags["half_line"] = r.half_line;
  j["flags"] = std::move(flags);
  j["classification_as"] = to_string(r.classification_as);
  j["classification_med"] = to_string(r.classification_med);
  return j.dump();
}

SemigroupRecord parse_record(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::malformed_input, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::malformed_input, "record must be an object");
  const Json& version = field(j, "v");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw Error(Errc::malformed_input, "unsupported record schema version");
  }
  SemigroupRecord r;
  r.gens = get_set(j, "gens");
  r.gaps = get_set(j, "gaps");
  r.frobenius = get_int(j, "frobenius");
  r.multiplicity = get_int(j, "multiplicity");
  r.genus = get_int(j, "genus");
  r.type = get_int(j, "type");
  r.reduced_type = get_int(j, "reduced_type");
  r.embedding_dimension = get_int(j, "embedding_dimension");
  r.pf = get_set(j, "pf");
  r.rpf = get_set(j, "rpf");
  r.apery_m = get_set(j, "apery_m");
  const Json& flags = field(j, "flags");
  if (!flags.is_object()) throw Error(Errc::malformed_input, "'flags' must be an object");
  r.symmetric = get_bool(flags, "symmetric");
  r.almost_symmetric = get_bool(flags, "almost_symmetric");
  r.med = get_bool(flags, "med");
  r.max_reduced_type = get_bool(flags, "max_reduced_type");
  r.half_line = get_bool(flags, "half_line");
  r.classification_as = get_classification(j, "classification_as");
  r.classification_med = get_classification(j, "classification_med");
  return r;
}

NumericalSemigroup to_semigroup(const SemigroupRecord& record) {
  NumericalSemigroup s = NumericalSemigroup::from_gaps(record.gaps);
  if (make_record(s) != record) {
    throw Error(Errc::malformed_input,
                "record fields are inconsistent with its gap set " +
                    record.gaps.to_string());
  }
  return s;
}

std::string to_text(const SemigroupRecord& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream out;
  out << "gens:                " << r.gens.to_string() << '\n'
      << "gaps:                " << r.gaps.to_string() << '\n'
      << "frobenius:           " << r.frobenius << '\n'
      << "multiplicity:        " << r.multiplicity << '\n'
      << "genus:               " << r.genus << '\n'
      << "type:                " << r.type << '\n'
      << "reduced_type:        " << r.reduced_type << '\n'
      << "embedding_dimension: " << r.embedding_dimension << '\n'
      << "pf:                  " << r.pf.to_string() << '\n'
      << "rpf:                 " << r.rpf.to_string() << '\n'
      << "apery_m:             " << r.apery_m.to_string() << '\n'
      << "symmetric:           " << flag(r.symmetric) << '\n'
      << "almost_symmetric:    " << flag(r.almost_symmetric) << '\n'
      << "med:                 " << flag(r.med) << '\n'
      << "max_reduced_type:    " << flag(r.max_reduced_type) << '\n'
      << "half_line:           " << flag(r.half_line) << '\n'
      << "classification_as:   " << to_string(r.classification_as) << '\n'
      << "classification_med:  " << to_string(r.classification_med) << '\n';
  return out.str();
}

}  // namespace sgp::cli
