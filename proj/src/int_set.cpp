#include "sgp/int_set.hpp"

namespace sgp {

std::string IntSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  out += '}';
  return out;
}

}  // namespace sgp
