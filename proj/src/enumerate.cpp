#include "sgp/enumerate.hpp"

#include <bit>
#include <string>

#include "sgp/classify.hpp"
#include "sgp/error.hpp"
#include "sgp/invariants.hpp"

namespace sgp {

namespace {

struct PredicateName {
  Predicate predicate;
  const char* name;
};

constexpr PredicateName kPredicates[] = {
    {Predicate::symmetric, "symmetric"},
    {Predicate::almost_symmetric, "almost_symmetric"},
    {Predicate::med, "med"},
    {Predicate::max_reduced_type, "max_reduced_type"},
};

template <class Fn>
void walk(const NumericalSemigroup& s, int max_genus, Fn&& fn) {
  if (!fn(s)) return;
  if (s.genus() >= max_genus) return;
  for (Int x : s.minimal_generators()) {
    if (x > s.frobenius()) walk(s.remove_generator(x), max_genus, fn);
  }
}

}  // namespace

Filter Filter::parse(const std::string& text) {
  Filter f;
  if (text == "none" || text.empty()) return f;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('+', start);
    if (end == std::string::npos) end = text.size();
    const std::string name = text.substr(start, end - start);
    bool known = false;
    for (const auto& p : kPredicates) {
      if (name == p.name) {
        f.require(p.predicate);
        known = true;
      }
    }
    if (!known) {
      throw Error(Errc::unknown_predicate, "UnknownPredicate: '" + name + "'");
    }
    start = end + 1;
  }
  return f;
}

bool Filter::accepts(const NumericalSemigroup& s) const {
  auto wants = [this](Predicate p) { return (bits_ & static_cast<unsigned>(p)) != 0; };
  if (wants(Predicate::symmetric) && !is_symmetric(s)) return false;
  if (wants(Predicate::almost_symmetric) && !is_almost_symmetric(s)) return false;
  if (wants(Predicate::med) && !is_med(s)) return false;
  if (wants(Predicate::max_reduced_type) && !has_maximal_reduced_type(s)) return false;
  return true;
}

std::string Filter::to_string() const {
  std::string out;
  for (const auto& p : kPredicates) {
    if (bits_ & static_cast<unsigned>(p.predicate)) {
      if (!out.empty()) out += '+';
      out += p.name;
    }
  }
  return out.empty() ? "none" : out;
}

void check_genus_bound(int max_genus, int genus_cap) {
  if (max_genus < 0) {
    throw Error(Errc::bad_parameters, "BadParameters: max genus must be >= 0");
  }
  if (max_genus > genus_cap) {
    throw Error(Errc::cap_exceeded, "CapExceeded: max genus " +
                                        std::to_string(max_genus) + " > cap " +
                                        std::to_string(genus_cap));
  }
}

void enumerate_by_genus(const EnumerationQuery& query, const Visitor& visit) {
  check_genus_bound(query.max_genus, query.genus_cap);
  walk(NumericalSemigroup(), query.max_genus, [&](const NumericalSemigroup& s) {
    if (query.filter.accepts(s)) visit(s);
    return true;
  });
}

std::vector<NumericalSemigroup> collect_by_genus(const EnumerationQuery& query) {
  std::vector<NumericalSemigroup> out;
  enumerate_by_genus(query, [&](const NumericalSemigroup& s) { out.push_back(s); });
  return out;
}

std::vector<NumericalSemigroup> enumerate_gapsets_bruteforce(int g) {
  if (g < 0) throw Error(Errc::bad_parameters, "BadParameters: genus must be >= 0");
  if (g > 10) {
    throw Error(Errc::cap_exceeded, "CapExceeded: subset oracle supports g <= 10");
  }
  if (g == 0) return {NumericalSemigroup()};

  const int n = 2 * g - 1;  // candidate gaps 1..n, bit i-1 <-> integer i
  std::vector<NumericalSemigroup> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != g) continue;
    auto is_gap = [mask](int x) { return (mask >> (x - 1)) & 1u; };
    bool closed = true;
    for (int a = 1; 2 * a <= n && closed; ++a) {
      if (is_gap(a)) continue;
      for (int b = a; a + b <= n; ++b) {
        if (!is_gap(b) && is_gap(a + b)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<bool> member(static_cast<std::size_t>(n + 2), true);
    for (int x = 1; x <= n; ++x) member[static_cast<std::size_t>(x)] = !is_gap(x);
    out.push_back(NumericalSemigroup::from_membership(std::move(member)));
  }
  return out;
}

std::vector<std::pair<int, std::uint64_t>> count_by_predicate(int max_genus,
                                                              const Filter& filter,
                                                              int genus_cap) {
  std::vector<std::pair<int, std::uint64_t>> counts;
  check_genus_bound(max_genus, genus_cap);
  for (int g = 0; g <= max_genus; ++g) counts.emplace_back(g, 0);
  enumerate_by_genus({max_genus, filter, genus_cap}, [&](const NumericalSemigroup& s) {
    ++counts[static_cast<std::size_t>(s.genus())].second;
  });
  return counts;
}

SubtreePartition::SubtreePartition(int max_genus, int split_genus)
    : max_genus_(max_genus) {
  split_genus = std::clamp(split_genus, 0, max_genus);
  walk(NumericalSemigroup(), max_genus, [&](const NumericalSemigroup& s) {
    if (s.genus() < split_genus) {
      shallow_.push_back(s);
      return true;
    }
    roots_.push_back(s);
    return false;
  });
}

void SubtreePartition::visit_unit(std::size_t unit, const Visitor& visit) const {
  if (unit == 0) {
    for (const auto& s : shallow_) visit(s);
    return;
  }
  walk(roots_.at(unit - 1), max_genus_, [&](const NumericalSemigroup& s) {
    visit(s);
    return true;
  });
}

}  // namespace sgp
