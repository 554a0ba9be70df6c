#include "sgp/classify.hpp"

#include <charconv>
#include <string>
#include <type_traits>

#include "sgp/error.hpp"
#include "sgp/invariants.hpp"

namespace sgp {

namespace {

void require_window(Int value) {
  if (value > kMaxWindow) {
    throw Error(Errc::overflow,
                std::to_string(value) + " exceeds the supported window");
  }
}

// "(a,b)" -> {a, b}
bool parse_pair(std::string_view text, Int& a, Int& b) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') return false;
  text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return false;
  const auto first = text.substr(0, comma);
  const auto second = text.substr(comma + 1);
  auto r1 = std::from_chars(first.data(), first.data() + first.size(), a);
  auto r2 = std::from_chars(second.data(), second.data() + second.size(), b);
  return r1.ec == std::errc{} && r1.ptr == first.data() + first.size() &&
         r2.ec == std::errc{} && r2.ptr == second.data() + second.size();
}

}  // namespace

bool is_symmetric(const NumericalSemigroup& s) { return type(s) == 1; }

bool is_almost_symmetric(const NumericalSemigroup& s) {
  return 2 * s.genus() == s.frobenius() + type(s);
}

bool is_med(const NumericalSemigroup& s) {
  return embedding_dimension(s) == s.multiplicity();
}

bool has_maximal_reduced_type(const NumericalSemigroup& s) {
  return reduced_type(s) == type(s);
}

bool is_half_line(const NumericalSemigroup& s) {
  return s.multiplicity() >= s.frobenius();
}

NumericalSemigroup construct_half_line(Int m) {
  if (m < 1) {
    throw Error(Errc::bad_parameters,
                "BadParameters: half-line needs m >= 1, got " + std::to_string(m));
  }
  require_window(m);
  std::vector<bool> member(static_cast<std::size_t>(m + 1), false);
  member[0] = true;
  member[static_cast<std::size_t>(m)] = true;
  return NumericalSemigroup::from_membership(std::move(member));
}

NumericalSemigroup construct_delta_minus(Int m, Int t) {
  if (t < 1 || t >= m) {
    throw Error(Errc::bad_parameters, "BadParameters: need 1 <= t < m, got m=" +
                                          std::to_string(m) +
                                          ", t=" + std::to_string(t));
  }
  require_window(2 * m);
  const Int removed = 2 * m - t;
  std::vector<bool> member(static_cast<std::size_t>(removed + 2), true);
  for (Int x = 1; x < m; ++x) member[static_cast<std::size_t>(x)] = false;
  member[static_cast<std::size_t>(removed)] = false;
  return NumericalSemigroup::from_membership(std::move(member));
}

NumericalSemigroup construct_delta_fm(Int frobenius, Int m) {
  if (m < 2 || m >= frobenius) {
    throw Error(Errc::bad_parameters, "BadParameters: need 2 <= m < F, got F=" +
                                          std::to_string(frobenius) +
                                          ", m=" + std::to_string(m));
  }
  if (frobenius % m == 0) {
    throw Error(Errc::divides, "Divides: " + std::to_string(m) + " divides " +
                                   std::to_string(frobenius));
  }
  require_window(frobenius);
  std::vector<bool> member(static_cast<std::size_t>(frobenius + 2), true);
  for (Int x = 1; x <= frobenius; ++x) {
    member[static_cast<std::size_t>(x)] = x % m == 0;
  }
  return NumericalSemigroup::from_membership(std::move(member));
}

NumericalSemigroup exists_with_type_and_edim(Int t, Int e) {
  if (t < 2 || t > e - 1) {
    throw Error(Errc::bad_parameters, "BadParameters: need 2 <= t <= e-1, got t=" +
                                          std::to_string(t) +
                                          ", e=" + std::to_string(e));
  }
  return construct_delta_minus(e + 1, t);
}

std::string to_string(const Classification& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfLine>) {
          return "HalfLine";
        } else if constexpr (std::is_same_v<T, Symmetric>) {
          return "Symmetric";
        } else if constexpr (std::is_same_v<T, DeltaMinus>) {
          return "DeltaMinus(" + std::to_string(v.m) + "," + std::to_string(v.t) + ")";
        } else if constexpr (std::is_same_v<T, DeltaFm>) {
          return "DeltaFm(" + std::to_string(v.frobenius) + "," + std::to_string(v.m) + ")";
        } else {
          return "No";
        }
      },
      c);
}

Classification parse_classification(const std::string& text) {
  if (text == "HalfLine") return HalfLine{};
  if (text == "Symmetric") return Symmetric{};
  if (text == "No") return NotClassified{};
  Int a = 0;
  Int b = 0;
  const std::string_view view(text);
  if (view.starts_with("DeltaMinus") && parse_pair(view.substr(10), a, b)) {
    return DeltaMinus{a, b};
  }
  if (view.starts_with("DeltaFm") && parse_pair(view.substr(7), a, b)) {
    return DeltaFm{a, b};
  }
  throw Error(Errc::malformed_input, "unrecognized classification '" + text + "'");
}

Classification classify_almost_symmetric_max_reduced(const NumericalSemigroup& s) {
  if (is_half_line(s)) return HalfLine{};
  if (is_symmetric(s)) return Symmetric{};
  const Int m = s.multiplicity();
  const Int t = 2 * m - s.frobenius();
  if (t >= 2 && t < m && s == construct_delta_minus(m, t)) return DeltaMinus{m, t};
  return NotClassified{};
}

Classification classify_med_max_reduced(const NumericalSemigroup& s) {
  if (is_half_line(s)) return HalfLine{};
  const Int m = s.multiplicity();
  const Int f = s.frobenius();
  if (f % m != 0 && s == construct_delta_fm(f, m)) return DeltaFm{f, m};
  return NotClassified{};
}

}  // namespace sgp
