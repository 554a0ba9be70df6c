#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <thread>

#include "record.hpp"
#include "sgp/classify.hpp"
#include "sgp/enumerate.hpp"
#include "sgp/error.hpp"
#include "sgp/semigroup.hpp"
#include "sgp/verify.hpp"

namespace sgp::cli {

namespace {

// "3,5,7" -> {3,5,7}; the empty string is the empty list.
std::vector<Int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto end = std::min(text.find(',', start), text.size());
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw Error(Errc::malformed_input,
                  "malformed " + what + " '" + text + "': expected comma separated integers");
    }
    out.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Int> parse_exact(const std::string& text, std::size_t count,
                             const std::string& what) {
  auto values = parse_ints(text, what);
  if (values.size() != count) {
    throw Error(Errc::malformed_input, what + " expects " + std::to_string(count) +
                                           " integer(s), got '" + text + "'");
  }
  return values;
}

NumericalSemigroup build_family(const std::string& family, const std::string& params) {
  if (family == "delta-minus") {
    const auto v = parse_exact(params, 2, "delta-minus m,t");
    return construct_delta_minus(v[0], v[1]);
  }
  if (family == "delta-fm") {
    const auto v = parse_exact(params, 2, "delta-fm F,m");
    return construct_delta_fm(v[0], v[1]);
  }
  if (family == "half-line") {
    const auto v = parse_exact(params, 1, "half-line m");
    return construct_half_line(v[0]);
  }
  if (family == "gens") {
    const auto v = parse_ints(params, "generator list");
    return NumericalSemigroup::from_generators(v);
  }
  if (family == "gaps") {
    return NumericalSemigroup::from_gaps(IntSet(parse_ints(params, "gap list")));
  }
  throw Error(Errc::malformed_input, "unknown family '" + family + "'");
}

int genus_cap_from_env() {
  const char* raw = std::getenv("SGP_GENUS_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultGenusCap;
  const std::string text(raw);
  int cap = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || ptr != text.data() + text.size() || cap < 0) {
    throw Error(Errc::malformed_input, "SGP_GENUS_CAP must be a nonnegative integer");
  }
  return cap;
}

void print_record(const NumericalSemigroup& s, const std::string& format,
                  std::ostream& out) {
  const SemigroupRecord record = make_record(s);
  if (format == "text") {
    out << to_text(record);
  } else {
    out << serialize(record) << '\n';
  }
}

void print_report(const VerificationReport& report, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem_id;
    j["max_genus"] = report.max_genus;
    j["universe_size"] = report.universe_size;
    j["pass"] = report.passed();
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
      nlohmann::ordered_json e;
      e["gaps"] = std::vector<Int>(v.gaps.begin(), v.gaps.end());
      e["claim"] = v.claim;
      e["lhs"] = v.lhs;
      e["rhs"] = v.rhs;
      j["violations"].push_back(std::move(e));
    }
    out << j.dump() << '\n';
  } else {
    out << (report.passed() ? "PASS " : "FAIL ") << report.theorem_id
        << " max_genus=" << report.max_genus << " universe=" << report.universe_size
        << " violations=" << report.violations.size() << '\n';
    for (const auto& v : report.violations) {
      out << "  gaps=" << v.gaps.to_string() << " claim: " << v.claim
          << " lhs=" << v.lhs << " rhs=" << v.rhs << '\n';
    }
  }
  err << report.theorem_id << ": " << report.elapsed.count() << " ms\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup invariants, constructions and exhaustive checks",
               "sgp"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "Print every invariant of one semigroup");
  std::optional<std::string> gens, gap_list, delta_minus, delta_fm, half_line;
  std::string info_format = "json";
  info->add_option("--gens", gens, "Generators, e.g. 3,5,7");
  info->add_option("--gaps", gap_list, "Gap set, e.g. 1,2,4");
  info->add_option("--delta-minus", delta_minus, "m,t for Delta(m) minus {2m-t}");
  info->add_option("--delta-fm", delta_fm, "F,m for <m> plus [F+1, inf)");
  info->add_option("--half-line", half_line, "m for {0} plus [m, inf)");
  info->add_option("--format", info_format)->check(CLI::IsMember({"json", "text"}));

  auto* construct = app.add_subcommand("construct", "Build a member of a family");
  std::string family, params, construct_format = "json";
  construct->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"delta-minus", "delta-fm", "half-line"}));
  construct->add_option("params", params, "Comma separated parameters")->required();
  construct->add_option("--format", construct_format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "Write every semigroup up to a genus");
  int enum_genus = 0;
  std::string filter_text = "none", out_path;
  enumerate->add_option("--max-genus", enum_genus)->required();
  enumerate->add_option("--filter", filter_text,
                        "none, or predicates joined by '+': symmetric, "
                        "almost_symmetric, med, max_reduced_type");
  enumerate->add_option("--out", out_path, "Output file, '-' for stdout")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a claim on every semigroup");
  std::string theorem, verify_format = "text";
  int verify_genus = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  verify_cmd->add_option("theorem", theorem, "Registry id or 'all'")->required();
  verify_cmd->add_option("--max-genus", verify_genus)->required();
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) {
      std::vector<std::pair<std::string, std::string>> chosen;
      if (gens) chosen.emplace_back("gens", *gens);
      if (gap_list) chosen.emplace_back("gaps", *gap_list);
      if (delta_minus) chosen.emplace_back("delta-minus", *delta_minus);
      if (delta_fm) chosen.emplace_back("delta-fm", *delta_fm);
      if (half_line) chosen.emplace_back("half-line", *half_line);
      if (chosen.size() != 1) {
        err << "info: give exactly one of --gens, --gaps, --delta-minus, "
               "--delta-fm, --half-line\n";
        return kExitUsage;
      }
      print_record(build_family(chosen[0].first, chosen[0].second), info_format, out);
      return kExitOk;
    }

    if (construct->parsed()) {
      print_record(build_family(family, params), construct_format, out);
      return kExitOk;
    }

    if (enumerate->parsed()) {
      const EnumerationQuery query{enum_genus, Filter::parse(filter_text),
                                   genus_cap_from_env()};
      check_genus_bound(query.max_genus, query.genus_cap);
      std::ofstream file;
      std::ostream* sink = &out;
      if (out_path != "-") {
        file.open(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
          err << "enumerate: cannot open '" << out_path << "' for writing\n";
          return kExitUsage;
        }
        sink = &file;
      }
      std::uint64_t count = 0;
      enumerate_by_genus(query, [&](const NumericalSemigroup& s) {
        *sink << serialize(make_record(s)) << '\n';
        ++count;
      });
      if (file.is_open()) {
        file.close();
        if (!file) {
          err << "enumerate: write to '" << out_path << "' failed\n";
          return kExitUsage;
        }
        out << count << '\n';
      } else {
        err << count << '\n';
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const int cap = genus_cap_from_env();
      std::vector<VerificationReport> reports;
      if (theorem == "all") {
        reports = verify_all(verify_genus, cap, threads);
      } else {
        reports.push_back(verify(theorem, verify_genus, cap, threads));
      }
      bool pass = true;
      for (const auto& r : reports) {
        print_report(r, verify_format, out, err);
        pass = pass && r.passed();
      }
      return pass ? kExitOk : kExitViolations;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sgp::cli
