// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "record.hpp"
#include "sgp/classify.hpp"
#include "sgp/enumerate.hpp"
#include "sgp/invariants.hpp"

namespace {

using namespace sgp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

IntSet range(Int lo, Int hi) {
  std::vector<Int> v;
  for (Int x = lo; x <= hi; ++x) v.push_back(x);
  return IntSet(v);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void time_limit(Outcome& o, Clock::time_point start, double limit) {
  const double took = seconds_since(start);
  std::ostringstream msg;
  msg << "runtime " << took << " s exceeds " << limit << " s";
  o.require(took < limit, msg.str());
}

// 1. info --delta-minus 7,4, exact values, under 10 ms.
Outcome delta_minus_example() {
  Outcome o;
  cli({"info", "--delta-minus", "7,4"});  // warm-up
  const auto start = Clock::now();
  const auto r = cli({"info", "--delta-minus", "7,4"});
  time_limit(o, start, 0.010);
  o.require(r.code == 0, "exit code");
  const auto rec = cli::parse_record(r.out.substr(0, r.out.find('\n')));
  o.require(rec.pf == IntSet{4, 5, 6, 10}, "PF");
  o.require(rec.rpf == IntSet{4, 5, 6, 10}, "rPF");
  o.require(rec.frobenius == 10, "F");
  o.require(rec.multiplicity == 7 && rec.genus == 7, "m = g = 7");
  o.require(rec.type == 4 && rec.reduced_type == 4, "t = s = 4");
  o.require(rec.almost_symmetric, "almost symmetric");
  o.require(rec.embedding_dimension == 6, "e = 6");
  return o;
}

// 2. Every Delta(m) \ {2m-t} with 2 <= t < m <= 100, plus the t = 1 member.
Outcome formula_sweep() {
  Outcome o;
  const auto start = Clock::now();
  for (Int m = 3; m <= 100 && o.ok; ++m) {
    for (Int t = 2; t < m && o.ok; ++t) {
      const auto s = construct_delta_minus(m, t);
      const std::string at = " at m=" + std::to_string(m) + ", t=" + std::to_string(t);
      o.require(s.frobenius() == 2 * m - t, "F" + at);
      o.require(s.multiplicity() == m && s.genus() == m, "m = g" + at);
      std::vector<Int> pf = {2 * m - t};
      for (Int x = m - t + 1; x <= m - 1; ++x) pf.push_back(x);
      const IntSet expected_pf(pf);
      o.require(pseudo_frobenius(s) == expected_pf, "PF" + at);
      o.require(reduced_pf(s) == expected_pf, "rPF" + at);
      o.require(type(s) == t && reduced_type(s) == t, "s = t" + at);
      o.require(is_almost_symmetric(s), "almost symmetric" + at);
      std::vector<Int> ap{0}, msg{m};
      if (t == m - 1) {
        for (Int x = m + 2; x <= 2 * m - 1; ++x) ap.push_back(x), msg.push_back(x);
        ap.push_back(2 * m + 1);
        msg.push_back(2 * m + 1);
      } else {
        for (Int x = m + 1; x <= 2 * m - 1; ++x) {
          if (x != 2 * m - t) ap.push_back(x), msg.push_back(x);
        }
        ap.push_back(3 * m - t);
      }
      o.require(apery_set(s, m).sorted() == IntSet(ap), "Apery set" + at);
      o.require(minimal_generators(s) == IntSet(msg), "msg" + at);
      o.require(embedding_dimension(s) == (t == m - 1 ? m : m - 1), "e" + at);
    }
  }
  for (Int m = 3; m <= 100 && o.ok; ++m) {
    const auto s = construct_delta_minus(m, 1);
    const std::string at = " at t=1, m=" + std::to_string(m);
    o.require(is_symmetric(s) && s.frobenius() == 2 * m - 1, "symmetric, F" + at);
    IntSet ap = range(m + 1, 2 * m - 2);
    std::vector<Int> apv(ap.begin(), ap.end());
    apv.push_back(0);
    apv.push_back(3 * m - 1);
    o.require(apery_set(s, m).sorted() == IntSet(apv), "Apery set" + at);
    o.require(minimal_generators(s) == range(m, 2 * m - 2), "msg" + at);
    o.require(embedding_dimension(s) == m - 1, "e" + at);
  }
  time_limit(o, start, 5.0);
  return o;
}

// 3. Delta(F, m) for 2 <= m < F <= 100, m not dividing F.
Outcome med_sweep() {
  Outcome o;
  const auto start = Clock::now();
  for (Int f = 3; f <= 100 && o.ok; ++f) {
    for (Int m = 2; m < f && o.ok; ++m) {
      if (f % m == 0) continue;
      const auto s = construct_delta_fm(f, m);
      const std::string at = " at F=" + std::to_string(f) + ", m=" + std::to_string(m);
      o.require(is_med(s), "MED" + at);
      o.require(has_maximal_reduced_type(s), "maximal reduced type" + at);
      o.require(reduced_type(s) == m - 1, "s = m - 1" + at);
      o.require(f + 1 <= second_generator(s), "F + 1 <= n2" + at);
    }
  }
  time_limit(o, start, 5.0);
  return o;
}

// 4. verify all --max-genus 18.
Outcome exhaustive_verification() {
  Outcome o;
  const auto start = Clock::now();
  const auto r = cli({"verify", "all", "--max-genus", "18", "--format", "json"});
  time_limit(o, start, 60.0);
  o.require(r.code == 0, "exit code " + std::to_string(r.code));
  std::istringstream in(r.out);
  std::vector<std::string> ids;
  for (std::string line; std::getline(in, line);) {
    const auto j = nlohmann::json::parse(line);
    ids.push_back(j["theorem"].get<std::string>());
    o.require(j["violations"].empty(), ids.back() + " has violations");
    o.require(j["universe_size"].get<std::uint64_t>() > 0, ids.back() + " checked nothing");
  }
  o.require(ids == std::vector<std::string>{"pf-oracle", "genus-inequality", "chain",
                                            "rpf-shift", "gap-window", "med-type",
                                            "main-theorem", "trichotomy", "type-edim",
                                            "med-equiv", "med-theorem"},
            "registry incomplete");
  return o;
}

// 5. Tree counts vs the gap-subset brute force, g <= 8.
Outcome enumeration_oracle() {
  Outcome o;
  const auto start = Clock::now();
  const auto tree = count_by_predicate(8, Filter{});
  std::vector<std::uint64_t> from_tree, from_library_oracle, from_test_oracle;
  for (int g = 0; g <= 8; ++g) {
    from_tree.push_back(tree[static_cast<std::size_t>(g)].second);
    from_library_oracle.push_back(enumerate_gapsets_bruteforce(g).size());
    from_test_oracle.push_back(oracle::gapsets_of_genus(g).size());
  }
  o.require(from_tree == from_library_oracle, "tree vs enumerate_gapsets_bruteforce");
  o.require(from_tree == from_test_oracle, "tree vs independent subset scan");
  o.require(from_tree == std::vector<std::uint64_t>{1, 1, 2, 4, 7, 12, 23, 39, 67},
            "counts 1,1,2,4,7,12,23,39,67");
  time_limit(o, start, 10.0);
  return o;
}

// 6. exists_with_type_and_edim for 2 <= t <= e - 1, e <= 50.
Outcome existence_corollary() {
  Outcome o;
  const auto start = Clock::now();
  for (Int e = 3; e <= 50 && o.ok; ++e) {
    for (Int t = 2; t <= e - 1 && o.ok; ++t) {
      const auto s = exists_with_type_and_edim(t, e);
      const std::string at = " at t=" + std::to_string(t) + ", e=" + std::to_string(e);
      o.require(type(s) == t, "t(S)" + at);
      o.require(embedding_dimension(s) == e, "e(S)" + at);
      o.require(is_almost_symmetric(s), "almost symmetric" + at);
      o.require(has_maximal_reduced_type(s), "maximal reduced type" + at);
    }
  }
  time_limit(o, start, 2.0);
  return o;
}

// 7. Serialize/parse identity on genus <= 10; repeated commands are byte-identical.
Outcome round_trip_and_determinism() {
  Outcome o;
  enumerate_by_genus({10}, [&](const NumericalSemigroup& s) {
    if (!o.ok) return;
    const auto rec = cli::make_record(s);
    const auto line = cli::serialize(rec);
    const auto back = cli::parse_record(line);
    o.require(back == rec && cli::to_semigroup(back) == s && cli::serialize(back) == line,
              "round trip failed for gaps " + gaps(s).to_string());
  });
  const std::vector<std::vector<std::string>> commands = {
      {"info", "--delta-minus", "7,4"},
      {"info", "--gaps", "1,2,4", "--format", "text"},
      {"construct", "delta-fm", "4,3"},
      {"enumerate", "--max-genus", "7", "--out", "-"},
      {"verify", "all", "--max-genus", "10"},
      {"verify", "med-theorem", "--max-genus", "10", "--format", "json"},
  };
  for (const auto& cmd : commands) {
    const auto a = cli(cmd);
    const auto b = cli(cmd);
    o.require(a.code == b.code && a.out == b.out, "output differs for " + cmd[0]);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 info --delta-minus 7,4", delta_minus_example},
      {"2 Delta(m)\\{2m-t} formula sweep m<=100", formula_sweep},
      {"3 Delta(F,m) MED sweep F<=100", med_sweep},
      {"4 verify all --max-genus 18", exhaustive_verification},
      {"5 tree vs subset oracle g<=8", enumeration_oracle},
      {"6 existence corollary e<=50", existence_corollary},
      {"7 round trip and determinism", round_trip_and_determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double took = seconds_since(start);
    std::cout << (outcome.ok ? "PASS  " : "FAIL  ") << name << "  (" << took << " s)";
    if (!outcome.ok) std::cout << "  " << outcome.detail;
    std::cout << '\n';
    failures += outcome.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
