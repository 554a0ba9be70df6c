#include "sgp/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "sgp/classify.hpp"
#include "sgp/error.hpp"
#include "sgp/invariants.hpp"

namespace sgp {

namespace {

std::string show(bool v) { return v ? "true" : "false"; }
std::string show(Int v) { return std::to_string(v); }
std::string show(const IntSet& v) { return v.to_string(); }

class Checker {
 public:
  Checker(const NumericalSemigroup& s, std::vector<Violation>& out)
      : s_(s), out_(out) {}

  template <class T>
  void equal(const char* claim, const T& lhs, const T& rhs) {
    if (!(lhs == rhs)) out_.push_back({gaps(s_), claim, show(lhs), show(rhs)});
  }

  void holds(const char* claim, bool ok, const std::string& lhs,
             const std::string& rhs) {
    if (!ok) out_.push_back({gaps(s_), claim, lhs, rhs});
  }

 private:
  const NumericalSemigroup& s_;
  std::vector<Violation>& out_;
};

bool almost_symmetric_max_reduced(const NumericalSemigroup& s) {
  return is_almost_symmetric(s) && has_maximal_reduced_type(s);
}

bool med_max_reduced(const NumericalSemigroup& s) {
  return is_med(s) && has_maximal_reduced_type(s);
}

// S = Delta(m) \ {2m - t} for some 2 <= t < m, by trying every t.
bool is_some_delta_minus(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  for (Int t = 2; t < m; ++t) {
    if (s == construct_delta_minus(m, t)) return true;
  }
  return false;
}

// S = Delta(F, k) for some 2 <= k < F with k not dividing F. Equal sets have
// equal Frobenius numbers, so only F = F(S) can match.
bool is_some_delta_fm(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  for (Int k = 2; k < f; ++k) {
    if (f % k != 0 && s == construct_delta_fm(f, k)) return true;
  }
  return false;
}

struct Theorem {
  TheoremInfo info;
  std::function<bool(const NumericalSemigroup&)> applies;
  std::function<void(const NumericalSemigroup&, Checker&)> check;
};

bool always(const NumericalSemigroup&) { return true; }
bool not_full(const NumericalSemigroup& s) { return !s.is_full(); }

const std::vector<Theorem>& theorems() {
  static const std::vector<Theorem> registry = {
      {{"pf-oracle", "PF(S) via Apery maximals equals the definitional PF(S)"},
       always,
       [](const NumericalSemigroup& s, Checker& c) {
         c.equal("PF(S) = PF_bruteforce(S)", pseudo_frobenius(s), pf_bruteforce(s));
       }},
      {{"genus-inequality", "2 g(S) >= F(S) + t(S)"},
       always,
       [](const NumericalSemigroup& s, Checker& c) {
         const Int lhs = 2 * s.genus();
         const Int rhs = s.frobenius() + type(s);
         c.holds("2g >= F + t", lhs >= rhs, show(lhs), show(rhs));
       }},
      {{"chain", "S != N: 1 <= s(S) <= t(S) <= m(S) - 1, F(S) in rPF(S) subset PF(S)"},
       not_full,
       [](const NumericalSemigroup& s, Checker& c) {
         const IntSet pf = pseudo_frobenius(s);
         const IntSet rpf = reduced_pf(s);
         const Int red = static_cast<Int>(rpf.size());
         const Int t = static_cast<Int>(pf.size());
         c.holds("1 <= s", red >= 1, show(red), "1");
         c.holds("s <= t", red <= t, show(red), show(t));
         c.holds("t <= m - 1", t <= s.multiplicity() - 1, show(t),
                 show(s.multiplicity() - 1));
         c.holds("F in rPF", rpf.contains(s.frobenius()), show(rpf),
                 show(s.frobenius()));
         c.holds("rPF subset PF", pf.includes(rpf), show(rpf), show(pf));
       }},
      {{"rpf-shift", "{w in Ap(S,m) : w >= F+1} = rPF(S) + m and these w are maximal"},
       always,
       [](const NumericalSemigroup& s, Checker& c) {
         const Int m = s.multiplicity();
         const AperySet ap = apery_set(s, m);
         std::vector<Int> high;
         for (Int w : ap.elements) {
           if (w >= s.frobenius() + 1) high.push_back(w);
         }
         const IntSet high_set(std::move(high));
         c.equal("{w >= F+1} = rPF + m", high_set, reduced_pf(s).shifted(m));
         const IntSet maximals = apery_maximals(s, m);
         c.holds("{w >= F+1} subset Maximals", maximals.includes(high_set),
                 show(high_set), show(maximals));
       }},
      {{"gap-window", "m < F < 2m: every gap g with m < g <= F lies in rPF(S)"},
       [](const NumericalSemigroup& s) {
         return s.multiplicity() < s.frobenius() &&
                s.frobenius() < 2 * s.multiplicity();
       },
       [](const NumericalSemigroup& s, Checker& c) {
         const IntSet rpf = reduced_pf(s);
         for (Int g = s.multiplicity() + 1; g <= s.frobenius(); ++g) {
           if (!s.contains(g)) {
             c.holds("gap in (m, F] lies in rPF", rpf.contains(g), show(g), show(rpf));
           }
         }
       }},
      {{"med-type", "S != N: e(S) = m(S) iff t(S) = m(S) - 1"},
       not_full,
       [](const NumericalSemigroup& s, Checker& c) {
         const Int m = s.multiplicity();
         c.equal("MED <=> t = m - 1", is_med(s), type(s) == m - 1);
       }},
      {{"main-theorem",
        "S non-symmetric, m < F: almost symmetric with maximal reduced type iff "
        "S = Delta(m) \\ {2m - t} with 2 <= t < m"},
       [](const NumericalSemigroup& s) {
         return s.multiplicity() < s.frobenius() && !is_symmetric(s);
       },
       [](const NumericalSemigroup& s, Checker& c) {
         c.equal("AS and s = t <=> S = Delta(m) \\ {2m - t}",
                 almost_symmetric_max_reduced(s), is_some_delta_minus(s));
       }},
      {{"trichotomy",
        "almost symmetric with maximal reduced type iff half-line, symmetric, or "
        "Delta(m) \\ {2m - t}"},
       always,
       [](const NumericalSemigroup& s, Checker& c) {
         const bool lhs = almost_symmetric_max_reduced(s);
         const bool rhs = is_half_line(s) || is_symmetric(s) || is_some_delta_minus(s);
         c.equal("AS and s = t <=> half-line or symmetric or Delta-minus", lhs, rhs);
         const Classification verdict = classify_almost_symmetric_max_reduced(s);
         c.holds("classifier agrees", is_classified(verdict) == lhs, to_string(verdict),
                 show(lhs));
       }},
      {{"type-edim", "S != N almost symmetric with maximal reduced type: t(S) <= e(S) - 1"},
       [](const NumericalSemigroup& s) {
         return !s.is_full() && almost_symmetric_max_reduced(s);
       },
       [](const NumericalSemigroup& s, Checker& c) {
         const Int t = type(s);
         const Int e = embedding_dimension(s);
         c.holds("t <= e - 1", t <= e - 1, show(t), show(e - 1));
       }},
      {{"med-equiv", "S != N: s(S) = m(S) - 1 iff MED with maximal reduced type iff F + 1 <= n2"},
       not_full,
       [](const NumericalSemigroup& s, Checker& c) {
         const bool one = reduced_type(s) == s.multiplicity() - 1;
         const bool two = med_max_reduced(s);
         const bool three = s.frobenius() + 1 <= second_generator(s);
         c.equal("s = m - 1 <=> MED and s = t", one, two);
         c.equal("MED and s = t <=> F + 1 <= n2", two, three);
       }},
      {{"med-theorem",
        "MED with maximal reduced type iff half-line or Delta(F, m); for m < F iff "
        "S = Delta(F, m) with m not dividing F"},
       always,
       [](const NumericalSemigroup& s, Checker& c) {
         const bool lhs = med_max_reduced(s);
         if (s.multiplicity() < s.frobenius()) {
           c.equal("m < F: MED and s = t <=> S = Delta(F, m)", lhs, is_some_delta_fm(s));
         }
         c.equal("MED and s = t <=> half-line or Delta(F, m)", lhs,
                 is_half_line(s) || is_some_delta_fm(s));
         const Classification verdict = classify_med_max_reduced(s);
         c.holds("classifier agrees", is_classified(verdict) == lhs, to_string(verdict),
                 show(lhs));
       }},
  };
  return registry;
}

struct Partial {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
};

VerificationReport run(const Theorem& theorem, int max_genus, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const SubtreePartition partition(max_genus, std::min(max_genus, 8));
  const auto partials = map_units<Partial>(
      partition, threads, [&](const NumericalSemigroup& s, Partial& p) {
        if (!theorem.applies(s)) return;
        ++p.checked;
        Checker checker(s, p.violations);
        theorem.check(s, checker);
      });

  VerificationReport report;
  report.theorem_id = theorem.info.id;
  report.max_genus = max_genus;
  for (const auto& p : partials) {
    report.universe_size += p.checked;
    report.violations.insert(report.violations.end(), p.violations.begin(),
                             p.violations.end());
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& t : theorems()) out.push_back(t.info);
    return out;
  }();
  return infos;
}

VerificationReport verify(const std::string& theorem_id, int max_genus,
                          int genus_cap, unsigned threads) {
  const auto& all = theorems();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const Theorem& t) { return t.info.id == theorem_id; });
  if (it == all.end()) {
    throw Error(Errc::unknown_theorem, "UnknownTheorem: '" + theorem_id + "'");
  }
  check_genus_bound(max_genus, genus_cap);
  return run(*it, max_genus, threads);
}

std::vector<VerificationReport> verify_all(int max_genus, int genus_cap,
                                           unsigned threads) {
  check_genus_bound(max_genus, genus_cap);
  std::vector<VerificationReport> out;
  for (const auto& t : theorems()) out.push_back(run(t, max_genus, threads));
  return out;
}

}  // namespace sgp
