// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: cutlab_acceptance [path-to-cutlab-cli]

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "cutlab/characterizations.hpp"
#include "cutlab/constructors.hpp"
#include "cutlab/corpus.hpp"
#include "cutlab/cut.hpp"
#include "cutlab/report.hpp"
#include "cutlab/structure.hpp"
#include "json.hpp"

using namespace cutlab;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void verdict(int number, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << detail << "\n";
  if (!ok) ++failures;
}

bool subset_of(const std::vector<std::size_t>& pi, std::set<std::size_t> allowed) {
  for (std::size_t p : pi)
    if (!allowed.contains(p)) return false;
  return true;
}

bool abelian_of_exponent(const FiniteGroup& g, std::size_t e) {
  return g.is_abelian() && structural_profile(g).exponent == e;
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

std::optional<std::string> run_command(const std::string& cmd) {
  std::FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  if (::pclose(pipe) != 0) return std::nullopt;
  return out;
}

void criterion_1() {
  const auto start = Clock::now();
  const ReportDocument doc = analyze(metacyclic(12, 2, 5));
  const double ms = ms_since(start);
  std::ostringstream d;
  d << "metacyclic(12,2,5): cut=" << doc.cut << " eppo=" << doc.eppo << " in " << ms << " ms";
  verdict(1, doc.cut && !doc.eppo && ms < 1000.0, d.str());
}

void criterion_2() {
  const auto start = Clock::now();
  const ReportDocument doc = analyze(metacyclic(9, 9, 4));
  const double ms = ms_since(start);

  const FiniteGroup g = construct(metacyclic(9, 9, 4));
  Element b = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (g.label(x) == "b") b = x;
  bool witness_ok = false;
  for (const auto& w : doc.witnesses) witness_ok |= g.conjugate(w.index, b) && w.exponent == 2;

  const Subgroup z = center(g);
  const FiniteGroup zg = subgroup_as_group(z);
  const FiniteGroup q = quotient(g, z);
  const bool structure_ok = abelian_of_exponent(zg, 3) && abelian_of_exponent(q, 3);
  const bool factors_cut = has_cut(zg) && has_cut(q);

  std::ostringstream d;
  d << "metacyclic(9,9,4): cut=" << doc.cut << " witness in class of b at j=2: " << witness_ok
    << "; Z(G), G/Z(G) abelian of exponent 3: " << structure_ok << ", both cut: " << factors_cut << " in " << ms
    << " ms";
  verdict(2, !doc.cut && witness_ok && structure_ok && factors_cut && ms < 1000.0, d.str());
}

void criterion_3(const CorpusResult& r, double ms) {
  std::size_t agree = 0, total = 0, max_order = 0;
  for (const auto& e : r.entries) {
    if (e.error) continue;
    ++total;
    agree += e.oracle_agrees;
    max_order = std::max(max_order, e.profile.order);
  }
  std::ostringstream d;
  d << agree << "/" << total << " corpus groups agree with the brute-force oracle (largest order " << max_order
    << "); single-threaded corpus run " << ms / 1000.0 << " s; " << r.errors << " errors";
  verdict(3, agree == total && total > 0 && r.errors == 0 && ms < 120000.0, d.str());
}

void criterion_4(const CorpusResult& r) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // applicable, disagreements
  const std::set<std::string> names = {"thm_odd", "thm_solvable_eppo", "thm_nilpotent", "cor_class2",
                                       "prop_class2_factor/per_element", "prop_class2_factor/central_subgroups"};
  std::size_t skipped = 0;
  for (const auto& e : r.entries)
    for (const auto& t : e.reports) {
      if (!names.contains(t.name)) continue;
      if (!t.applicable) {
        for (const auto& n : t.notes) skipped += n.starts_with("skipped");
        continue;
      }
      ++counts[t.name].first;
      if (t.agrees_with_decider != true) ++counts[t.name].second;
    }
  std::ostringstream d;
  std::size_t disagreements = 0;
  bool every_one_used = true;
  for (const auto& n : names) {
    d << n << " " << counts[n].first - counts[n].second << "/" << counts[n].first << "; ";
    disagreements += counts[n].second;
    every_one_used &= counts[n].first > 0;
  }
  d << disagreements << " disagreements, " << skipped << " skipped";
  verdict(4, disagreements == 0 && every_one_used && skipped == 0, d.str());
}

void criterion_5(const CorpusResult& r) {
  std::size_t solvable_cut = 0, odd_cut = 0, rational = 0, violations = 0;
  for (const auto& e : r.entries) {
    if (e.error) continue;
    const auto& p = e.profile;
    if (p.is_solvable && e.verdict.has_cut) {
      ++solvable_cut;
      violations += !subset_of(p.pi, {2, 3, 5, 7, 13});
    }
    if (p.order % 2 == 1 && e.verdict.has_cut) {
      ++odd_cut;
      violations += !subset_of(p.pi, {3, 7});
    }
    if (p.is_solvable && e.classification.rational) {
      ++rational;
      violations += !subset_of(p.pi, {2, 3, 5});
    }
  }
  std::ostringstream d;
  d << "checked " << solvable_cut << " solvable cut, " << odd_cut << " odd-order cut, " << rational
    << " rational solvable groups; " << violations << " violations";
  verdict(5, violations == 0 && solvable_cut > 0 && odd_cut > 0 && rational > 0, d.str());
}

void criterion_6(const CorpusResult& r) {
  std::size_t pairs = 0, bad = 0;
  for (const auto& p : r.pairs) {
    if (p.kind != "remark_two_group_sum") continue;
    ++pairs;
    bad += !p.agrees || p.predicted_cut != p.product_has_cut;
  }
  // Expected number of ordered pairs: nontrivial cut 2-groups with |H||K| <= 1024.
  std::vector<std::size_t> orders;
  for (const auto& e : r.entries)
    if (!e.error && e.profile.order > 1 && is_power_of(e.profile.order, 2) && e.verdict.has_cut)
      orders.push_back(e.profile.order);
  std::size_t expected = 0;
  for (std::size_t a : orders)
    for (std::size_t b : orders) expected += a * b <= 1024;

  const auto sm = remark_two_group_sum(construct(metacyclic(8, 2, 3)), construct(metacyclic(8, 2, 5)));
  const bool sm_oracle = decide_cut_bruteforce(construct(product({metacyclic(8, 2, 3), metacyclic(8, 2, 5)}))).has_cut;
  const auto cc = remark_two_group_sum(construct(cyclic(4)), construct(cyclic(4)));
  const bool specific = sm.predicted_failure && !sm.product_has_cut && !sm_oracle && !cc.predicted_failure &&
                        cc.product_has_cut;

  std::ostringstream d;
  d << pairs << " ordered pairs (expected " << expected << "), " << bad << " mismatches; SD16+M16 fails cut: "
    << (!sm.product_has_cut && !sm_oracle) << ", C4+C4 keeps cut: " << cc.product_has_cut;
  verdict(6, bad == 0 && pairs == expected && pairs > 0 && specific, d.str());
}

void criterion_7(const CorpusResult& r) {
  const auto check_set = real_two_group_check_set();
  std::size_t groups = 0, products = 0, failures_here = 0;
  for (const auto& e : r.entries) {
    if (e.error || !e.profile.is_nilpotent || !e.verdict.has_cut) continue;
    ++groups;
    for (const auto& [name, rg] : check_set) {
      ++products;
      failures_here += !has_cut(direct_product(e.group, rg));
    }
  }
  std::ostringstream d;
  d << groups << " nilpotent cut groups x {C2, C2xC2, D8, Q8} = " << products << " products, " << failures_here
    << " without cut";
  verdict(7, failures_here == 0 && groups > 0, d.str());
}

void criterion_8(const CorpusResult& r) {
  std::size_t groups = 0, mismatches = 0;
  for (const auto& e : r.entries) {
    if (e.error || !e.profile.is_abelian) continue;
    if (e.spec.kind() != "abelian" && e.spec.kind() != "cyclic") continue;
    ++groups;
    const std::size_t x = e.profile.exponent;
    const bool rule = 4 % x == 0 || 6 % x == 0;
    mismatches += rule != e.verdict.has_cut;
  }
  std::ostringstream d;
  d << groups << " abelian groups of order <= 64: cut iff exponent divides 4 or 6, " << mismatches << " mismatches";
  verdict(8, mismatches == 0 && groups >= 117, d.str());
}

void criterion_9(const CorpusResult& r) {
  std::size_t checks = 0, violations = 0;
  for (const auto& e : r.entries) {
    if (e.error) continue;
    // quotient recipes: the base group has cut => the quotient has cut
    if (const auto* q = std::get_if<spec::Quotient>(&e.spec.value)) {
      const bool base_cut = has_cut(construct(*q->group));
      if (base_cut) {
        ++checks;
        violations += !e.verdict.has_cut;
      }
    }
    if (!e.verdict.has_cut) continue;
    const FiniteGroup& g = e.group;
    const Subgroup z = center(g);
    ++checks;
    violations += !has_cut(subgroup_as_group(z));
    std::vector<Subgroup> normals{z};
    for (const auto& s : derived_series(g)) normals.push_back(s);
    for (const auto& s : lower_central_series(g)) normals.push_back(s);
    for (const auto& n : normals) {
      ++checks;
      violations += !has_cut(quotient(g, n));
    }
  }
  std::ostringstream d;
  d << checks << " centre/quotient checks on cut groups, " << violations << " violations";
  verdict(9, violations == 0 && checks > 0, d.str());
}

void criterion_10(const std::vector<CorpusEntry>& corpus, const std::string& cli) {
  std::string a, b, how;
  if (!cli.empty()) {
    const auto first = run_command("'" + cli + "' corpus run --format json");
    const auto second = run_command("'" + cli + "' corpus run --format json");
    if (!first || !second) {
      verdict(10, false, "could not run " + cli);
      return;
    }
    a = strip_timing(nlohmann::json::parse(*first)).dump();
    b = strip_timing(nlohmann::json::parse(*second)).dump();
    how = "two `corpus run --format json` invocations";
  } else {
    a = strip_timing(corpus_to_json(run_corpus(corpus, {.parallelism = 1}))).dump();
    b = strip_timing(corpus_to_json(run_corpus(corpus, {.parallelism = 4}))).dump();
    how = "two in-process corpus runs";
  }
  std::ostringstream d;
  d << how << " " << (a == b ? "identical" : "differ") << " modulo timing (" << a.size() << " bytes)";
  verdict(10, a == b && a.size() > 1000, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  try {
    criterion_1();
    criterion_2();

    const auto corpus = builtin_corpus();
    const auto start = Clock::now();
    const CorpusResult result = run_corpus(corpus, {.parallelism = 1});
    const double corpus_ms = ms_since(start);

    criterion_3(result, corpus_ms);
    criterion_4(result);
    criterion_5(result);
    criterion_6(result);
    criterion_7(result);
    criterion_8(result);
    criterion_9(result);
    criterion_10(corpus, cli);

    std::cout << "corpus: " << result.groups_analyzed << " groups, " << result.expectation_mismatches
              << " expectation mismatches, " << result.invariant_violations << " invariant violations\n";
    if (result.expectation_mismatches || result.invariant_violations || result.disagreements) ++failures;
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failure(s)") << "\n";
  return failures == 0 ? 0 : 1;
}
