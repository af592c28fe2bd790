#include "cutlab/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "cutlab/error.hpp"

namespace cutlab {

namespace {

std::string padded(std::size_t n) { return n < 10 ? "0" + std::to_string(n) : std::to_string(n); }

// Structural and expectation tags of an abelian group from its invariant
// factors. The cut expectation restates the classification of abelian groups
// with only trivial central units: exponent dividing 4 or 6.
std::set<std::string> abelian_tags(const std::vector<std::size_t>& factors) {
  std::size_t order = 1, exponent = 1;
  for (std::size_t f : factors) {
    order *= f;
    exponent = std::lcm(exponent, f);
  }
  std::set<std::string> tags{"abelian", "nilpotent"};
  if (order % 2 == 1) tags.insert("odd-order");
  if (is_prime_power(order)) tags.insert("eppo");
  if (order > 1 && is_power_of(order, 2)) tags.insert("2-group");
  if (order > 1 && is_power_of(order, 3)) tags.insert("3-group");
  const bool cut = 4 % exponent == 0 || 6 % exponent == 0;
  tags.insert(cut ? "cut-expected" : "noncut-expected");
  if (exponent <= 2) tags.insert("rational-expected");
  return tags;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
}

bool subset_of(const std::vector<std::size_t>& primes, std::initializer_list<std::size_t> allowed) {
  return std::all_of(primes.begin(), primes.end(), [&](std::size_t p) {
    return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
  });
}

// H_x contains 1, is closed under multiplication, and together with the
// coset reaching x^-1 covers the units modulo o(x) exactly when x passes.
void check_residues(const ClassResidues& r, bool failed, std::vector<std::string>& violations) {
  const std::size_t m = r.order;
  const auto& h = r.conjugate_residues;
  const std::string where = "residues of element " + std::to_string(r.representative);
  if (m == 1) return;
  if (!std::binary_search(h.begin(), h.end(), std::size_t{1})) violations.push_back(where + " miss 1");
  for (std::size_t a : h)
    for (std::size_t b : h)
      if (!std::binary_search(h.begin(), h.end(), a * b % m))
        violations.push_back(where + " not closed under multiplication");
  std::size_t units = 0;
  for (std::size_t j = 1; j < m; ++j) units += std::gcd(j, m) == 1;
  std::set<std::size_t> covered(h.begin(), h.end());
  if (r.inverse_residue)
    for (std::size_t a : h) covered.insert(a * *r.inverse_residue % m);
  if ((covered.size() == units) == failed) violations.push_back(where + " disagree with the witness list");
}

}  // namespace

std::vector<std::vector<std::size_t>> abelian_invariant_factors(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t rest) {
    if (rest == 1) {
      out.push_back(acc);
      return;
    }
    const std::size_t start = acc.empty() ? 2 : acc.back();
    for (std::size_t d = start; d <= rest; ++d) {
      if (rest % d != 0 || (!acc.empty() && d % acc.back() != 0)) continue;
      acc.push_back(d);
      rec(rest / d);
      acc.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> corpus;
  auto add = [&](std::string id, GroupSpec spec, std::set<std::string> tags) {
    corpus.push_back({std::move(id), std::move(spec), std::move(tags)});
  };

  for (std::size_t n = 1; n <= 36; ++n) add("cyclic-" + padded(n), cyclic(n), abelian_tags({n}));
  for (std::size_t n = 2; n <= 64; ++n) {
    for (auto& factors : abelian_invariant_factors(n)) {
      if (factors.size() == 1 && n <= 36) continue;
      std::string id = "abelian";
      for (std::size_t k = 0; k < factors.size(); ++k) id += (k ? "x" : "-") + padded(factors[k]);
      auto tags = abelian_tags(factors);
      add(std::move(id), abelian(std::move(factors)), std::move(tags));
    }
  }

  const GroupSpec noncut81 = metacyclic(9, 9, 4);
  add("paper-cut-24", metacyclic(12, 2, 5), {"paper-example", "cut-expected"});
  add("paper-noncut-81", noncut81,
      {"paper-example", "odd-order", "eppo", "nilpotent", "3-group", "noncut-expected"});
  // Centre <a^3, b^3>; a^3 has index 3 and b^3 index 27.
  add("paper-noncut-81-mod-center", quotient_of(noncut81, {3, 27}),
      {"paper-example", "odd-order", "eppo", "nilpotent", "3-group", "abelian", "cut-expected"});
  // [b, G] = <a^3>; the quotient is abelian of type C9 x C3.
  add("paper-noncut-81-mod-a3", quotient_of(noncut81, {3}),
      {"odd-order", "eppo", "nilpotent", "3-group", "abelian", "noncut-expected"});

  add("metacyclic-03-02-2", metacyclic(3, 2, 2), {"eppo", "cut-expected", "rational-expected"});
  add("dihedral-08", metacyclic(4, 2, 3),
      {"eppo", "nilpotent", "2-group", "cut-expected", "rational-expected"});
  add("semidihedral-16", metacyclic(8, 2, 3), {"eppo", "nilpotent", "2-group", "cut-expected"});
  add("modular-16", metacyclic(8, 2, 5), {"eppo", "nilpotent", "2-group", "cut-expected"});
  add("frobenius-20", metacyclic(5, 4, 2), {"eppo", "cut-expected"});
  add("frobenius-21", metacyclic(7, 3, 2), {"odd-order", "eppo", "cut-expected"});
  add("frobenius-42", metacyclic(7, 6, 3), {"cut-expected"});
  add("metacyclic-13-03-3", metacyclic(13, 3, 3), {"odd-order", "eppo", "noncut-expected"});
  add("metacyclic-09-03-4", metacyclic(9, 3, 4),
      {"odd-order", "eppo", "nilpotent", "3-group", "cut-expected"});
  add("quaternion-08", dicyclic(2),
      {"eppo", "nilpotent", "2-group", "cut-expected", "rational-expected"});
  add("quaternion-16", dicyclic(4), {"eppo", "nilpotent", "2-group", "noncut-expected"});
  add("quaternion-08-mod-center", quotient_of(dicyclic(2), {2}),
      {"eppo", "nilpotent", "2-group", "abelian", "cut-expected", "rational-expected"});
  add("heisenberg-03", heisenberg(3), {"odd-order", "eppo", "nilpotent", "3-group", "cut-expected"});
  add("heisenberg-05", heisenberg(5), {"odd-order", "eppo", "nilpotent", "noncut-expected"});
  add("heisenberg-07", heisenberg(7), {"odd-order", "eppo", "nilpotent", "noncut-expected"});
  // The centre of heisenberg(3) is generated by [0,0,1], index 1.
  add("heisenberg-03-mod-center", quotient_of(heisenberg(3), {1}),
      {"odd-order", "eppo", "nilpotent", "3-group", "abelian", "cut-expected"});
  add("symmetric-3", symmetric(3), {"eppo", "cut-expected", "rational-expected"});
  add("symmetric-4", symmetric(4), {"eppo", "cut-expected", "rational-expected"});
  add("alternating-4", permutation_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}), {"eppo", "cut-expected"});
  add("table-klein-4", table_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}),
      {"abelian", "eppo", "nilpotent", "2-group", "cut-expected", "rational-expected"});
  add("product-q8-c3", product({dicyclic(2), cyclic(3)}), {"nilpotent", "cut-expected"});
  add("product-d8-c3", product({metacyclic(4, 2, 3), cyclic(3)}), {"nilpotent", "cut-expected"});
  add("product-c4-c4", product({cyclic(4), cyclic(4)}),
      {"paper-example", "abelian", "eppo", "nilpotent", "2-group", "cut-expected"});
  add("product-sd16-m16", product({metacyclic(8, 2, 3), metacyclic(8, 2, 5)}),
      {"paper-example", "eppo", "nilpotent", "2-group", "noncut-expected"});
  add("product-heis3-heis3", product({heisenberg(3), heisenberg(3)}),
      {"odd-order", "eppo", "nilpotent", "3-group", "cut-expected"});

  std::sort(corpus.begin(), corpus.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return corpus;
}

EntryResult analyze_entry(const CorpusEntry& entry, const CorpusConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  EntryResult r;
  r.id = entry.id;
  r.spec = entry.spec;
  r.tags = entry.tags;
  try {
    r.group = construct(entry.spec, config.max_order);
    const FiniteGroup& g = r.group;
    r.profile = structural_profile(g);
    r.verdict = decide_cut(g, {.record_residues = true});
    r.classification = classify(g, r.verdict);
    const bool cut = r.verdict.has_cut;

    CharacterizationOptions options{config.max_order, config.center_subgroup_limit};
    r.reports = verify_equivalences(GroupFacts{g, r.profile, cut}, options);

    // Independent oracle: same verdict, and every fast-path witness fails there too.
    const CutVerdict oracle = decide_cut_bruteforce(g);
    r.oracle_agrees = oracle.has_cut == cut;
    for (const auto& w : r.verdict.witnesses) {
      const bool found = std::any_of(oracle.witnesses.begin(), oracle.witnesses.end(),
                                     [&](const CutWitness& o) { return o.element == w.element; });
      if (!found) r.oracle_agrees = false;
    }

    // Expectation and structural tags.
    auto expect = [&](const char* tag, bool actual) {
      if (entry.has_tag(tag) != actual)
        r.expectation_mismatches.push_back(std::string(tag) + (actual ? " holds but is not tagged"
                                                                      : " is tagged but does not hold"));
    };
    const auto& p = r.profile;
    expect("odd-order", p.order % 2 == 1);
    expect("eppo", p.is_eppo);
    expect("nilpotent", p.is_nilpotent);
    expect("abelian", p.is_abelian);
    expect("2-group", p.is_p_group && p.p == 2);
    expect("3-group", p.is_p_group && p.p == 3);
    expect("rational-expected", r.classification.rational);
    if (entry.has_tag("cut-expected") && !cut) r.expectation_mismatches.push_back("cut-expected but no cut");
    if (entry.has_tag("noncut-expected") && cut) r.expectation_mismatches.push_back("noncut-expected but cut");

    // Corpus-level invariants.
    auto& bad = r.invariant_violations;
    if (p.is_solvable && cut && !subset_of(p.pi, {2, 3, 5, 7, 13}))
      bad.push_back("solvable cut group with pi outside {2,3,5,7,13}");
    if (p.order % 2 == 1 && cut && !subset_of(p.pi, {3, 7}))
      bad.push_back("odd-order cut group with pi outside {3,7}");
    if (p.is_solvable && r.classification.rational && !subset_of(p.pi, {2, 3, 5}))
      bad.push_back("rational solvable group with pi outside {2,3,5}");
    if (p.is_abelian) {
      const bool predicted = 4 % p.exponent == 0 || 6 % p.exponent == 0;
      if (predicted != cut) bad.push_back("abelian exponent rule disagrees with the decider");
    }
    for (const auto& residues : r.verdict.per_class) {
      const bool failed = std::any_of(r.verdict.witnesses.begin(), r.verdict.witnesses.end(),
                                      [&](const CutWitness& w) { return w.element == residues.representative; });
      check_residues(residues, failed, bad);
    }
    if (cut) {
      const Subgroup z = center(g);
      if (!has_cut(subgroup_as_group(z))) bad.push_back("centre of a cut group lacks cut");
      std::vector<Subgroup> normals{z};
      for (auto& s : derived_series(g)) normals.push_back(std::move(s));
      for (auto& s : lower_central_series(g)) normals.push_back(std::move(s));
      for (const Subgroup& n : normals)
        if (!has_cut(quotient(g, n)))
          bad.push_back("quotient by a normal subgroup of order " + std::to_string(n.order()) +
                        " lacks cut");
    }
    if (const auto* q = std::get_if<spec::Quotient>(&entry.spec.value)) {
      if (has_cut(construct(*q->group, config.max_order)) && !cut)
        bad.push_back("quotient recipe of a cut group lacks cut");
    }
  } catch (const OrderCapExceeded& e) {
    r.error = e.what();
    r.error_exit_code = 65;
  } catch (const Error& e) {
    r.error = e.what();
    r.error_exit_code = 64;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CorpusResult run_corpus(const std::vector<CorpusEntry>& entries, const CorpusConfig& config) {
  CorpusResult result;
  result.entries.resize(entries.size());
  parallel_for(entries.size(), config.parallelism,
               [&](std::size_t i) { result.entries[i] = analyze_entry(entries[i], config); });
  std::sort(result.entries.begin(), result.entries.end(),
            [](const EntryResult& a, const EntryResult& b) { return a.id < b.id; });

  for (const auto& e : result.entries) {
    if (e.error) {
      ++result.errors;
      continue;
    }
    ++result.groups_analyzed;
    for (const auto& report : e.reports) {
      if (!report.agrees_with_decider) continue;
      ++(*report.agrees_with_decider ? result.agreements : result.disagreements);
    }
    result.expectation_mismatches += e.expectation_mismatches.size();
    result.oracle_mismatches += e.oracle_agrees ? 0 : 1;
    result.invariant_violations += e.invariant_violations.size();
  }

  if (config.pair_checks) {
    struct Job {
      std::string kind;
      const EntryResult* first;
      const EntryResult* second;
    };
    std::vector<Job> jobs;
    std::vector<const EntryResult*> two_groups, class2;
    for (const auto& e : result.entries) {
      if (e.error || !e.verdict.has_cut) continue;
      const auto& p = e.profile;
      if (p.is_p_group && p.p == 2) two_groups.push_back(&e);
      if (p.is_p_group && p.nilpotency_class && *p.nilpotency_class <= 2) class2.push_back(&e);
    }
    auto fits = [&](const EntryResult* a, const EntryResult* b) {
      return a->profile.order * b->profile.order <= config.pair_product_limit;
    };
    for (const auto* h : two_groups)
      for (const auto* k : two_groups)
        if (fits(h, k)) jobs.push_back({"remark_two_group_sum", h, k});
    for (std::size_t i = 0; i < class2.size(); ++i)
      for (std::size_t j = i; j < class2.size(); ++j)
        if (class2[i]->profile.p == class2[j]->profile.p && fits(class2[i], class2[j]))
          jobs.push_back({"class2_direct_sum", class2[i], class2[j]});

    result.pairs.resize(jobs.size());
    const CharacterizationOptions options{config.max_order, config.center_subgroup_limit};
    parallel_for(jobs.size(), config.parallelism, [&](std::size_t i) {
      const Job& job = jobs[i];
      PairResult& out = result.pairs[i];
      out.kind = job.kind;
      out.first = job.first->id;
      out.second = job.second->id;
      if (job.kind == "remark_two_group_sum") {
        const auto remark = remark_two_group_sum(job.first->group, job.second->group, options);
        out.predicted_cut = !remark.predicted_failure;
        out.product_has_cut = remark.product_has_cut;
      } else {
        out.predicted_cut = true;
        out.product_has_cut = has_cut(direct_product(job.first->group, job.second->group, config.max_order));
      }
      out.agrees = out.predicted_cut == out.product_has_cut;
    });
    std::sort(result.pairs.begin(), result.pairs.end(), [](const PairResult& a, const PairResult& b) {
      return std::tie(a.kind, a.first, a.second) < std::tie(b.kind, b.first, b.second);
    });
    for (const auto& pr : result.pairs) ++(pr.agrees ? result.agreements : result.disagreements);
  }
  return result;
}

}  // namespace cutlab
