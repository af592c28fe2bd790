#include "cutlab/characterizations.hpp"

#include <algorithm>
#include <map>

#include "cutlab/constructors.hpp"
#include "cutlab/cut.hpp"
#include "cutlab/error.hpp"

namespace cutlab {

namespace {

bool conj(const FiniteGroup& g, Element x, Element y) { return g.class_of(x) == g.class_of(y); }

bool cube_to_self_or_inverse(const FiniteGroup& g, Element x) {
  const Element cube = power(g, x, 3);
  return conj(g, cube, x) || conj(g, cube, g.inverse(x));
}

bool is_real(const FiniteGroup& g, Element x) { return conj(g, x, g.inverse(x)); }

bool is_real_group(const FiniteGroup& g) {
  const auto& c = g.conjugacy();
  for (ClassId k = 0; k < c.size(); ++k)
    if (c.inverse_class[k] != k) return false;
  return true;
}

void settle(TheoremReport& report, bool predicted, bool has_cut) {
  report.applicable = true;
  report.predicted = predicted;
  report.agrees_with_decider = predicted == has_cut;
}

bool is_class_at_most_two_p_group(const StructuralProfile& profile) {
  if (profile.order == 1) return true;
  return profile.is_p_group && profile.nilpotency_class && *profile.nilpotency_class <= 2;
}

// Clause (i) of the nilpotent characterization on a 2-group, traced with
// element indices mapped through `embed`.
bool two_group_clause(const FiniteGroup& h, const std::vector<Element>& embed, const std::string& tag,
                      std::vector<TraceEntry>& trace) {
  bool all = true;
  for (Element x : h.conjugacy().representatives) {
    const bool ok = cube_to_self_or_inverse(h, x);
    trace.push_back({embed[x], element_order(h, x), tag + "(i) x^3 ~ x or x^-1", ok});
    all = all && ok;
  }
  return all;
}

bool three_group_clause(const FiniteGroup& k, const std::vector<Element>& embed, const std::string& tag,
                        std::vector<TraceEntry>& trace) {
  bool all = true;
  for (Element x : k.conjugacy().representatives) {
    const bool ok = conj(k, power(k, x, 2), k.inverse(x));
    trace.push_back({embed[x], element_order(k, x), tag + "(ii) x^2 ~ x^-1", ok});
    all = all && ok;
  }
  return all;
}

TheoremReport named(std::string name) {
  TheoremReport report;
  report.name = std::move(name);
  return report;
}

std::vector<Element> identity_embedding(std::size_t n) {
  std::vector<Element> e(n);
  for (Element x = 0; x < n; ++x) e[x] = x;
  return e;
}

}  // namespace

GroupFacts gather_facts(const FiniteGroup& g) {
  return {g, structural_profile(g), has_cut(g)};
}

TheoremReport thm_odd(const GroupFacts& facts) {
  TheoremReport report = named("thm_odd");
  const FiniteGroup& g = facts.group;
  if (g.order() % 2 == 0) return report;

  bool all = true;
  for (Element x : g.conjugacy().representatives) {
    const std::size_t o = facts.profile.element_orders[x];
    const bool fifth = conj(g, power(g, x, 5), g.inverse(x));
    const bool order_ok = o == 1 || o == 7 || is_power_of(o, 3);
    report.trace.push_back({x, o, "x^5 ~ x^-1 and o(x) in {1, 7, 3^a}", fifth && order_ok});
    all = all && fifth && order_ok;
  }
  settle(report, all, facts.has_cut);
  return report;
}

TheoremReport thm_solvable_eppo(const GroupFacts& facts) {
  TheoremReport report = named("thm_solvable_eppo");
  const FiniteGroup& g = facts.group;
  if (!facts.profile.is_solvable || !facts.profile.is_eppo) return report;

  bool all = true;
  for (Element x : g.conjugacy().representatives) {
    const std::size_t o = facts.profile.element_orders[x];
    std::string clause = "none";
    bool ok = false;
    if (is_power_of(o, 2)) {
      clause = "(i) o(x) = 2^a and x^3 ~ x or x^-1";
      ok = cube_to_self_or_inverse(g, x);
    } else if (o == 7 || is_power_of(o, 3)) {
      clause = "(ii) o(x) = 7 or 3^b and x^5 ~ x^-1";
      ok = conj(g, power(g, x, 5), g.inverse(x));
    } else if (o == 5) {
      clause = "(iii) o(x) = 5 and x^3 ~ x^-1";
      ok = conj(g, power(g, x, 3), g.inverse(x));
    }
    report.trace.push_back({x, o, clause, ok});
    all = all && ok;
  }
  settle(report, all, facts.has_cut);
  return report;
}

TheoremReport thm_nilpotent(const GroupFacts& facts) {
  TheoremReport report = named("thm_nilpotent");
  const FiniteGroup& g = facts.group;
  const auto& profile = facts.profile;
  if (!profile.is_nilpotent) return report;

  const auto& pi = profile.pi;
  const auto all = identity_embedding(g.order());
  if (pi.empty()) {
    report.notes.push_back("trivial group");
    settle(report, true, facts.has_cut);
  } else if (pi == std::vector<std::size_t>{2}) {
    settle(report, two_group_clause(g, all, "", report.trace), facts.has_cut);
  } else if (pi == std::vector<std::size_t>{3}) {
    settle(report, three_group_clause(g, all, "", report.trace), facts.has_cut);
  } else if (pi == std::vector<std::size_t>{2, 3}) {
    const Subgroup& two = profile.sylow_subgroups[0].subgroup;
    const Subgroup& three = profile.sylow_subgroups[1].subgroup;
    const FiniteGroup h = subgroup_as_group(two);
    const FiniteGroup k = subgroup_as_group(three);
    const std::vector<Element> embed_h(two.members().begin(), two.members().end());
    const std::vector<Element> embed_k(three.members().begin(), three.members().end());
    report.notes.push_back("H = Sylow 2-subgroup of order " + std::to_string(h.order()) +
                           ", K = Sylow 3-subgroup of order " + std::to_string(k.order()));

    const bool h_real = is_real_group(h);
    for (Element x : h.conjugacy().representatives)
      report.trace.push_back({embed_h[x], element_order(h, x), "H: real", is_real(h, x)});
    const bool h_clause = two_group_clause(h, embed_h, "H: ", report.trace);
    const bool k_clause = three_group_clause(k, embed_k, "K: ", report.trace);
    settle(report, h_real && h_clause && k_clause, facts.has_cut);
  } else {
    report.notes.push_back("pi(G) is not contained in {2, 3}");
    settle(report, false, facts.has_cut);
  }
  return report;
}

TheoremReport cor_class2(const GroupFacts& facts) {
  TheoremReport report = named("cor_class2");
  const FiniteGroup& g = facts.group;
  const auto& profile = facts.profile;
  if (!is_class_at_most_two_p_group(profile)) return report;
  if (g.order() == 1) {
    report.notes.push_back("trivial group");
    settle(report, true, facts.has_cut);
    return report;
  }
  if (profile.is_abelian) report.notes.push_back("abelian: [x,G] = {1}");

  const std::size_t p = *profile.p;
  if (p != 2 && p != 3) {
    report.notes.push_back("p = " + std::to_string(p) + " is neither 2 nor 3");
    settle(report, false, facts.has_cut);
    return report;
  }
  const long long exponent = p == 2 ? 4 : 3;
  const std::string clause = p == 2 ? "(i) x^4 in [x,G]" : "(ii) x^3 in [x,G]";
  bool all = true;
  for (Element x : g.conjugacy().representatives) {
    const auto commutators = commutator_of_element(g, x);
    const Element target = power(g, x, exponent);
    const bool ok = std::binary_search(commutators.set.begin(), commutators.set.end(), target);
    report.trace.push_back({x, profile.element_orders[x], clause, ok});
    all = all && ok;
  }
  settle(report, all, facts.has_cut);
  return report;
}

std::vector<Subgroup> central_subgroups(const FiniteGroup& g, std::size_t limit) {
  const Subgroup z = center(g);
  std::map<std::vector<Element>, Subgroup> found;
  std::vector<const Subgroup*> queue;
  queue.push_back(&found.emplace(std::vector<Element>{kIdentity}, trivial_subgroup(g)).first->second);

  std::vector<std::uint8_t> tried(g.order(), 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup& base = *queue[i];
    std::fill(tried.begin(), tried.end(), 0);
    for (Element x : z.members()) {
      if (tried[x] || base.contains(x)) continue;
      // Every element is central, so <base, x> = base * <x>, and elements of
      // the same coset of base give the same join.
      std::vector<Element> joined;
      for (Element h : base.members()) tried[g.multiply(h, x)] = 1;
      for (Element p = x;; p = g.multiply(p, x)) {
        for (Element h : base.members()) joined.push_back(g.multiply(h, p));
        if (base.contains(p)) break;
      }
      std::sort(joined.begin(), joined.end());
      joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
      if (found.contains(joined)) continue;
      if (found.size() >= limit)
        throw CenterTooLarge("the centre has more than " + std::to_string(limit) + " subgroups");
      std::vector<Element> seeds(base.generators().begin(), base.generators().end());
      seeds.push_back(x);
      queue.push_back(&found.emplace(std::move(joined), subgroup_generated(g, seeds)).first->second);
    }
  }

  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto& [key, s] : found) result.push_back(s);
  std::stable_sort(result.begin(), result.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return result;
}

TheoremReport prop_class2_factor(const GroupFacts& facts, FactorMode mode,
                                 const CharacterizationOptions& options) {
  TheoremReport report = named(mode == FactorMode::per_element ? "prop_class2_factor/per_element"
                                                               : "prop_class2_factor/central_subgroups");
  const FiniteGroup& g = facts.group;
  if (!is_class_at_most_two_p_group(facts.profile)) return report;
  if (facts.profile.is_abelian) report.notes.push_back("abelian: class <= 2 extension");

  // Both factors of N have cut; memoized by member set.
  std::map<std::vector<Element>, bool> memo;
  auto factors_have_cut = [&](const Subgroup& n) {
    std::vector<Element> key(n.members().begin(), n.members().end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const bool ok = has_cut(subgroup_as_group(n)) && has_cut(quotient(g, n));
    memo.emplace(std::move(key), ok);
    return ok;
  };

  bool all = true;
  if (mode == FactorMode::per_element) {
    for (Element x : g.conjugacy().representatives) {
      const auto commutators = commutator_of_element(g, x);
      const bool ok = factors_have_cut(commutators.subgroup);
      report.trace.push_back({x, facts.profile.element_orders[x],
                              "[x,G] and G/[x,G] have cut (|[x,G]| = " +
                                  std::to_string(commutators.subgroup.order()) + ")",
                              ok});
      all = all && ok;
    }
  } else {
    const auto subgroups = central_subgroups(g, options.center_subgroup_limit);
    report.notes.push_back(std::to_string(subgroups.size()) + " central subgroups");
    for (const Subgroup& n : subgroups) {
      const bool ok = factors_have_cut(n);
      const Element witness = n.generators().empty() ? kIdentity : n.generators().front();
      report.trace.push_back({witness, n.order(), "N and G/N have cut", ok});
      all = all && ok;
    }
  }
  settle(report, all, facts.has_cut);
  return report;
}

std::vector<std::pair<std::string, FiniteGroup>> real_two_group_check_set() {
  return {{"C2", construct(cyclic(2))},
          {"C2 x C2", construct(abelian({2, 2}))},
          {"D8", construct(metacyclic(4, 2, 3))},
          {"Q8", construct(dicyclic(2))}};
}

TheoremReport cor_p6_preservation(const GroupFacts& facts, const CharacterizationOptions& options) {
  TheoremReport report = named("cor_p6_preservation");
  if (!facts.profile.is_nilpotent || !facts.has_cut) return report;

  bool all = true;
  for (const auto& [name, r] : real_two_group_check_set()) {
    const FiniteGroup product = direct_product(facts.group, r, options.max_order);
    const bool ok = has_cut(product);
    report.trace.push_back({kIdentity, product.order(), "G x " + name + " has cut", ok});
    all = all && ok;
  }
  // The statement predicts cut for every product; agreement means it held.
  report.applicable = true;
  report.predicted = true;
  report.agrees_with_decider = all;
  return report;
}

TwoGroupSumReport remark_two_group_sum(const FiniteGroup& h, const FiniteGroup& k,
                                       const CharacterizationOptions& options) {
  if (!is_power_of(h.order(), 2) || !is_power_of(k.order(), 2))
    throw HypothesisViolated("both summands must be 2-groups");
  if (!has_cut(h) || !has_cut(k)) throw HypothesisViolated("both summands must have the cut property");

  struct NonReal {
    Element x;
    bool cube_to_self;
    bool cube_to_inverse;
  };
  auto non_real = [](const FiniteGroup& g) {
    std::vector<NonReal> out;
    for (Element x : g.conjugacy().representatives) {
      if (is_real(g, x)) continue;
      const Element cube = power(g, x, 3);
      out.push_back({x, conj(g, cube, x), conj(g, cube, g.inverse(x))});
    }
    return out;
  };

  TwoGroupSumReport result;
  result.report.name = "remark_two_group_sum";
  const auto hs = non_real(h);
  const auto ks = non_real(k);
  bool h_self = false, h_inv = false, k_self = false, k_inv = false;
  for (const auto& e : hs) {
    h_self = h_self || e.cube_to_self;
    h_inv = h_inv || e.cube_to_inverse;
    result.report.trace.push_back({e.x, element_order(h, e.x),
                                   e.cube_to_self ? "H: non-real, h^3 ~ h" : "H: non-real, h^3 ~ h^-1", true});
  }
  for (const auto& e : ks) {
    k_self = k_self || e.cube_to_self;
    k_inv = k_inv || e.cube_to_inverse;
    result.report.trace.push_back({e.x, element_order(k, e.x),
                                   e.cube_to_self ? "K: non-real, k^3 ~ k" : "K: non-real, k^3 ~ k^-1", true});
  }
  result.predicted_failure = (h_self && k_inv) || (h_inv && k_self);
  result.product_has_cut = has_cut(direct_product(h, k, options.max_order));
  settle(result.report, !result.predicted_failure, result.product_has_cut);
  return result;
}

std::vector<TheoremReport> verify_equivalences(const GroupFacts& facts,
                                               const CharacterizationOptions& options) {
  std::vector<TheoremReport> reports;
  reports.push_back(thm_odd(facts));
  reports.push_back(thm_solvable_eppo(facts));
  reports.push_back(thm_nilpotent(facts));
  reports.push_back(cor_class2(facts));
  reports.push_back(prop_class2_factor(facts, FactorMode::per_element, options));
  try {
    reports.push_back(prop_class2_factor(facts, FactorMode::central_subgroups, options));
  } catch (const CenterTooLarge& e) {
    TheoremReport skipped = named("prop_class2_factor/central_subgroups");
    skipped.notes.push_back(std::string("skipped: ") + e.what());
    reports.push_back(std::move(skipped));
  }
  reports.push_back(cor_p6_preservation(facts, options));
  return reports;
}

std::vector<TheoremReport> verify_equivalences(const FiniteGroup& g, const CharacterizationOptions& options) {
  return verify_equivalences(gather_facts(g), options);
}

}  // namespace cutlab
