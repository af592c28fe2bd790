#include "doctest.h"

#include "cutlab/characterizations.hpp"
#include "cutlab/constructors.hpp"
#include "cutlab/corpus.hpp"
#include "cutlab/cut.hpp"
#include "cutlab/error.hpp"
#include "unit/helpers.hpp"

using namespace cutlab;

namespace {

GroupFacts facts_of(const GroupSpec& s) { return gather_facts(construct(s)); }

void check_agrees(const TheoremReport& r, bool predicted) {
  CAPTURE(r.name);
  REQUIRE(r.applicable);
  CHECK(r.predicted == predicted);
  CHECK(r.agrees_with_decider == true);
}

const TheoremReport& by_name(const std::vector<TheoremReport>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.name == name) return r;
  throw std::runtime_error("missing report " + name);
}

}  // namespace

TEST_CASE("thm_odd") {
  check_agrees(thm_odd(facts_of(metacyclic(7, 3, 2))), true);
  check_agrees(thm_odd(facts_of(heisenberg(3))), true);
  check_agrees(thm_odd(facts_of(heisenberg(5))), false);
  check_agrees(thm_odd(facts_of(cyclic(9))), false);
  check_agrees(thm_odd(facts_of(cyclic(1))), true);
  check_agrees(thm_odd(facts_of(metacyclic(13, 3, 3))), false);
  CHECK_FALSE(thm_odd(facts_of(cyclic(4))).applicable);
  CHECK_FALSE(thm_odd(facts_of(cyclic(4))).predicted.has_value());
}

TEST_CASE("thm_solvable_eppo") {
  check_agrees(thm_solvable_eppo(facts_of(metacyclic(3, 2, 2))), true);
  check_agrees(thm_solvable_eppo(facts_of(metacyclic(5, 4, 2))), true);
  check_agrees(thm_solvable_eppo(facts_of(symmetric(4))), true);
  check_agrees(thm_solvable_eppo(facts_of(dicyclic(4))), false);
  check_agrees(thm_solvable_eppo(facts_of(cyclic(5))), false);
  check_agrees(thm_solvable_eppo(facts_of(cyclic(13))), false);
  CHECK_FALSE(thm_solvable_eppo(facts_of(metacyclic(12, 2, 5))).applicable);  // mixed orders
  CHECK_FALSE(thm_solvable_eppo(facts_of(cyclic(6))).applicable);
}

TEST_CASE("thm_nilpotent") {
  check_agrees(thm_nilpotent(facts_of(dicyclic(2))), true);
  check_agrees(thm_nilpotent(facts_of(cyclic(3))), true);
  check_agrees(thm_nilpotent(facts_of(product({dicyclic(2), cyclic(3)}))), true);
  check_agrees(thm_nilpotent(facts_of(cyclic(12))), false);
  check_agrees(thm_nilpotent(facts_of(cyclic(5))), false);
  check_agrees(thm_nilpotent(facts_of(metacyclic(9, 9, 4))), false);
  check_agrees(thm_nilpotent(facts_of(cyclic(1))), true);
  check_agrees(thm_nilpotent(facts_of(cyclic(6))), true);
  CHECK_FALSE(thm_nilpotent(facts_of(metacyclic(3, 2, 2))).applicable);
}

TEST_CASE("thm_nilpotent: Sylow decomposition is a direct one") {
  for (const auto& s : {product({dicyclic(2), cyclic(3)}), cyclic(12), product({metacyclic(4, 2, 3), cyclic(3)}),
                        abelian({6, 6})}) {
    const GroupFacts f = facts_of(s);
    REQUIRE(f.profile.sylow_subgroups.size() == 2);
    const Subgroup& h = f.profile.sylow_subgroups[0].subgroup;
    const Subgroup& k = f.profile.sylow_subgroups[1].subgroup;
    CHECK(h.order() * k.order() == f.group.order());
    std::size_t common = 0;
    for (Element x : h.members()) common += k.contains(x);
    CHECK(common == 1);
  }
}

TEST_CASE("cor_class2") {
  check_agrees(cor_class2(facts_of(cyclic(4))), true);
  check_agrees(cor_class2(facts_of(heisenberg(3))), true);
  check_agrees(cor_class2(facts_of(metacyclic(9, 9, 4))), false);
  check_agrees(cor_class2(facts_of(dicyclic(2))), true);
  check_agrees(cor_class2(facts_of(cyclic(8))), false);
  CHECK_FALSE(cor_class2(facts_of(dicyclic(4))).applicable);  // class 3
  check_agrees(cor_class2(facts_of(cyclic(5))), false);      // p = 5: neither clause
  CHECK_FALSE(cor_class2(facts_of(cyclic(6))).applicable);
}

TEST_CASE("prop_class2_factor") {
  check_agrees(prop_class2_factor(facts_of(heisenberg(3)), FactorMode::per_element), true);
  check_agrees(prop_class2_factor(facts_of(heisenberg(3)), FactorMode::central_subgroups), true);

  const TheoremReport m = prop_class2_factor(facts_of(metacyclic(9, 9, 4)), FactorMode::per_element);
  check_agrees(m, false);
  bool b_fails = false;
  for (const auto& t : m.trace) b_fails |= !t.satisfied;
  CHECK(b_fails);
  // the quotient by [b,G] has order 27 and no cut
  const FiniteGroup g = construct(metacyclic(9, 9, 4));
  const auto cb = commutator_of_element(g, test_support::find_label(g, "b"));
  const FiniteGroup q = quotient(g, cb.subgroup);
  CHECK(q.order() == 27);
  CHECK_FALSE(has_cut(q));

  const TheoremReport c4 = prop_class2_factor(facts_of(cyclic(4)), FactorMode::central_subgroups);
  check_agrees(c4, true);
  CHECK(c4.trace.size() == 3);

  CHECK_THROWS_AS(prop_class2_factor(facts_of(abelian({2, 2, 2, 2})), FactorMode::central_subgroups, {.max_order = kDefaultMaxOrder, .center_subgroup_limit = 10}),
                  CenterTooLarge);
  CHECK_FALSE(prop_class2_factor(facts_of(symmetric(3)), FactorMode::per_element).applicable);
}

TEST_CASE("central_subgroups enumerates every subgroup of the centre") {
  CHECK(central_subgroups(construct(cyclic(12)), 100).size() == 6);
  CHECK(central_subgroups(construct(abelian({2, 2})), 100).size() == 5);
  CHECK(central_subgroups(construct(abelian({2, 2, 2})), 100).size() == 16);
  CHECK(central_subgroups(construct(abelian({2, 2, 2, 2, 2, 2})), 4096).size() == 2825);
  CHECK(central_subgroups(construct(metacyclic(9, 9, 4)), 100).size() == 6);  // centre C3 x C3
  CHECK(central_subgroups(construct(symmetric(3)), 100).size() == 1);
  const auto subs = central_subgroups(construct(abelian({4, 4})), 100);
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].order() <= subs[i].order());
  for (const auto& s : subs) CHECK(s.is_normal());
}

TEST_CASE("remark_two_group_sum") {
  const FiniteGroup c4 = construct(cyclic(4));
  const auto cc = remark_two_group_sum(c4, c4);
  CHECK_FALSE(cc.predicted_failure);
  CHECK(cc.product_has_cut);
  CHECK(cc.report.agrees_with_decider == true);

  const auto sm = remark_two_group_sum(construct(metacyclic(8, 2, 3)), construct(metacyclic(8, 2, 5)));
  CHECK(sm.predicted_failure);
  CHECK_FALSE(sm.product_has_cut);
  CHECK_FALSE(decide_cut_bruteforce(construct(product({metacyclic(8, 2, 3), metacyclic(8, 2, 5)}))).has_cut);

  const auto dq = remark_two_group_sum(construct(metacyclic(4, 2, 3)), construct(dicyclic(2)));
  CHECK_FALSE(dq.predicted_failure);
  CHECK(dq.product_has_cut);
  CHECK(dq.report.trace.empty());

  CHECK_THROWS_AS(remark_two_group_sum(construct(cyclic(3)), c4), HypothesisViolated);
  CHECK_THROWS_AS(remark_two_group_sum(c4, construct(cyclic(8))), HypothesisViolated);  // C8 has no cut
}

TEST_CASE("P6 preservation") {
  const auto r = cor_p6_preservation(facts_of(heisenberg(3)));
  check_agrees(r, true);
  CHECK(r.trace.size() == 4);
  for (const auto& t : r.trace) CHECK(t.order <= 216);
  CHECK_FALSE(cor_p6_preservation(facts_of(cyclic(5))).applicable);        // no cut
  CHECK_FALSE(cor_p6_preservation(facts_of(symmetric(3))).applicable);     // not nilpotent
  CHECK(real_two_group_check_set().size() == 4);
  for (const auto& [name, g] : real_two_group_check_set()) {
    CAPTURE(name);
    CHECK(has_cut(g));
    CHECK(classify(g).real_group);
  }
}

TEST_CASE("verify_equivalences") {
  const auto m = verify_equivalences(construct(metacyclic(9, 9, 4)));
  CHECK(m.size() == 7);
  check_agrees(by_name(m, "thm_nilpotent"), false);
  check_agrees(by_name(m, "cor_class2"), false);
  CHECK_FALSE(by_name(m, "cor_p6_preservation").applicable);

  for (const auto& r : verify_equivalences(construct(heisenberg(3))))
    if (r.applicable) CHECK(r.agrees_with_decider == true);

  const auto s3 = verify_equivalences(construct(metacyclic(3, 2, 2)));
  check_agrees(by_name(s3, "thm_solvable_eppo"), true);
  CHECK_FALSE(by_name(s3, "thm_odd").applicable);
  CHECK_FALSE(by_name(s3, "thm_nilpotent").applicable);

  // a too-large centre is reported as skipped, not thrown
  const auto skipped = verify_equivalences(construct(abelian({2, 2, 2, 2})), {.max_order = kDefaultMaxOrder, .center_subgroup_limit = 10});
  const auto& cs = by_name(skipped, "prop_class2_factor/central_subgroups");
  CHECK_FALSE(cs.applicable);
  REQUIRE_FALSE(cs.notes.empty());
}

TEST_CASE("every applicable characterization agrees on small corpus groups") {
  std::size_t applicable = 0;
  for (const auto& e : builtin_corpus()) {
    const FiniteGroup g = construct(e.spec);
    if (g.order() > 128) continue;
    CAPTURE(e.id);
    for (const auto& r : verify_equivalences(g, {.max_order = kDefaultMaxOrder, .center_subgroup_limit = 4096})) {
      CAPTURE(r.name);
      CHECK(r.applicable == r.predicted.has_value());
      if (!r.applicable) continue;
      ++applicable;
      CHECK(r.agrees_with_decider == true);
    }
  }
  CHECK(applicable > 300);
}
