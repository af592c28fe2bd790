#include "doctest.h"

#include <numeric>

#include "cutlab/constructors.hpp"
#include "cutlab/corpus.hpp"
#include "cutlab/structure.hpp"
#include "unit/helpers.hpp"

using namespace cutlab;

TEST_CASE("number helpers") {
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(24) == std::vector<std::size_t>{2, 3});
  CHECK(prime_divisors(1001) == std::vector<std::size_t>{7, 11, 13});
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_power_of(1, 3));
  CHECK(is_power_of(81, 3));
  CHECK_FALSE(is_power_of(18, 3));
  CHECK(is_prime_power(1));
  CHECK(is_prime_power(128));
  CHECK_FALSE(is_prime_power(12));
}

TEST_CASE("profile: metacyclic(12,2,5)") {
  const auto p = structural_profile(construct(metacyclic(12, 2, 5)));
  CHECK(p.order == 24);
  CHECK(p.is_solvable);
  CHECK_FALSE(p.is_nilpotent);
  CHECK_FALSE(p.nilpotency_class.has_value());
  CHECK(p.pi == std::vector<std::size_t>{2, 3});
  CHECK_FALSE(p.is_eppo);
  CHECK(p.exponent == 12);
}

TEST_CASE("profile: heisenberg(3)") {
  const auto p = structural_profile(construct(heisenberg(3)));
  CHECK(p.is_p_group);
  CHECK(p.p == 3u);
  CHECK(p.is_nilpotent);
  CHECK(p.nilpotency_class == 2u);
  CHECK(p.exponent == 3);
  CHECK_FALSE(p.is_real_group);
}

TEST_CASE("profile: metacyclic(3,2,2)") {
  const auto p = structural_profile(construct(metacyclic(3, 2, 2)));
  CHECK(p.is_solvable);
  CHECK_FALSE(p.is_nilpotent);
  CHECK(p.is_eppo);
  CHECK(p.is_real_group);
}

TEST_CASE("profile: trivial and non-solvable-free edge cases") {
  const auto t = structural_profile(construct(cyclic(1)));
  CHECK(t.order == 1);
  CHECK(t.pi.empty());
  CHECK(t.is_nilpotent);
  CHECK(t.nilpotency_class == 0u);
  CHECK_FALSE(t.is_p_group);

  const auto s4 = structural_profile(construct(symmetric(4)));
  CHECK(s4.is_solvable);
  CHECK_FALSE(s4.is_nilpotent);
  CHECK(s4.is_real_group);
  CHECK(derived_series(construct(symmetric(4))).size() == 4);  // S4 > A4 > V4 > 1

  const auto c6 = structural_profile(construct(cyclic(6)));
  CHECK(c6.nilpotency_class == 1u);
  CHECK_FALSE(c6.is_eppo);
}

TEST_CASE("series") {
  const FiniteGroup q16 = construct(dicyclic(4));
  const auto lcs = lower_central_series(q16);
  CHECK(lcs.size() == 4);  // class 3
  CHECK(lcs.back().order() == 1);
  CHECK(structural_profile(q16).nilpotency_class == 3u);

  const FiniteGroup s3 = construct(symmetric(3));
  const auto l = lower_central_series(s3);
  CHECK(l.back().order() == 3);  // stabilizes at A3
}

TEST_CASE("profile invariants on the corpus") {
  for (const auto& e : builtin_corpus()) {
    const FiniteGroup g = construct(e.spec);
    if (g.order() > 256) continue;
    CAPTURE(e.id);
    const auto p = structural_profile(g);
    if (p.is_nilpotent) CHECK(p.is_solvable);
    if (p.is_p_group) CHECK(p.is_nilpotent);
    CHECK(p.nilpotency_class.has_value() == p.is_nilpotent);
    if (p.is_nilpotent) {
      CHECK(*p.nilpotency_class + 1 == lower_central_series(g).size());
      CHECK((*p.nilpotency_class == 1) == (p.is_abelian && g.order() > 1));
      std::size_t prod = 1;
      CHECK(p.sylow_subgroups.size() == p.pi.size());
      for (const auto& s : p.sylow_subgroups) prod *= s.subgroup.order();
      CHECK(prod == g.order());
      for (std::size_t i = 0; i < p.sylow_subgroups.size(); ++i)
        for (std::size_t j = i + 1; j < p.sylow_subgroups.size(); ++j)
          for (Element x : p.sylow_subgroups[i].subgroup.members())
            for (Element y : p.sylow_subgroups[j].subgroup.members())
              CHECK(g.multiply(x, y) == g.multiply(y, x));
    }
    // exponent is the lcm of element orders
    std::size_t lcm = 1;
    for (Element x = 0; x < g.order(); ++x) lcm = std::lcm(lcm, element_order(g, x));
    CHECK(p.exponent == lcm);
  }
}
