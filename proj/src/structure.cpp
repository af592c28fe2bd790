#include "cutlab/structure.hpp"

#include <algorithm>
#include <numeric>

namespace cutlab {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_power_of(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_prime_power(std::size_t n) { return prime_divisors(n).size() <= 1 && n != 0; }

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    const Subgroup& last = series.back();
    const auto gens = last.generators();
    std::vector<Element> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(g, gens[i], gens[j]));
    // H' is the normal closure in H of the commutators of a generating set.
    Subgroup next = closure_under(g, seeds, gens);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    const Subgroup& last = series.back();
    std::vector<Element> seeds;
    for (Element a : last.generators())
      for (Element s : g.generators()) seeds.push_back(commutator(g, a, s));
    Subgroup next = closure_under(g, seeds, g.generators());
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

StructuralProfile structural_profile(const FiniteGroup& g) {
  StructuralProfile profile;
  const std::size_t n = g.order();
  profile.order = n;
  profile.pi = prime_divisors(n);
  profile.is_abelian = g.is_abelian();

  profile.element_orders.resize(n);
  for (Element x = 0; x < n; ++x) {
    const std::size_t o = element_order(g, x);
    profile.element_orders[x] = o;
    profile.exponent = std::lcm(profile.exponent, o);
    if (!is_prime_power(o)) profile.is_eppo = false;
  }

  const auto& conj = g.conjugacy();
  for (ClassId c = 0; c < conj.size(); ++c)
    if (conj.inverse_class[c] != c) profile.is_real_group = false;

  profile.is_solvable = derived_series(g).back().order() == 1;
  const auto lower = lower_central_series(g);
  profile.is_nilpotent = lower.back().order() == 1;
  if (profile.is_nilpotent) profile.nilpotency_class = lower.size() - 1;

  if (profile.pi.size() == 1) {
    profile.is_p_group = true;
    profile.p = profile.pi.front();
  }

  if (profile.is_nilpotent) {
    for (std::size_t p : profile.pi) {
      std::vector<Element> part;
      for (Element x = 0; x < n; ++x)
        if (is_power_of(profile.element_orders[x], p)) part.push_back(x);
      profile.sylow_subgroups.push_back({p, subgroup_generated(g, part)});
    }
  }
  return profile;
}

}  // namespace cutlab
