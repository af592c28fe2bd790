#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cutlab/group.hpp"

namespace cutlab {

/// Prime factors of n in increasing order, without multiplicity.
std::vector<std::size_t> prime_divisors(std::size_t n);
bool is_prime(std::size_t n);
/// True when n = p^a for some a >= 0.
bool is_power_of(std::size_t n, std::size_t p);
/// True when n = 1 or n is a prime power.
bool is_prime_power(std::size_t n);

struct SylowSubgroup {
  std::size_t prime;
  Subgroup subgroup;
};

struct StructuralProfile {
  std::size_t order = 1;
  std::vector<std::size_t> pi;  // primes dividing the order
  std::size_t exponent = 1;
  bool is_abelian = true;
  bool is_solvable = true;
  bool is_nilpotent = true;
  std::optional<std::size_t> nilpotency_class;  // present iff nilpotent
  bool is_p_group = false;                      // false for the trivial group
  std::optional<std::size_t> p;
  bool is_eppo = true;
  bool is_real_group = true;
  std::vector<SylowSubgroup> sylow_subgroups;   // only for nilpotent groups
  std::vector<std::size_t> element_orders;      // indexed by element
};

/// G = D_0 > D_1 > ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const FiniteGroup& g);
/// G = L_1 > L_2 > ... ending at the first repeated term.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);

StructuralProfile structural_profile(const FiniteGroup& g);

}  // namespace cutlab
