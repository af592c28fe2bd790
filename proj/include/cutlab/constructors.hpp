#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cutlab/group.hpp"

namespace cutlab {

struct GroupSpec;

namespace spec {

struct Cyclic {
  std::size_t n = 1;
  bool operator==(const Cyclic&) const = default;
};

/// Direct product of cyclic groups of the listed orders.
struct Abelian {
  std::vector<std::size_t> factors;
  bool operator==(const Abelian&) const = default;
};

/// <a, b | a^m, b^n, b^-1 a b = a^r>
struct Metacyclic {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t r = 1;
  bool operator==(const Metacyclic&) const = default;
};

/// <a, b | a^2n, b^2 = a^n, b^-1 a b = a^-1>, order 4n.
struct Dicyclic {
  std::size_t n = 1;
  bool operator==(const Dicyclic&) const = default;
};

/// Upper unitriangular 3x3 matrices over Z/p, order p^3.
struct Heisenberg {
  std::size_t p = 3;
  bool operator==(const Heisenberg&) const = default;
};

struct Symmetric {
  std::size_t degree = 1;
  bool operator==(const Symmetric&) const = default;
};

struct Permutation {
  std::size_t degree = 1;
  std::vector<std::vector<Element>> generators;
  bool operator==(const Permutation&) const = default;
};

struct Table {
  std::size_t order = 1;
  std::vector<std::vector<Element>> table;
  bool operator==(const Table&) const = default;
};

struct Product {
  std::vector<GroupSpec> factors;
  bool operator==(const Product& other) const;
};

/// Quotient of `group` by the subgroup generated by `normal_generators`
/// (element indices of the built group). The subgroup must be normal.
struct Quotient {
  std::shared_ptr<const GroupSpec> group;
  std::vector<Element> normal_generators;
  bool operator==(const Quotient& other) const;
};

}  // namespace spec

/// Declarative recipe for a group.
struct GroupSpec {
  using Variant = std::variant<spec::Cyclic, spec::Abelian, spec::Metacyclic, spec::Dicyclic,
                               spec::Heisenberg, spec::Symmetric, spec::Permutation, spec::Table,
                               spec::Product, spec::Quotient>;
  Variant value;

  /// Name of the kind as used in spec files ("cyclic", "metacyclic", ...).
  std::string kind() const;
  bool operator==(const GroupSpec&) const = default;
};

GroupSpec cyclic(std::size_t n);
GroupSpec abelian(std::vector<std::size_t> factors);
GroupSpec metacyclic(std::size_t m, std::size_t n, std::size_t r);
GroupSpec dicyclic(std::size_t n);
GroupSpec heisenberg(std::size_t p);
GroupSpec symmetric(std::size_t degree);
GroupSpec permutation_group(std::size_t degree, std::vector<std::vector<Element>> generators);
GroupSpec table_group(std::vector<std::vector<Element>> table);
GroupSpec product(std::vector<GroupSpec> factors);
GroupSpec quotient_of(GroupSpec group, std::vector<Element> normal_generators);

/// Checks parameter invariants without building anything. Throws
/// InvalidMetacyclicParameters, NotAPrime, InvalidParameters or
/// OrderCapExceeded.
void validate_spec(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

FiniteGroup construct(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

/// Short name such as "metacyclic(9,9,4)" or "dicyclic(2) x cyclic(3)".
std::string describe(const GroupSpec& spec);

}  // namespace cutlab
