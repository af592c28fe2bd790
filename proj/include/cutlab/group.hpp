#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cutlab {

/// Index of a group element. The identity is always index 0.
using Element = std::uint32_t;
using ClassId = std::uint32_t;

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultMaxOrder = 65536;

using MultiplyFn = std::function<Element(Element, Element)>;
using InverseFn = std::function<Element(Element)>;

/// Partition of the group into conjugacy classes. Class ids are assigned in
/// increasing order of their smallest member, so class 0 is {identity}.
struct ConjugacyPartition {
  std::vector<ClassId> class_of;
  std::vector<Element> representatives;
  std::vector<std::vector<Element>> class_members;
  std::vector<ClassId> inverse_class;

  std::size_t size() const noexcept { return representatives.size(); }
};

/// Raw ingredients for a group whose multiplication is given as a function.
/// The function must be associative with identity 0; callers that cannot
/// guarantee this should run validate_group() on the result.
struct GroupParts {
  std::size_t order = 1;
  MultiplyFn multiply;
  InverseFn inverse;                    // optional; derived from powers when empty
  std::vector<Element> generators;      // optional; chosen greedily when empty
  std::vector<std::string> labels;      // optional; one per element
};

/// Immutable finite group on indices 0..order()-1.
///
/// Copies share the underlying data, so passing groups by value is cheap and
/// every derived object can keep its ambient group alive.
class FiniteGroup {
public:
  FiniteGroup();

  std::size_t order() const noexcept;
  Element identity() const noexcept { return kIdentity; }
  Element multiply(Element x, Element y) const;
  Element inverse(Element x) const;
  std::span<const Element> generators() const noexcept;

  bool has_labels() const noexcept;
  /// Constructor-provided label, or the decimal index when there is none.
  std::string label(Element x) const;

  const ConjugacyPartition& conjugacy() const noexcept;
  ClassId class_of(Element x) const { return conjugacy().class_of[x]; }
  bool conjugate(Element x, Element y) const { return class_of(x) == class_of(y); }

  /// g^-1 x g
  Element conjugate_by(Element x, Element g) const;
  bool is_abelian() const;

private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend FiniteGroup build_from_function(GroupParts parts);

  std::shared_ptr<const Data> data_;
};

/// Assembles a group from a multiplication function. Computes inverses,
/// a generating set and the conjugacy partition; does not check the axioms.
FiniteGroup build_from_function(GroupParts parts);

/// Builds a group from a Cayley table (row-major, table[x][y] = x*y).
/// If the identity sits at an index other than 0 it is swapped into place.
/// Throws NotAGroup naming the offending cell or triple.
FiniteGroup build_from_table(std::size_t n, const std::vector<std::vector<Element>>& table);

/// Closure of permutations of 0..degree-1 under composition. Elements are
/// numbered in breadth-first discovery order with the identity first. The
/// product x*y applies x first, then y.
FiniteGroup build_from_permutations(std::size_t degree,
                                    const std::vector<std::vector<Element>>& generators,
                                    std::size_t max_order = kDefaultMaxOrder);

/// Checks the Latin-square, identity, inverse and associativity axioms and
/// that the generators span the group. Associativity is exhaustive for
/// order <= 256 and sampled on 10,000 seeded triples above that.
void validate_group(const FiniteGroup& g);

Element power(const FiniteGroup& g, Element x, long long k);
std::size_t element_order(const FiniteGroup& g, Element x);

/// Powers x^0, x^1, ..., x^(o(x)-1).
std::vector<Element> cyclic_powers(const FiniteGroup& g, Element x);

/// Orbits of conjugation by the generating set, computed from scratch.
ConjugacyPartition conjugacy_partition(std::size_t order, const MultiplyFn& multiply,
                                       std::span<const Element> inverse,
                                       std::span<const Element> generators);

class Subgroup {
public:
  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const Element> members() const noexcept { return members_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element x) const { return mask_[x] != 0; }
  bool is_normal() const noexcept { return normal_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
  Subgroup(FiniteGroup parent, std::vector<Element> generators, std::vector<Element> members);

  friend Subgroup closure_under(const FiniteGroup&, std::span<const Element>,
                                std::span<const Element>);

  FiniteGroup parent_;
  std::vector<Element> generators_;
  std::vector<Element> members_;
  std::vector<std::uint8_t> mask_;
  bool normal_ = false;
};

/// Smallest subgroup containing `seeds`; with normal_closure it is also
/// closed under conjugation by the generators of g.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> seeds,
                            bool normal_closure = false);

/// Smallest subgroup containing `seeds` and closed under conjugation by
/// `conjugators` (which need not generate g).
Subgroup closure_under(const FiniteGroup& g, std::span<const Element> seeds,
                       std::span<const Element> conjugators);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);

/// [x, g] = x g x^-1 g^-1
Element commutator(const FiniteGroup& g, Element x, Element y);

struct ElementCommutators {
  std::vector<Element> set;  // sorted, distinct
  Subgroup subgroup;         // normal closure of `set`
};

/// {x g x^-1 g^-1 : g in G} together with the normal subgroup it generates.
ElementCommutators commutator_of_element(const FiniteGroup& g, Element x);

/// Quotient by a normal subgroup. Each coset is represented by its smallest
/// member; quotient element k is the k-th coset in order of representative.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& normal);

/// Coset index in quotient(g, normal) of every element of g.
std::vector<Element> coset_map(const FiniteGroup& g, const Subgroup& normal);

/// (x, y) is indexed x*|h| + y.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t max_order = kDefaultMaxOrder);

/// The subgroup as a standalone group; element k is members()[k].
FiniteGroup subgroup_as_group(const Subgroup& s);

/// Cayley table; materializes order^2 entries.
std::vector<std::vector<Element>> cayley_table(const FiniteGroup& g);

}  // namespace cutlab
