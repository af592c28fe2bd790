#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cutlab/group.hpp"
#include "cutlab/structure.hpp"

namespace cutlab {

/// Outcome of one condition clause for one class representative.
struct TraceEntry {
  Element element;    // index in the group under test
  std::size_t order;  // o(element), or the size of the subgroup or product checked
  std::string clause;
  bool satisfied;
};

/// Result of evaluating one characterization of the cut property on a group.
/// `predicted` and `agrees_with_decider` are present exactly when the
/// characterization's hypotheses hold.
struct TheoremReport {
  std::string name;
  bool applicable = false;
  std::optional<bool> predicted;
  std::optional<bool> agrees_with_decider;
  std::vector<TraceEntry> trace;
  std::vector<std::string> notes;
};

/// A group together with the facts every characterization consumes.
struct GroupFacts {
  FiniteGroup group;
  StructuralProfile profile;
  bool has_cut;
};

GroupFacts gather_facts(const FiniteGroup& g);

enum class FactorMode { per_element, central_subgroups };

struct CharacterizationOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t center_subgroup_limit = 1024;
};

// Odd order: cut iff every x has x^5 ~ x^-1 and o(x) is 1, 7 or a power of 3.
TheoremReport thm_odd(const GroupFacts& facts);

// Solvable, every element of prime-power order: each x satisfies one of
//   (i)   o(x) = 2^a and x^3 ~ x or x^-1
//   (ii)  o(x) = 7 or 3^b (b >= 1) and x^5 ~ x^-1
//   (iii) o(x) = 5 and x^3 ~ x^-1
TheoremReport thm_solvable_eppo(const GroupFacts& facts);

// Nilpotent: a 2-group with x^3 ~ x or x^-1; a 3-group with x^2 ~ x^-1; or a
// direct sum of a real group of the first kind and a nontrivial group of the
// second kind.
TheoremReport thm_nilpotent(const GroupFacts& facts);

// p-group of class <= 2: p = 2 and x^4 in [x,G] for all x, or p = 3 and
// x^3 in [x,G] for all x.
TheoremReport cor_class2(const GroupFacts& facts);

/// p-group of class <= 2: cut iff both factors of every [x,G] (per_element)
/// or of every central subgroup N (central_subgroups) have cut. Throws
/// CenterTooLarge when the centre has more subgroups than the limit.
TheoremReport prop_class2_factor(const GroupFacts& facts, FactorMode mode,
                                 const CharacterizationOptions& options = {});

/// For nilpotent groups with cut: G x R keeps cut for R in
/// {C2, C2 x C2, D8, Q8}.
TheoremReport cor_p6_preservation(const GroupFacts& facts, const CharacterizationOptions& options = {});

/// The real 2-groups with cut used by cor_p6_preservation, with names.
std::vector<std::pair<std::string, FiniteGroup>> real_two_group_check_set();

struct TwoGroupSumReport {
  TheoremReport report;  // predicted = !predicted_failure
  bool predicted_failure = false;
  bool product_has_cut = true;
};

/// For 2-groups H, K with cut: H x K fails cut iff there are non-real h, k
/// with h^3 ~ h and k^3 ~ k^-1, or h^3 ~ h^-1 and k^3 ~ k. Throws
/// HypothesisViolated unless both inputs are 2-groups with cut.
TwoGroupSumReport remark_two_group_sum(const FiniteGroup& h, const FiniteGroup& k,
                                       const CharacterizationOptions& options = {});

/// Every characterization above (both factor modes), each with
/// agrees_with_decider filled in when applicable. Disagreements are
/// reported, never thrown.
std::vector<TheoremReport> verify_equivalences(const GroupFacts& facts,
                                               const CharacterizationOptions& options = {});
std::vector<TheoremReport> verify_equivalences(const FiniteGroup& g,
                                               const CharacterizationOptions& options = {});

/// Every subgroup of the centre, as subgroups of g, ordered by size then
/// members. Throws CenterTooLarge above `limit`.
std::vector<Subgroup> central_subgroups(const FiniteGroup& g, std::size_t limit);

}  // namespace cutlab
