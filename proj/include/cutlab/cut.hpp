#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cutlab/group.hpp"

namespace cutlab {

/// x^exponent is conjugate to neither x nor x^-1.
struct CutWitness {
  Element element;
  std::size_t exponent;
  bool operator==(const CutWitness&) const = default;
};

/// Power-residue data for one class representative x of order m.
struct ClassResidues {
  Element representative;
  std::size_t order;
  /// { j mod m : gcd(j, m) = 1 and x^j ~ x }, sorted.
  std::vector<std::size_t> conjugate_residues;
  /// Smallest unit j with x^j ~ x^-1, if any.
  std::optional<std::size_t> inverse_residue;
};

struct CutVerdict {
  bool has_cut = true;
  /// First failing exponent of each failing representative, by representative index.
  std::vector<CutWitness> witnesses;
  /// Filled for every class when CutOptions::record_residues is set.
  std::vector<ClassResidues> per_class;
};

struct CutOptions {
  bool record_residues = false;
};

/// Decides whether every x and every j coprime to o(x) satisfy
/// x^j ~ x or x^j ~ x^-1, scanning one representative per class.
CutVerdict decide_cut(const FiniteGroup& g, CutOptions options = {});
inline bool has_cut(const FiniteGroup& g) { return decide_cut(g).has_cut; }

/// The same criterion checked on every element, with conjugacy recomputed
/// by conjugating with all group elements. Shares nothing with decide_cut
/// beyond the group's multiply and inverse.
CutVerdict decide_cut_bruteforce(const FiniteGroup& g);

struct Classification {
  bool cut = true;
  bool inverse_semi_rational = true;  // same as cut
  bool real_group = true;
  bool rational = true;               // cut and real
  /// Odd order only: 0 when the group has cut and an element of order 7,
  /// otherwise 1.
  std::optional<int> central_height_label;
};

Classification classify(const FiniteGroup& g);
Classification classify(const FiniteGroup& g, const CutVerdict& verdict);

}  // namespace cutlab
