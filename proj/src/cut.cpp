#include "cutlab/cut.hpp"

#include <numeric>

namespace cutlab {

CutVerdict decide_cut(const FiniteGroup& g, CutOptions options) {
  CutVerdict verdict;
  const auto& conj = g.conjugacy();
  for (ClassId c = 0; c < conj.size(); ++c) {
    const Element x = conj.representatives[c];
    const auto powers = cyclic_powers(g, x);
    const std::size_t m = powers.size();
    const ClassId inverse_class = conj.inverse_class[c];

    ClassResidues residues{x, m, {}, std::nullopt};
    if (m == 1) residues.conjugate_residues.push_back(0);
    bool failed = false;
    for (std::size_t j = 1; j < m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      const ClassId target = conj.class_of[powers[j]];
      const bool to_self = target == c;
      const bool to_inverse = target == inverse_class;
      if (to_self) residues.conjugate_residues.push_back(j);
      if (to_inverse && !residues.inverse_residue) residues.inverse_residue = j;
      if (!to_self && !to_inverse && !failed) {
        failed = true;
        verdict.has_cut = false;
        verdict.witnesses.push_back({x, j});
        if (!options.record_residues) break;
      }
    }
    if (options.record_residues) verdict.per_class.push_back(std::move(residues));
  }
  return verdict;
}

CutVerdict decide_cut_bruteforce(const FiniteGroup& g) {
  const std::size_t n = g.order();

  // Conjugacy classes from conjugation by every element.
  constexpr std::size_t kUnassigned = ~std::size_t{0};
  std::vector<std::size_t> orbit(n, kUnassigned);
  std::size_t next = 0;
  for (Element x = 0; x < n; ++x) {
    if (orbit[x] != kUnassigned) continue;
    for (Element h = 0; h < n; ++h) orbit[g.multiply(g.multiply(g.inverse(h), x), h)] = next;
    ++next;
  }

  CutVerdict verdict;
  std::vector<Element> powers;
  for (Element x = 0; x < n; ++x) {
    powers.assign({kIdentity});
    for (Element y = x; y != kIdentity; y = g.multiply(y, x)) powers.push_back(y);
    const std::size_t m = powers.size();
    const std::size_t self = orbit[x];
    const std::size_t inverse = orbit[powers[m - 1]];
    for (std::size_t j = 1; j < m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      const std::size_t target = orbit[powers[j]];
      if (target != self && target != inverse) {
        verdict.has_cut = false;
        verdict.witnesses.push_back({x, j});
        break;
      }
    }
  }
  return verdict;
}

Classification classify(const FiniteGroup& g) { return classify(g, decide_cut(g)); }

Classification classify(const FiniteGroup& g, const CutVerdict& verdict) {
  Classification result;
  const auto& conj = g.conjugacy();
  for (ClassId c = 0; c < conj.size(); ++c)
    if (conj.inverse_class[c] != c) result.real_group = false;
  result.cut = verdict.has_cut;
  result.inverse_semi_rational = result.cut;
  result.rational = result.cut && result.real_group;
  if (g.order() % 2 == 1) {
    bool has_order_seven = false;
    for (Element rep : conj.representatives)
      if (element_order(g, rep) == 7) has_order_seven = true;
    result.central_height_label = result.cut && has_order_seven ? 0 : 1;
  }
  return result;
}

}  // namespace cutlab
