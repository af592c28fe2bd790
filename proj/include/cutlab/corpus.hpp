#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cutlab/characterizations.hpp"
#include "cutlab/constructors.hpp"
#include "cutlab/cut.hpp"
#include "cutlab/structure.hpp"

namespace cutlab {

struct CorpusEntry {
  std::string id;
  GroupSpec spec;
  /// Subset of: paper-example, odd-order, eppo, nilpotent, 2-group, 3-group,
  /// abelian, rational-expected, cut-expected, noncut-expected.
  std::set<std::string> tags;

  bool has_tag(const std::string& tag) const { return tags.contains(tag); }
};

/// The shipped corpus, sorted by id.
std::vector<CorpusEntry> builtin_corpus();

/// Invariant factor lists d1 | d2 | ... | dk (d1 > 1) with product n.
std::vector<std::vector<std::size_t>> abelian_invariant_factors(std::size_t n);

struct CorpusConfig {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t parallelism = 1;
  /// Corpus runs cover every abelian group of order <= 64, whose centres can
  /// have up to 2825 subgroups.
  std::size_t center_subgroup_limit = 4096;
  /// Bound on |H|*|K| for the pairwise direct-sum checks.
  std::size_t pair_product_limit = 1024;
  bool pair_checks = true;
};

struct EntryResult {
  std::string id;
  GroupSpec spec;
  std::set<std::string> tags;
  std::optional<std::string> error;
  int error_exit_code = 0;

  // Valid when !error.
  FiniteGroup group;
  StructuralProfile profile;
  CutVerdict verdict;
  Classification classification;
  std::vector<TheoremReport> reports;
  bool oracle_agrees = true;
  std::vector<std::string> expectation_mismatches;
  std::vector<std::string> invariant_violations;
  double wall_ms = 0.0;
};

/// A check on the direct sum of two corpus groups.
struct PairResult {
  std::string kind;  // "remark_two_group_sum" or "class2_direct_sum"
  std::string first;
  std::string second;
  bool predicted_cut;
  bool product_has_cut;
  bool agrees;
};

struct CorpusResult {
  std::vector<EntryResult> entries;  // sorted by id
  std::vector<PairResult> pairs;     // sorted by (kind, first, second)

  std::size_t groups_analyzed = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t expectation_mismatches = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t invariant_violations = 0;
  std::size_t errors = 0;
};

/// Builds, classifies and cross-checks one entry. Errors are captured.
EntryResult analyze_entry(const CorpusEntry& entry, const CorpusConfig& config);

CorpusResult run_corpus(const std::vector<CorpusEntry>& entries, const CorpusConfig& config = {});

}  // namespace cutlab
