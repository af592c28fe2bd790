#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cutlab/characterizations.hpp"
#include "cutlab/constructors.hpp"
#include "cutlab/corpus.hpp"
#include "cutlab/cut.hpp"

namespace cutlab {

inline constexpr const char* kToolVersion = "cutlab 1.0.0";

struct ReportDocument {
  struct Witness {
    std::string element;
    Element index;
    std::size_t exponent;
  };
  struct Theorem {
    std::string name;
    bool applicable;
    std::optional<bool> predicted;
    std::optional<bool> agrees;
  };

  std::string tool_version = kToolVersion;
  GroupSpec spec;
  std::string description;
  std::size_t order = 1;
  std::vector<std::size_t> pi;
  bool solvable = true;
  bool nilpotent = true;
  std::optional<std::size_t> nilpotency_class;
  bool eppo = true;
  bool real_group = true;
  std::size_t exponent = 1;
  std::size_t class_count = 1;
  bool cut = true;
  bool inverse_semi_rational = true;
  bool rational = true;
  std::optional<int> central_height_label;
  std::vector<Witness> witnesses;
  std::vector<Theorem> theorems;
  double timing_ms = 0.0;
};

enum class ReportFormat { json, text };

ReportDocument make_report(const GroupSpec& spec, const FiniteGroup& group, const StructuralProfile& profile,
                           const CutVerdict& verdict, const Classification& classification,
                           const std::vector<TheoremReport>& theorems, double timing_ms);
ReportDocument make_report(const EntryResult& entry);

struct AnalyzeOptions {
  std::size_t max_order = kDefaultMaxOrder;
  bool with_theorems = true;
};

/// Builds the group, decides cut, classifies and runs every characterization.
ReportDocument analyze(const GroupSpec& spec, const AnalyzeOptions& options = {});

nlohmann::ordered_json report_to_json(const ReportDocument& doc);
std::string render_report(const ReportDocument& doc, ReportFormat format);

nlohmann::ordered_json corpus_to_json(const CorpusResult& result);
std::string render_corpus(const CorpusResult& result, ReportFormat format);

/// Detailed per-theorem output with traces, for `verify`.
std::string render_theorem_reports(const FiniteGroup& group, const std::vector<TheoremReport>& reports);

}  // namespace cutlab
