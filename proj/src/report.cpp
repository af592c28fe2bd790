#include "cutlab/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "cutlab/spec_io.hpp"

namespace cutlab {

namespace {

using nlohmann::ordered_json;

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string optional_bool(const std::optional<bool>& b) { return b ? yes_no(*b) : "-"; }

std::string pi_text(const std::vector<std::size_t>& pi) {
  std::string out = "{";
  for (std::size_t k = 0; k < pi.size(); ++k) out += (k ? "," : "") + std::to_string(pi[k]);
  return out + "}";
}

std::string witness_text(const ReportDocument::Witness& w) {
  return "(" + w.element + ", j=" + std::to_string(w.exponent) + ")";
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

ReportDocument make_report(const GroupSpec& spec, const FiniteGroup& group, const StructuralProfile& profile,
                           const CutVerdict& verdict, const Classification& classification,
                           const std::vector<TheoremReport>& theorems, double timing_ms) {
  ReportDocument doc;
  doc.spec = spec;
  doc.description = describe(spec);
  doc.order = profile.order;
  doc.pi = profile.pi;
  doc.solvable = profile.is_solvable;
  doc.nilpotent = profile.is_nilpotent;
  doc.nilpotency_class = profile.nilpotency_class;
  doc.eppo = profile.is_eppo;
  doc.real_group = classification.real_group;
  doc.exponent = profile.exponent;
  doc.class_count = group.conjugacy().size();
  doc.cut = classification.cut;
  doc.inverse_semi_rational = classification.inverse_semi_rational;
  doc.rational = classification.rational;
  doc.central_height_label = classification.central_height_label;
  for (const auto& w : verdict.witnesses) doc.witnesses.push_back({group.label(w.element), w.element, w.exponent});
  for (const auto& t : theorems)
    doc.theorems.push_back({t.name, t.applicable, t.predicted, t.agrees_with_decider});
  doc.timing_ms = timing_ms;
  return doc;
}

ReportDocument make_report(const EntryResult& entry) {
  return make_report(entry.spec, entry.group, entry.profile, entry.verdict, entry.classification, entry.reports,
                     entry.wall_ms);
}

ReportDocument analyze(const GroupSpec& spec, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteGroup g = construct(spec, options.max_order);
  const StructuralProfile profile = structural_profile(g);
  const CutVerdict verdict = decide_cut(g);
  const Classification classification = classify(g, verdict);
  std::vector<TheoremReport> theorems;
  if (options.with_theorems) {
    CharacterizationOptions copts;
    copts.max_order = options.max_order;
    theorems = verify_equivalences(GroupFacts{g, profile, verdict.has_cut}, copts);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return make_report(spec, g, profile, verdict, classification, theorems, ms);
}

ordered_json report_to_json(const ReportDocument& doc) {
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : doc.witnesses)
    witnesses.push_back({{"element", w.element}, {"index", w.index}, {"exponent", w.exponent}});
  ordered_json theorems = ordered_json::array();
  for (const auto& t : doc.theorems)
    theorems.push_back({{"name", t.name},
                        {"applicable", t.applicable},
                        {"predicted", optional_json(t.predicted)},
                        {"agrees", optional_json(t.agrees)}});

  ordered_json out;
  out["tool_version"] = doc.tool_version;
  out["group"] = spec_to_json(doc.spec);
  out["description"] = doc.description;
  out["order"] = doc.order;
  out["pi"] = doc.pi;
  out["exponent"] = doc.exponent;
  out["class_count"] = doc.class_count;
  out["solvable"] = doc.solvable;
  out["nilpotent"] = doc.nilpotent;
  out["nilpotency_class"] = optional_json(doc.nilpotency_class);
  out["eppo"] = doc.eppo;
  out["real_group"] = doc.real_group;
  out["cut"] = doc.cut;
  out["inverse_semi_rational"] = doc.inverse_semi_rational;
  out["rational"] = doc.rational;
  out["central_height_label"] = optional_json(doc.central_height_label);
  out["witnesses"] = witnesses;
  out["theorems"] = theorems;
  out["timing_ms"] = doc.timing_ms;
  return out;
}

std::string render_report(const ReportDocument& doc, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(doc).dump(2) + "\n";

  std::ostringstream out;
  out << "group: " << doc.description << "\n";
  out << "order: " << doc.order << "\n";
  out << "pi: " << pi_text(doc.pi) << "\n";
  out << "exponent: " << doc.exponent << "\n";
  out << "classes: " << doc.class_count << "\n";
  out << "solvable: " << yes_no(doc.solvable) << "\n";
  out << "nilpotent: " << yes_no(doc.nilpotent);
  if (doc.nilpotency_class) out << " (class " << *doc.nilpotency_class << ")";
  out << "\n";
  out << "eppo: " << yes_no(doc.eppo) << "\n";
  out << "real_group: " << yes_no(doc.real_group) << "\n";
  out << "cut: " << yes_no(doc.cut);
  if (!doc.witnesses.empty()) out << "  witness: " << witness_text(doc.witnesses.front());
  out << "\n";
  if (doc.witnesses.size() > 1) {
    out << "other witnesses:";
    for (std::size_t k = 1; k < doc.witnesses.size(); ++k) out << " " << witness_text(doc.witnesses[k]);
    out << "\n";
  }
  out << "inverse_semi_rational: " << yes_no(doc.inverse_semi_rational) << "\n";
  out << "rational: " << yes_no(doc.rational) << "\n";
  out << "central_height: "
      << (doc.central_height_label ? std::to_string(*doc.central_height_label) : std::string("n/a")) << "\n";
  if (!doc.theorems.empty()) {
    out << "theorems:\n";
    for (const auto& t : doc.theorems) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-38s %-14s predicted=%-5s agrees=%s\n", t.name.c_str(),
                    t.applicable ? "applicable" : "not-applicable", optional_bool(t.predicted).c_str(),
                    optional_bool(t.agrees).c_str());
      out << line;
    }
  }
  out << "timing: " << format_ms(doc.timing_ms) << " ms\n";
  return out.str();
}

ordered_json corpus_to_json(const CorpusResult& result) {
  ordered_json out;
  out["tool_version"] = kToolVersion;
  out["summary"] = {{"groups_analyzed", result.groups_analyzed},
                    {"agreements", result.agreements},
                    {"disagreements", result.disagreements},
                    {"expectation_mismatches", result.expectation_mismatches},
                    {"oracle_mismatches", result.oracle_mismatches},
                    {"invariant_violations", result.invariant_violations},
                    {"errors", result.errors}};
  ordered_json entries = ordered_json::array();
  for (const auto& e : result.entries) {
    ordered_json item;
    item["id"] = e.id;
    item["tags"] = e.tags;
    item["error"] = optional_json(e.error);
    if (!e.error) {
      item["oracle_agrees"] = e.oracle_agrees;
      item["expectation_mismatches"] = e.expectation_mismatches;
      item["invariant_violations"] = e.invariant_violations;
      item["report"] = report_to_json(make_report(e));
    } else {
      item["group"] = spec_to_json(e.spec);
    }
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  ordered_json pairs = ordered_json::array();
  for (const auto& p : result.pairs)
    pairs.push_back({{"kind", p.kind},
                     {"first", p.first},
                     {"second", p.second},
                     {"predicted_cut", p.predicted_cut},
                     {"product_has_cut", p.product_has_cut},
                     {"agrees", p.agrees}});
  out["pairs"] = std::move(pairs);
  return out;
}

std::string render_corpus(const CorpusResult& result, ReportFormat format) {
  if (format == ReportFormat::json) return corpus_to_json(result).dump(2) + "\n";

  std::ostringstream out;
  for (const auto& e : result.entries) {
    char line[200];
    if (e.error) {
      std::snprintf(line, sizeof line, "%-34s ERROR %s\n", e.id.c_str(), e.error->c_str());
      out << line;
      continue;
    }
    std::size_t disagreements = 0;
    for (const auto& t : e.reports)
      if (t.agrees_with_decider && !*t.agrees_with_decider) ++disagreements;
    std::snprintf(line, sizeof line, "%-34s order=%-5zu cut=%-5s oracle=%-4s theorems=%s expect=%s invariants=%s\n",
                  e.id.c_str(), e.profile.order, yes_no(e.verdict.has_cut), e.oracle_agrees ? "ok" : "FAIL",
                  disagreements == 0 ? "ok" : "FAIL", e.expectation_mismatches.empty() ? "ok" : "FAIL",
                  e.invariant_violations.empty() ? "ok" : "FAIL");
    out << line;
  }
  std::size_t pair_disagreements = 0;
  for (const auto& p : result.pairs) pair_disagreements += p.agrees ? 0 : 1;
  out << "pairs checked: " << result.pairs.size() << " (disagreements " << pair_disagreements << ")\n";
  out << "groups analyzed: " << result.groups_analyzed << "\n";
  out << "agreements: " << result.agreements << "\n";
  out << "disagreements: " << result.disagreements << "\n";
  out << "expectation mismatches: " << result.expectation_mismatches << "\n";
  out << "oracle mismatches: " << result.oracle_mismatches << "\n";
  out << "invariant violations: " << result.invariant_violations << "\n";
  out << "errors: " << result.errors << "\n";
  return out.str();
}

std::string render_theorem_reports(const FiniteGroup& group, const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.name << ": ";
    if (!r.applicable) {
      out << "not applicable\n";
    } else {
      out << "predicted cut=" << yes_no(*r.predicted) << ", agrees=" << yes_no(*r.agrees_with_decider) << "\n";
    }
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
    for (const auto& t : r.trace)
      out << "  [" << (t.satisfied ? "ok" : "FAIL") << "] " << group.label(t.element) << " (order " << t.order
          << "): " << t.clause << "\n";
  }
  return out.str();
}

}  // namespace cutlab
