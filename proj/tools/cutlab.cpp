#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cutlab/characterizations.hpp"
#include "cutlab/corpus.hpp"
#include "cutlab/error.hpp"
#include "cutlab/report.hpp"
#include "cutlab/spec_io.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kExpectationMismatch = 2,
  kParseError = 64,
  kOrderCapExceeded = 65,
  kTheoremDisagreement = 70,
};

std::size_t default_max_order() {
  if (const char* env = std::getenv("CUTLAB_MAX_ORDER")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed CUTLAB_MAX_ORDER=" << env << "\n";
    }
  }
  return cutlab::kDefaultMaxOrder;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw cutlab::ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cutlab::ReportFormat to_format(const std::string& s) {
  return s == "json" ? cutlab::ReportFormat::json : cutlab::ReportFormat::text;
}

bool any_disagreement(const std::vector<cutlab::ReportDocument::Theorem>& theorems) {
  for (const auto& t : theorems)
    if (t.agrees && !*t.agrees) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether finite groups have only trivial central units in their integral group ring"};
  app.require_subcommand(1);
  app.fallthrough();  // --max-order may also follow the subcommand

  std::size_t max_order = default_max_order();
  app.add_option("--max-order", max_order, "Largest group order to build (env CUTLAB_MAX_ORDER)");

  std::string spec_path, format = "text", expect;
  auto* analyze = app.add_subcommand("analyze", "Analyze one group spec file");
  analyze->add_option("specfile", spec_path, "Group spec JSON file, or - for stdin")->required();
  analyze->add_option("--expect", expect, "Expected verdict")->check(CLI::IsMember({"cut", "not-cut"}));
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run every characterization against the decider");
  verify->add_option("specfile", spec_path)->required();

  bool emit_table = false;
  auto* construct = app.add_subcommand("construct", "Build a group and print its Cayley table");
  construct->add_option("specfile", spec_path)->required();
  construct->add_flag("--emit-table", emit_table, "Print the Cayley table as JSON");

  auto* corpus = app.add_subcommand("corpus", "Built-in corpus");
  corpus->require_subcommand(1);
  std::string filter, output;
  std::size_t jobs = 1;
  auto* corpus_run = corpus->add_subcommand("run", "Analyze and cross-check the corpus");
  corpus_run->add_option("--filter", filter, "Only entries carrying this tag");
  corpus_run->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  corpus_run->add_option("--jobs", jobs, "Worker threads");
  corpus_run->add_option("--output", output, "Write the report to a file instead of stdout");
  auto* corpus_list = corpus->add_subcommand("list", "List corpus entries and tags");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto spec = cutlab::parse_group_spec(read_input(spec_path), max_order);
      const auto doc = cutlab::analyze(spec, {.max_order = max_order});
      std::cout << cutlab::render_report(doc, to_format(format));
      if (any_disagreement(doc.theorems)) return kTheoremDisagreement;
      if (!expect.empty() && (expect == "cut") != doc.cut) return kExpectationMismatch;
      return kOk;
    }
    if (verify->parsed()) {
      const auto spec = cutlab::parse_group_spec(read_input(spec_path), max_order);
      const auto group = cutlab::construct(spec, max_order);
      cutlab::CharacterizationOptions options;
      options.max_order = max_order;
      const auto reports = cutlab::verify_equivalences(group, options);
      std::cout << "group: " << cutlab::describe(spec) << "\n";
      std::cout << "cut: " << (cutlab::has_cut(group) ? "true" : "false") << "\n";
      std::cout << cutlab::render_theorem_reports(group, reports);
      for (const auto& r : reports)
        if (r.agrees_with_decider && !*r.agrees_with_decider) return kTheoremDisagreement;
      return kOk;
    }
    if (construct->parsed()) {
      const auto spec = cutlab::parse_group_spec(read_input(spec_path), max_order);
      const auto group = cutlab::construct(spec, max_order);
      nlohmann::ordered_json out;
      out["group"] = cutlab::spec_to_json(spec);
      out["order"] = group.order();
      std::vector<std::string> labels;
      for (cutlab::Element x = 0; x < group.order(); ++x) labels.push_back(group.label(x));
      out["labels"] = labels;
      if (emit_table) out["table"] = cutlab::cayley_table(group);
      std::cout << out.dump(emit_table ? -1 : 2) << "\n";
      return kOk;
    }
    if (corpus_list->parsed()) {
      for (const auto& e : cutlab::builtin_corpus()) {
        std::cout << e.id << "  " << cutlab::describe(e.spec) << "  [";
        bool first = true;
        for (const auto& t : e.tags) {
          std::cout << (first ? "" : ",") << t;
          first = false;
        }
        std::cout << "]\n";
      }
      return kOk;
    }
    if (corpus_run->parsed()) {
      auto entries = cutlab::builtin_corpus();
      if (!filter.empty()) std::erase_if(entries, [&](const auto& e) { return !e.has_tag(filter); });
      cutlab::CorpusConfig config;
      config.max_order = max_order;
      config.parallelism = jobs;
      const auto result = cutlab::run_corpus(entries, config);
      const auto text = cutlab::render_corpus(result, to_format(format));
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output) << text;
      }
      if (result.disagreements || result.oracle_mismatches || result.invariant_violations)
        return kTheoremDisagreement;
      if (result.expectation_mismatches) return kExpectationMismatch;
      for (const auto& e : result.entries)
        if (e.error) return e.error_exit_code;
      return kOk;
    }
  } catch (const cutlab::OrderCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOrderCapExceeded;
  } catch (const cutlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
