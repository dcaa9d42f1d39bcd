// dtr: interpret annotated discourses, or check them against a golden corpus.
//
//   dtr interpret <discourse-file> --lexicon <file> --axioms <file> [--json] [--all] [--trace]
//   dtr corpus <dir> --lexicon <file> --axioms <file> [--json]
//
// Exit status: 0 success, 1 infelicitous verdict (interpret without --json),
// 2 input or parse error, 3 corpus failures.

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "dtr/dtr.h"

namespace {

constexpr int kExitInfelicitous = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCorpusFailures = 3;

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using LexiconPtr = std::unique_ptr<dtr_lexicon, Deleter<dtr_lexicon, dtr_lexicon_free>>;
using AxiomsPtr = std::unique_ptr<dtr_axioms, Deleter<dtr_axioms, dtr_axioms_free>>;
using DiscoursePtr = std::unique_ptr<dtr_discourse, Deleter<dtr_discourse, dtr_discourse_free>>;
using InterpretationPtr =
    std::unique_ptr<dtr_interpretation, Deleter<dtr_interpretation, dtr_interpretation_free>>;
using ReportPtr =
    std::unique_ptr<dtr_corpus_report, Deleter<dtr_corpus_report, dtr_corpus_report_free>>;

int report_error(dtr_status st) {
  std::fprintf(stderr, "dtr: %s: %s\n", dtr_status_string(st), dtr_last_error());
  return kExitInputError;
}

struct Knowledge {
  LexiconPtr lexicon;
  AxiomsPtr axioms;
};

// Loads and cross-checks the lexicon and axiom files; returns 0 or an exit code.
int load_knowledge(const std::string& lexicon_path, const std::string& axioms_path, Knowledge& k) {
  dtr_lexicon* lex = nullptr;
  if (auto st = dtr_lexicon_load(lexicon_path.c_str(), &lex); st != DTR_OK) return report_error(st);
  k.lexicon.reset(lex);
  dtr_axioms* ax = nullptr;
  if (auto st = dtr_axioms_load(axioms_path.c_str(), &ax); st != DTR_OK) return report_error(st);
  k.axioms.reset(ax);
  if (auto st = dtr_axioms_check(k.axioms.get(), k.lexicon.get()); st != DTR_OK)
    return report_error(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal interpretation of annotated discourses"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dtr_version());

  std::string lexicon_path, axioms_path, input;
  bool json = false, all = false, trace = false;

  auto* interp = app.add_subcommand("interpret", "Interpret a single discourse file");
  interp->add_option("discourse", input, "Discourse file")->required();
  interp->add_option("--lexicon", lexicon_path, "Verb lexicon file")->required();
  interp->add_option("--axioms", axioms_path, "Causal axiom file")->required();
  interp->add_flag("--json", json, "Emit JSON; exit 0 for any verdict");
  interp->add_flag("--all", all, "List every surviving relation assignment");
  interp->add_flag("--trace", trace, "Print the staged derivation to stderr");

  auto* corpus = app.add_subcommand("corpus", "Run a golden corpus directory");
  corpus->add_option("dir", input, "Corpus directory")->required();
  corpus->add_option("--lexicon", lexicon_path, "Verb lexicon file")->required();
  corpus->add_option("--axioms", axioms_path, "Causal axiom file")->required();
  corpus->add_flag("--json", json, "Emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  Knowledge k;
  if (int rc = load_knowledge(lexicon_path, axioms_path, k)) return rc;

  if (*interp) {
    dtr_discourse* d = nullptr;
    if (auto st = dtr_discourse_load(input.c_str(), k.lexicon.get(), &d); st != DTR_OK)
      return report_error(st);
    DiscoursePtr discourse(d);
    unsigned flags = (all ? DTR_INTERPRET_ALL : 0u) | (trace ? DTR_INTERPRET_TRACE : 0u);
    dtr_interpretation* in = nullptr;
    if (auto st = dtr_interpret(discourse.get(), k.lexicon.get(), k.axioms.get(), flags, &in);
        st != DTR_OK)
      return report_error(st);
    InterpretationPtr result(in);
    if (trace) std::fputs(dtr_interpretation_trace(result.get()), stderr);
    std::fputs(json ? dtr_interpretation_json(result.get()) : dtr_interpretation_text(result.get()),
               stdout);
    if (!json && !dtr_interpretation_felicitous(result.get())) return kExitInfelicitous;
    return 0;
  }

  dtr_corpus_report* r = nullptr;
  if (auto st = dtr_corpus_run(input.c_str(), k.lexicon.get(), k.axioms.get(), &r); st != DTR_OK)
    return report_error(st);
  ReportPtr report(r);
  std::fputs(json ? dtr_corpus_report_json(report.get()) : dtr_corpus_report_text(report.get()),
             stdout);
  return dtr_corpus_report_failed(report.get()) ? kExitCorpusFailures : 0;
}
