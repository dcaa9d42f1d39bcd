#include "dtr/dtr.h"

#include <memory>
#include <new>
#include <string>

#include "dtr/corpus.hpp"
#include "dtr/discourse.hpp"
#include "dtr/interpreter.hpp"

struct dtr_lexicon {
  dtr::Lexicon value;
};

struct dtr_axioms {
  std::vector<dtr::CausalAxiom> value;
};

struct dtr_discourse {
  dtr::Discourse value;
  std::string canonical;
};

struct dtr_interpretation {
  dtr::Interpretation value;
  std::string json;
  std::string text;
  std::string trace;
};

struct dtr_corpus_report {
  dtr::CorpusReport value;
  std::string json;
  std::string text;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

dtr_status fail(dtr_status status, std::string message, std::size_t line = 0,
                std::size_t column = 0) {
  last_error = LastError{std::move(message), line, column};
  return status;
}

// Maps exceptions escaping the core onto status codes.
template <class Fn>
dtr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const dtr::ParseError& e) {
    return fail(DTR_ERROR_PARSE, e.what(), e.line(), e.column());
  } catch (const dtr::CorpusError& e) {
    return fail(DTR_ERROR_CORPUS, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DTR_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DTR_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DTR_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(DTR_ERROR_INTERNAL, "unknown error");
  }
}

// read_file failures are I/O errors rather than internal ones.
bool read_input(const char* path, std::string& out, dtr_status& status) {
  if (!path) {
    status = fail(DTR_ERROR_INVALID_ARGUMENT, "null path");
    return false;
  }
  try {
    out = dtr::read_file(path);
  } catch (const std::runtime_error& e) {
    status = fail(DTR_ERROR_IO, e.what());
    return false;
  }
  return true;
}

std::string prefixed(const char* path, const std::string& msg) { return std::string(path) + ":" + msg; }

}  // namespace

extern "C" {

const char* dtr_version(void) { return "0.1.0"; }

const char* dtr_status_string(dtr_status status) {
  switch (status) {
    case DTR_OK: return "ok";
    case DTR_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case DTR_ERROR_IO: return "i/o error";
    case DTR_ERROR_PARSE: return "parse error";
    case DTR_ERROR_CORPUS: return "corpus error";
    case DTR_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dtr_last_error(void) { return last_error.message.c_str(); }
size_t dtr_last_error_line(void) { return last_error.line; }
size_t dtr_last_error_column(void) { return last_error.column; }

dtr_status dtr_lexicon_parse(const char* text, dtr_lexicon** out) {
  if (!text || !out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new dtr_lexicon{dtr::parse_lexicon(text)};
    return DTR_OK;
  });
}

dtr_status dtr_lexicon_load(const char* path, dtr_lexicon** out) {
  if (!out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::string text;
  dtr_status st = DTR_OK;
  if (!read_input(path, text, st)) return st;
  st = dtr_lexicon_parse(text.c_str(), out);
  if (st == DTR_ERROR_PARSE) last_error.message = prefixed(path, last_error.message);
  return st;
}

size_t dtr_lexicon_size(const dtr_lexicon* lexicon) { return lexicon ? lexicon->value.size() : 0; }
void dtr_lexicon_free(dtr_lexicon* lexicon) { delete lexicon; }

dtr_status dtr_axioms_parse(const char* text, dtr_axioms** out) {
  if (!text || !out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new dtr_axioms{dtr::parse_axioms(text)};
    return DTR_OK;
  });
}

dtr_status dtr_axioms_load(const char* path, dtr_axioms** out) {
  if (!out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::string text;
  dtr_status st = DTR_OK;
  if (!read_input(path, text, st)) return st;
  st = dtr_axioms_parse(text.c_str(), out);
  if (st == DTR_ERROR_PARSE) last_error.message = prefixed(path, last_error.message);
  return st;
}

dtr_status dtr_axioms_check(const dtr_axioms* axioms, const dtr_lexicon* lexicon) {
  if (!axioms || !lexicon) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    dtr::check_axioms(axioms->value, lexicon->value);
    return DTR_OK;
  });
}

size_t dtr_axioms_size(const dtr_axioms* axioms) { return axioms ? axioms->value.size() : 0; }
void dtr_axioms_free(dtr_axioms* axioms) { delete axioms; }

dtr_status dtr_discourse_parse(const char* text, const dtr_lexicon* lexicon, dtr_discourse** out) {
  if (!text || !lexicon || !out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    dtr::Discourse d = dtr::parse_discourse(text, lexicon->value);
    std::string canonical = dtr::to_canonical(d);
    *out = new dtr_discourse{std::move(d), std::move(canonical)};
    return DTR_OK;
  });
}

dtr_status dtr_discourse_load(const char* path, const dtr_lexicon* lexicon, dtr_discourse** out) {
  if (!out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::string text;
  dtr_status st = DTR_OK;
  if (!read_input(path, text, st)) return st;
  st = dtr_discourse_parse(text.c_str(), lexicon, out);
  if (st == DTR_ERROR_PARSE) last_error.message = prefixed(path, last_error.message);
  return st;
}

size_t dtr_discourse_clause_count(const dtr_discourse* discourse) {
  return discourse ? discourse->value.clauses.size() : 0;
}

const char* dtr_discourse_canonical(const dtr_discourse* discourse) {
  return discourse ? discourse->canonical.c_str() : "";
}

void dtr_discourse_free(dtr_discourse* discourse) { delete discourse; }

dtr_status dtr_interpret(const dtr_discourse* discourse, const dtr_lexicon* lexicon,
                         const dtr_axioms* axioms, unsigned flags, dtr_interpretation** out) {
  if (!discourse || !lexicon || !out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    dtr::InterpretOptions opts;
    opts.enumerate_all = (flags & DTR_INTERPRET_ALL) != 0;
    opts.trace = (flags & DTR_INTERPRET_TRACE) != 0;
    static const std::vector<dtr::CausalAxiom> none;
    auto in = std::make_unique<dtr_interpretation>(dtr_interpretation{
        dtr::interpret(discourse->value, lexicon->value, axioms ? axioms->value : none, opts),
        {}, {}, {}});
    in->json = dtr::to_json(in->value, opts.enumerate_all);
    in->text = dtr::to_text(in->value, opts.enumerate_all);
    for (const auto& line : in->value.trace) in->trace += line + "\n";
    *out = in.release();
    return DTR_OK;
  });
}

int dtr_interpretation_felicitous(const dtr_interpretation* in) {
  return in && in->value.felicitous ? 1 : 0;
}

size_t dtr_interpretation_relation_count(const dtr_interpretation* in) {
  return in ? in->value.relations.size() : 0;
}

size_t dtr_interpretation_diagnostic_count(const dtr_interpretation* in) {
  return in ? in->value.diagnostics.size() : 0;
}

const char* dtr_interpretation_json(const dtr_interpretation* in) { return in ? in->json.c_str() : ""; }
const char* dtr_interpretation_text(const dtr_interpretation* in) { return in ? in->text.c_str() : ""; }
const char* dtr_interpretation_trace(const dtr_interpretation* in) { return in ? in->trace.c_str() : ""; }
void dtr_interpretation_free(dtr_interpretation* in) { delete in; }

dtr_status dtr_corpus_run(const char* dir, const dtr_lexicon* lexicon, const dtr_axioms* axioms,
                          dtr_corpus_report** out) {
  if (!dir || !lexicon || !out) return fail(DTR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    static const std::vector<dtr::CausalAxiom> none;
    dtr::check_axioms(axioms ? axioms->value : none, lexicon->value);
    auto r = std::make_unique<dtr_corpus_report>(dtr_corpus_report{
        dtr::run_corpus(dir, lexicon->value, axioms ? axioms->value : none), {}, {}});
    r->json = dtr::to_json(r->value);
    r->text = dtr::to_text(r->value);
    *out = r.release();
    return DTR_OK;
  });
}

size_t dtr_corpus_report_total(const dtr_corpus_report* report) {
  return report ? report->value.cases.size() : 0;
}

size_t dtr_corpus_report_failed(const dtr_corpus_report* report) {
  return report ? report->value.failed() : 0;
}

const char* dtr_corpus_report_json(const dtr_corpus_report* report) {
  return report ? report->json.c_str() : "";
}

const char* dtr_corpus_report_text(const dtr_corpus_report* report) {
  return report ? report->text.c_str() : "";
}

void dtr_corpus_report_free(dtr_corpus_report* report) { delete report; }

}  // extern "C"
