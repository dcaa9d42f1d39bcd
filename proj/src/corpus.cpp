#include "dtr/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "dtr/coherence.hpp"
#include "dtr/interpreter.hpp"

namespace dtr {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kDiscourseExt = ".disc";
constexpr std::string_view kExpectationSuffix = ".expected.json";

[[noreturn]] void malformed(const std::string& what) {
  throw CorpusError("malformed expectation: " + what);
}

void require_string_fields(const Json& obj, std::initializer_list<const char*> required,
                           std::initializer_list<const char*> optional, const std::string& where) {
  if (!obj.is_object()) malformed(where + " entries must be objects");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!obj.contains(k)) malformed(where + " entry is missing '" + k + "'");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) malformed(where + " entry has unknown key '" + k + "'");
    if (k != "clauses" && !v.is_string()) malformed(where + "." + k + " must be a string");
  }
}

Json parse_expectation(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "felicitous") {
      if (!v.is_boolean()) malformed("'felicitous' must be a boolean");
    } else if (key == "relations") {
      if (!v.is_array()) malformed("'relations' must be an array");
      for (const auto& r : v) {
        require_string_fields(r, {"kind", "first", "second"}, {}, "relations");
        if (!relation_from_string(r["kind"].get<std::string>()))
          malformed("unknown relation kind '" + r["kind"].get<std::string>() + "'");
      }
    } else if (key == "event_order") {
      if (!v.is_array()) malformed("'event_order' must be an array");
      for (const auto& e : v) require_string_fields(e, {"before", "after"}, {}, "event_order");
    } else if (key == "diagnostics") {
      if (!v.is_array()) malformed("'diagnostics' must be an array");
      for (const auto& d : v) {
        require_string_fields(d, {"code"}, {"clauses", "message"}, "diagnostics");
        const auto code = d["code"].get<std::string>();
        if (code != "UNRESOLVED_REFERENCE_TIME" && code != "NO_COHERENCE_RELATION" &&
            code != "TEMPORAL_CLASH")
          malformed("unknown diagnostic code '" + code + "'");
        if (d.contains("clauses")) {
          const auto& c = d["clauses"];
          if (!c.is_array() || !std::all_of(c.begin(), c.end(),
                                            [](const Json& x) { return x.is_string(); }))
            malformed("diagnostics.clauses must be an array of strings");
        }
      }
    } else {
      malformed("unknown key '" + key + "'");
    }
  }
  return j;
}

// Actual restricted to the keys the expectation states.
Json project(const Json& expected, const Json& actual) {
  if (expected.is_object() && actual.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : expected.items())
      if (actual.contains(k)) out[k] = project(v, actual[k]);
    return out;
  }
  if (expected.is_array() && actual.is_array()) {
    Json out = Json::array();
    for (std::size_t i = 0; i < actual.size(); ++i)
      out.push_back(i < expected.size() ? project(expected[i], actual[i]) : actual[i]);
    return out;
  }
  return actual;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

CorpusCase run_case(const std::string& name, const std::string& discourse_text,
                    const std::string& expectation_text, const Lexicon& lexicon,
                    const std::vector<CausalAxiom>& axioms) {
  CorpusCase c;
  c.name = name;
  try {
    Discourse d = parse_discourse(discourse_text, lexicon);
    c.actual_json = to_json(interpret(d, lexicon, axioms));
    c.mismatches = compare_expectation(expectation_text, c.actual_json);
  } catch (const ParseError& e) {
    c.mismatches.push_back(std::string("parse error: ") + e.what());
  } catch (const std::exception& e) {
    c.mismatches.push_back(std::string("error: ") + e.what());
  }
  c.passed = c.mismatches.empty();
  return c;
}

}  // namespace

std::size_t CorpusReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CorpusCase& c) { return c.passed; }));
}

void validate_expectation(std::string_view expectation_json) {
  parse_expectation(expectation_json);
}

std::vector<std::string> compare_expectation(std::string_view expectation_json,
                                             std::string_view actual_json) {
  const Json expected = parse_expectation(expectation_json);
  const Json actual = Json::parse(actual_json);
  std::vector<std::string> out;
  for (const auto& [key, want] : expected.items()) {
    if (!actual.contains(key)) {
      out.push_back(key + ": missing from output");
      continue;
    }
    const Json got = project(want, actual[key]);
    if (got != want) out.push_back(key + ": expected " + want.dump() + ", got " + got.dump());
  }
  return out;
}

CorpusReport run_corpus(const fs::path& dir, const Lexicon& lexicon,
                        const std::vector<CausalAxiom>& axioms) {
  if (!fs::is_directory(dir)) throw CorpusError("not a directory: " + dir.string());

  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string file = entry.path().filename().string();
    if (ends_with(file, kDiscourseExt)) names.push_back(file.substr(0, file.size() - kDiscourseExt.size()));
  }
  std::sort(names.begin(), names.end());

  // Inputs are read and validated up front so that I/O and expectation errors
  // abort the run before any case is interpreted.
  std::vector<std::pair<std::string, std::string>> inputs;
  for (const auto& name : names) {
    const fs::path expectation = dir / (name + std::string(kExpectationSuffix));
    if (!fs::is_regular_file(expectation))
      throw CorpusError("missing expectation file for case '" + name + "': " + expectation.string());
    std::string exp_text = read_file(expectation.string());
    try {
      validate_expectation(exp_text);
    } catch (const CorpusError& e) {
      throw CorpusError(expectation.string() + ": " + e.what());
    }
    inputs.emplace_back(read_file((dir / (name + std::string(kDiscourseExt))).string()),
                        std::move(exp_text));
  }

  CorpusReport report;
  report.cases.resize(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < names.size();)
      report.cases[i] = run_case(names[i], inputs[i].first, inputs[i].second, lexicon, axioms);
  };
  const std::size_t n_workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(names.size(), 1));
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < n_workers; ++w) workers.emplace_back(worker);
  workers.clear();
  return report;
}

std::string to_json(const CorpusReport& report) {
  Json j;
  j["total"] = report.cases.size();
  j["passed"] = report.passed();
  j["failed"] = report.failed();
  j["cases"] = Json::array();
  for (const auto& c : report.cases)
    j["cases"].push_back({{"name", c.name}, {"passed", c.passed}, {"mismatches", c.mismatches}});
  return j.dump(2) + "\n";
}

std::string to_text(const CorpusReport& report) {
  std::ostringstream os;
  for (const auto& c : report.cases) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    for (const auto& m : c.mismatches) os << "    " << m << '\n';
  }
  os << report.passed() << "/" << report.cases.size() << " cases passed\n";
  return os.str();
}

}  // namespace dtr
