#pragma once

// Golden-corpus regression runner. A corpus directory holds discourse files
// `<name>.disc`, each paired with `<name>.expected.json`. An expectation is a
// subset of the interpretation JSON: every key it states must match the
// actual output; keys it omits are not checked. Inside diagnostics entries
// the same subset rule applies, so `{"code": "..."}` alone is valid.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtr/discourse.hpp"

namespace dtr {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusCase {
  std::string name;
  bool passed = false;
  std::vector<std::string> mismatches;
  std::string actual_json;  // empty when the discourse failed to parse
};

struct CorpusReport {
  std::vector<CorpusCase> cases;  // lexicographic by name

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

// Throws CorpusError when the text is not a valid expectation.
void validate_expectation(std::string_view expectation_json);

// Mismatch descriptions; empty when actual satisfies the expectation.
std::vector<std::string> compare_expectation(std::string_view expectation_json,
                                             std::string_view actual_json);

// Throws CorpusError for a missing or malformed expectation file, or when dir
// is not a directory.
CorpusReport run_corpus(const std::filesystem::path& dir, const Lexicon& lexicon,
                        const std::vector<CausalAxiom>& axioms);

std::string to_json(const CorpusReport& report);
std::string to_text(const CorpusReport& report);

}  // namespace dtr
