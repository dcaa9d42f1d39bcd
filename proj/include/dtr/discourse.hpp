#pragma once

// Domain types for annotated discourses and the three line-oriented input
// formats: discourse files, verb lexicons, and causal-axiom files.
//
// Discourse file:
//   # comment
//   @context question="What bad things happened to Max today?"
//   clause id=c1 subj=Max verb=slip tense=SPAST
//   clause id=c2 conn=because subj=he verb=spill obj="a bucket of water" tense=PPERF
//
// Lexicon file:   verb <lemma> class=<accomplishment|achievement>
// Axiom file:     cause <cause-lemma> <effect-lemma>
//
// All parsers are pure functions and report failures as ParseError carrying
// a 1-based line and column.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dtr {

enum class TenseForm { SimplePast, SimplePresent, SimpleFuture, PastPerfect };

enum class ConnectiveForm { Because, AndSo, AndAlso };

enum class AspectClass { Accomplishment, Achievement };

// Tokens used by the file formats ("SPAST", "because", "achievement", ...).
std::string_view to_token(TenseForm t);
std::string_view to_token(ConnectiveForm c);
std::string_view to_token(AspectClass a);
std::optional<TenseForm> tense_from_token(std::string_view s);
std::optional<ConnectiveForm> connective_from_token(std::string_view s);
std::optional<AspectClass> aspect_from_token(std::string_view s);

struct Clause {
  std::string id;
  std::string subject;
  std::string verb;
  std::optional<std::string> object;
  TenseForm tense = TenseForm::SimplePast;
  // Relation to the immediately preceding clause; never set on the first one.
  std::optional<ConnectiveForm> connective;

  bool operator==(const Clause&) const = default;
};

struct Discourse {
  std::vector<Clause> clauses;
  std::optional<std::string> context_question;

  const Clause* find(std::string_view id) const;
  // Position of the clause in utterance order, or npos.
  std::size_t index_of(std::string_view id) const;

  bool operator==(const Discourse&) const = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

class Lexicon {
 public:
  // Returns false if the lemma was already present.
  bool add(std::string lemma, AspectClass aspect);
  bool contains(std::string_view lemma) const;
  std::optional<AspectClass> aspect(std::string_view lemma) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, AspectClass, std::less<>>& entries() const { return entries_; }

  bool operator==(const Lexicon&) const = default;

 private:
  std::map<std::string, AspectClass, std::less<>> entries_;
};

struct CausalAxiom {
  std::string cause;
  std::string effect;

  bool operator==(const CausalAxiom&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // Message without the "line:col: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

Discourse parse_discourse(std::string_view text, const Lexicon& lexicon);
Lexicon parse_lexicon(std::string_view text);
std::vector<CausalAxiom> parse_axioms(std::string_view text);

// Throws std::invalid_argument naming the first axiom lemma missing from the
// lexicon.
void check_axioms(const std::vector<CausalAxiom>& axioms, const Lexicon& lexicon);

// Canonical discourse notation; parse_discourse(to_canonical(d)) == d.
std::string to_canonical(const Discourse& d);

// Double-quoted form with backslash escapes for '"', '\\', newline and tab.
std::string quote(std::string_view s);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace dtr
