#pragma once

// Discourse interpretation: tense resolution over every clause, then a
// priority-ordered search for one coherence relation per adjacent clause
// pair whose temporal constraint keeps the network consistent.

#include <string>
#include <string_view>
#include <vector>

#include "dtr/coherence.hpp"
#include "dtr/discourse.hpp"
#include "dtr/temporal_network.hpp"

namespace dtr {

enum class DiagnosticCode { UnresolvedReferenceTime, NoCoherenceRelation, TemporalClash };

std::string_view to_string(DiagnosticCode c);

struct Diagnostic {
  DiagnosticCode code = DiagnosticCode::TemporalClash;
  std::vector<std::string> clause_ids;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// The message is fixed by the code and the clause ids.
Diagnostic make_diagnostic(DiagnosticCode code, std::vector<std::string> clause_ids);

struct EventOrder {
  std::string before;
  std::string after;

  bool operator==(const EventOrder&) const = default;
};

struct Interpretation {
  bool felicitous = false;
  std::vector<CoherenceRelation> relations;  // one per adjacent pair; empty when infelicitous
  TemporalNetwork network;                   // closed
  std::vector<EventOrder> event_order;
  std::vector<Diagnostic> diagnostics;
  // Every complete assignment that survives, in search order (only with enumerate_all).
  std::vector<std::vector<CoherenceRelation>> alternatives;
  std::vector<std::string> trace;  // only with trace
};

struct InterpretOptions {
  bool enumerate_all = false;
  bool trace = false;
};

// Entailed PRECEDES facts between event points, ordered by point insertion.
std::vector<EventOrder> entailed_event_order(const TemporalNetwork& net);

// Preconditions (verbs and axiom lemmas in the lexicon) are checked and
// reported as std::invalid_argument; every linguistic failure is a diagnostic.
Interpretation interpret(const Discourse& d, const Lexicon& lexicon,
                         const std::vector<CausalAxiom>& axioms, InterpretOptions opts = {});

// Two-space indented JSON, newline terminated. Keys: felicitous, relations,
// event_order, diagnostics (+ alternatives when requested).
std::string to_json(const Interpretation& in, bool with_alternatives = false);
std::string to_text(const Interpretation& in, bool with_alternatives = false);

}  // namespace dtr
