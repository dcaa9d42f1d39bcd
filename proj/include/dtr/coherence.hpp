#pragma once

// Coherence relations between adjacent clauses, their temporal constraints,
// and the cue-priority policy that proposes candidates. Narration is the
// default; a connective, a past perfect, or a topic-setting question
// withdraws it.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtr/discourse.hpp"
#include "dtr/temporal_network.hpp"

namespace dtr {

enum class RelationKind { Narration, Explanation, Parallel, CauseEffect };

std::string_view to_string(RelationKind k);
std::optional<RelationKind> relation_from_string(std::string_view s);

struct CoherenceRelation {
  RelationKind kind = RelationKind::Narration;
  std::string first;   // clause id of A
  std::string second;  // clause id of B, uttered after A

  bool operator==(const CoherenceRelation&) const = default;
};

struct CueSet {
  std::optional<ConnectiveForm> connective;
  bool tense_cue = false;         // second clause is past perfect
  bool parallel_context = false;  // discourse opened by a question

  bool operator==(const CueSet&) const = default;
};

// Cues for the pair (clauses[second_index - 1], clauses[second_index]).
CueSet derive_cues(const Discourse& d, std::size_t second_index);

RelationKind relation_for(ConnectiveForm c);

// Ordering imposed between the two event times, if any.
std::optional<Constraint> relation_constraint(const CoherenceRelation& rel);

bool semantic_support(const CoherenceRelation& rel, const Discourse& d,
                      const std::vector<CausalAxiom>& axioms);

// Same test with the pair and cues given directly.
bool semantic_support(RelationKind kind, const Clause& a, const Clause& b, const CueSet& cues,
                      const std::vector<CausalAxiom>& axioms);

// Candidates in priority order. A connective yields exactly the relation it
// encodes; otherwise a past perfect proposes supported Explanation/Parallel;
// otherwise a question context proposes Parallel; otherwise Narration.
std::vector<CoherenceRelation> candidate_relations(const Clause& a, const Clause& b,
                                                   const CueSet& cues,
                                                   const std::vector<CausalAxiom>& axioms);

}  // namespace dtr
