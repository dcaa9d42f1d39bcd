#include "dtr/coherence.hpp"

#include <algorithm>

#include "dtr/tense.hpp"

namespace dtr {

std::string_view to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Narration: return "NARRATION";
    case RelationKind::Explanation: return "EXPLANATION";
    case RelationKind::Parallel: return "PARALLEL";
    case RelationKind::CauseEffect: return "CAUSE_EFFECT";
  }
  return "?";
}

std::optional<RelationKind> relation_from_string(std::string_view s) {
  for (auto k : {RelationKind::Narration, RelationKind::Explanation, RelationKind::Parallel,
                 RelationKind::CauseEffect})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

CueSet derive_cues(const Discourse& d, std::size_t second_index) {
  if (second_index == 0) throw std::out_of_range("the first clause has no preceding clause");
  const Clause& b = d.clauses.at(second_index);
  CueSet cues;
  cues.connective = b.connective;
  cues.tense_cue = b.tense == TenseForm::PastPerfect;
  cues.parallel_context = d.context_question.has_value();
  return cues;
}

RelationKind relation_for(ConnectiveForm c) {
  switch (c) {
    case ConnectiveForm::Because: return RelationKind::Explanation;
    case ConnectiveForm::AndSo: return RelationKind::CauseEffect;
    case ConnectiveForm::AndAlso: return RelationKind::Parallel;
  }
  return RelationKind::Narration;
}

std::optional<Constraint> relation_constraint(const CoherenceRelation& rel) {
  const std::string a = event_point_id(rel.first);
  const std::string b = event_point_id(rel.second);
  switch (rel.kind) {
    case RelationKind::Narration:
    case RelationKind::CauseEffect:
      return Constraint{a, b, PointRelation::Precedes};
    case RelationKind::Explanation:
      return Constraint{b, a, PointRelation::Precedes};
    case RelationKind::Parallel:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool causes(const std::vector<CausalAxiom>& axioms, const std::string& cause,
            const std::string& effect) {
  return std::any_of(axioms.begin(), axioms.end(), [&](const CausalAxiom& ax) {
    return ax.cause == cause && ax.effect == effect;
  });
}

}  // namespace

bool semantic_support(RelationKind kind, const Clause& a, const Clause& b, const CueSet& cues,
                      const std::vector<CausalAxiom>& axioms) {
  switch (kind) {
    case RelationKind::Narration: return true;
    case RelationKind::Explanation: return causes(axioms, b.verb, a.verb);
    case RelationKind::CauseEffect: return causes(axioms, a.verb, b.verb);
    case RelationKind::Parallel:
      return cues.parallel_context || cues.connective == ConnectiveForm::AndAlso;
  }
  return false;
}

bool semantic_support(const CoherenceRelation& rel, const Discourse& d,
                      const std::vector<CausalAxiom>& axioms) {
  std::size_t ib = d.index_of(rel.second);
  const Clause* a = d.find(rel.first);
  if (!a || ib == Discourse::npos)
    throw std::invalid_argument("relation refers to a clause outside the discourse");
  return semantic_support(rel.kind, *a, d.clauses[ib], derive_cues(d, ib), axioms);
}

std::vector<CoherenceRelation> candidate_relations(const Clause& a, const Clause& b,
                                                   const CueSet& cues,
                                                   const std::vector<CausalAxiom>& axioms) {
  auto rel = [&](RelationKind k) { return CoherenceRelation{k, a.id, b.id}; };
  if (cues.connective) return {rel(relation_for(*cues.connective))};
  if (cues.tense_cue) {
    std::vector<CoherenceRelation> out;
    for (auto k : {RelationKind::Explanation, RelationKind::Parallel})
      if (semantic_support(k, a, b, cues, axioms)) out.push_back(rel(k));
    return out;
  }
  if (cues.parallel_context) return {rel(RelationKind::Parallel)};
  return {rel(RelationKind::Narration)};
}

}  // namespace dtr
