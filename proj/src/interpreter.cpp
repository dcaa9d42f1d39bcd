#include "dtr/interpreter.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"

#include "dtr/tense.hpp"

namespace dtr {

std::string_view to_string(DiagnosticCode c) {
  switch (c) {
    case DiagnosticCode::UnresolvedReferenceTime: return "UNRESOLVED_REFERENCE_TIME";
    case DiagnosticCode::NoCoherenceRelation: return "NO_COHERENCE_RELATION";
    case DiagnosticCode::TemporalClash: return "TEMPORAL_CLASH";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::string>& ids, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i];
  }
  return out;
}

std::string describe(const CoherenceRelation& r) {
  return std::string(to_string(r.kind)) + "(" + r.first + ", " + r.second + ")";
}

std::string describe(const Constraint& c) {
  return c.first + " " + std::string(to_string(c.relation)) + " " + c.second;
}

std::string describe(const CueSet& cues) {
  std::string out = "connective=";
  out += cues.connective ? std::string(to_token(*cues.connective)) : "none";
  out += cues.tense_cue ? " tense_cue=yes" : " tense_cue=no";
  out += cues.parallel_context ? " parallel_context=yes" : " parallel_context=no";
  return out;
}

std::string describe_order(const std::vector<EventOrder>& order) {
  if (order.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ", ";
    out += order[i].before + " < " + order[i].after;
  }
  return out;
}

class Tracer {
 public:
  explicit Tracer(std::vector<std::string>* sink) : sink_(sink) {}
  template <class Fn>
  void operator()(Fn&& make_line) const {
    if (sink_) sink_->push_back(make_line());
  }

 private:
  std::vector<std::string>* sink_;
};

struct PairPlan {
  const Clause* a;
  const Clause* b;
  CueSet cues;
  std::vector<CoherenceRelation> candidates;  // licensed only
};

}  // namespace

Diagnostic make_diagnostic(DiagnosticCode code, std::vector<std::string> clause_ids) {
  Diagnostic d{code, std::move(clause_ids), {}};
  switch (code) {
    case DiagnosticCode::UnresolvedReferenceTime:
      d.message = "past perfect in clause " + join(d.clause_ids, ", ") +
                  " has no previously introduced time to refer to";
      break;
    case DiagnosticCode::NoCoherenceRelation:
      d.message = "no coherence relation is licensed between clauses " + join(d.clause_ids, " and ");
      break;
    case DiagnosticCode::TemporalClash:
      d.message = "every licensed coherence relation between clauses " +
                  join(d.clause_ids, " and ") + " clashes with the established temporal order";
      break;
  }
  return d;
}

std::vector<EventOrder> entailed_event_order(const TemporalNetwork& net) {
  std::vector<EventOrder> out;
  if (!net.is_consistent()) return out;
  const TemporalNetwork closed = net.close();
  const auto& pts = closed.points();
  for (const auto& p : pts) {
    if (p.kind != PointKind::Event) continue;
    for (const auto& q : pts) {
      if (q.kind != PointKind::Event || p.id == q.id) continue;
      if (closed.query(p.id, q.id) == PointRelation::Precedes) out.push_back({p.id, q.id});
    }
  }
  return out;
}

Interpretation interpret(const Discourse& d, const Lexicon& lexicon,
                         const std::vector<CausalAxiom>& axioms, InterpretOptions opts) {
  for (const auto& c : d.clauses)
    if (!lexicon.contains(c.verb))
      throw std::invalid_argument("clause " + c.id + " uses unknown verb lemma '" + c.verb + "'");
  check_axioms(axioms, lexicon);

  Interpretation out;
  const Tracer trace(opts.trace ? &out.trace : nullptr);
  auto fail = [&](const TemporalNetwork& net, Diagnostic diag) {
    out.felicitous = false;
    out.network = net.close();
    out.event_order = entailed_event_order(out.network);
    trace([&] { return "verdict: infelicitous (" + std::string(to_string(diag.code)) + ")"; });
    out.diagnostics.push_back(std::move(diag));
    return out;
  };

  // Tense stage.
  trace([] { return std::string("stage: tense"); });
  TemporalNetwork net;
  TenseResolutionContext ctx{net.speech(), {}};
  for (const auto& clause : d.clauses) {
    TenseResult r;
    try {
      r = resolve_tense(clause, ctx);
    } catch (const UnresolvedReferenceTime& e) {
      trace([&] { return "  clause " + clause.id + ": " + e.what(); });
      return fail(net, make_diagnostic(DiagnosticCode::UnresolvedReferenceTime, {clause.id}));
    }
    trace([&] {
      return "  mint " + r.event_time.id + " for clause " + clause.id + " (" +
             std::string(to_token(clause.tense)) + "), reference time " + r.reference_time.id;
    });
    for (const auto& c : r.new_constraints) trace([&] { return "    assert " + describe(c); });
    TemporalNetwork next = apply(net, r).close();
    if (!next.is_consistent()) {
      // Only a past perfect anchored to a non-past event can clash here.
      std::vector<std::string> ids;
      if (r.reference_time.source_clause) ids.push_back(*r.reference_time.source_clause);
      ids.push_back(clause.id);
      trace([&] { return "    clash: tense constraints of clause " + clause.id + " are unsatisfiable"; });
      return fail(net, make_diagnostic(DiagnosticCode::TemporalClash, std::move(ids)));
    }
    net = std::move(next);
    ctx.salient_event_times.push_back(r.event_time);
  }
  trace([&] { return "  closure: consistent; event order " + describe_order(entailed_event_order(net)); });

  // Coherence stage: candidates do not depend on the network, so an empty
  // licensed set is detected before searching.
  trace([] { return std::string("stage: coherence"); });
  std::vector<PairPlan> plans;
  for (std::size_t i = 1; i < d.clauses.size(); ++i) {
    PairPlan plan{&d.clauses[i - 1], &d.clauses[i], derive_cues(d, i), {}};
    auto proposed = candidate_relations(*plan.a, *plan.b, plan.cues, axioms);
    trace([&] {
      std::string line = "  pair (" + plan.a->id + ", " + plan.b->id + ") cues: " +
                         describe(plan.cues) + "; candidates:";
      if (proposed.empty()) line += " (none)";
      for (const auto& r : proposed) line += " " + std::string(to_string(r.kind));
      return line;
    });
    for (auto& rel : proposed) {
      // A connective states the relation outright; inferred relations need support.
      const bool licensed = (plan.cues.connective && relation_for(*plan.cues.connective) == rel.kind) ||
                            semantic_support(rel.kind, *plan.a, *plan.b, plan.cues, axioms);
      if (licensed)
        plan.candidates.push_back(std::move(rel));
      else
        trace([&] { return "    drop " + describe(rel) + ": no semantic support"; });
    }
    if (plan.candidates.empty())
      return fail(net, make_diagnostic(DiagnosticCode::NoCoherenceRelation,
                                       {plan.a->id, plan.b->id}));
    plans.push_back(std::move(plan));
  }

  std::vector<CoherenceRelation> chosen;
  std::optional<std::vector<CoherenceRelation>> first;
  std::optional<TemporalNetwork> first_net;
  std::size_t deepest_clash = 0;
  bool clashed = false;

  std::function<bool(std::size_t, const TemporalNetwork&)> search =
      [&](std::size_t p, const TemporalNetwork& cur) -> bool {
    if (p == plans.size()) {
      if (!first) {
        first = chosen;
        first_net = cur;
      }
      if (opts.enumerate_all) out.alternatives.push_back(chosen);
      return !opts.enumerate_all;
    }
    for (const auto& rel : plans[p].candidates) {
      TemporalNetwork next = cur;
      auto c = relation_constraint(rel);
      if (c) next = next.assert_constraint(c->first, c->second, c->relation).close();
      const bool ok = next.is_consistent();
      trace([&] {
        return "    try " + describe(rel) + ": " +
               (c ? "assert " + describe(*c) : std::string("no constraint")) + " -> " +
               (ok ? "consistent; event order " + describe_order(entailed_event_order(next))
                   : std::string("clash"));
      });
      if (!ok) {
        if (!clashed || p > deepest_clash) deepest_clash = p;
        clashed = true;
        continue;
      }
      chosen.push_back(rel);
      const bool stop = search(p + 1, next);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  };
  search(0, net);

  if (!first) {
    const PairPlan& plan = plans.at(deepest_clash);
    return fail(net, make_diagnostic(DiagnosticCode::TemporalClash, {plan.a->id, plan.b->id}));
  }
  out.felicitous = true;
  out.relations = *first;
  out.network = *first_net;
  out.event_order = entailed_event_order(out.network);
  trace([&] {
    std::string line = "verdict: felicitous;";
    if (out.relations.empty()) line += " no relations";
    for (const auto& r : out.relations) line += " " + describe(r);
    return line;
  });
  return out;
}

namespace {

nlohmann::ordered_json relations_json(const std::vector<CoherenceRelation>& rels) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rels)
    arr.push_back({{"kind", to_string(r.kind)}, {"first", r.first}, {"second", r.second}});
  return arr;
}

}  // namespace

std::string to_json(const Interpretation& in, bool with_alternatives) {
  nlohmann::ordered_json j;
  j["felicitous"] = in.felicitous;
  j["relations"] = relations_json(in.relations);
  j["event_order"] = nlohmann::ordered_json::array();
  for (const auto& e : in.event_order)
    j["event_order"].push_back({{"before", e.before}, {"after", e.after}});
  j["diagnostics"] = nlohmann::ordered_json::array();
  for (const auto& d : in.diagnostics)
    j["diagnostics"].push_back(
        {{"code", to_string(d.code)}, {"clauses", d.clause_ids}, {"message", d.message}});
  if (with_alternatives) {
    j["alternatives"] = nlohmann::ordered_json::array();
    for (const auto& alt : in.alternatives) j["alternatives"].push_back(relations_json(alt));
  }
  return j.dump(2) + "\n";
}

std::string to_text(const Interpretation& in, bool with_alternatives) {
  std::ostringstream os;
  os << (in.felicitous ? "felicitous" : "infelicitous") << '\n';
  if (!in.relations.empty()) {
    os << "relations:\n";
    for (const auto& r : in.relations) os << "  " << describe(r) << '\n';
  }
  if (!in.event_order.empty()) {
    os << "event order:\n";
    for (const auto& e : in.event_order) os << "  " << e.before << " < " << e.after << '\n';
  }
  if (!in.diagnostics.empty()) {
    os << "diagnostics:\n";
    for (const auto& d : in.diagnostics)
      os << "  " << to_string(d.code) << " [" << join(d.clause_ids, ", ") << "]: " << d.message
         << '\n';
  }
  if (with_alternatives) {
    os << "surviving assignments: " << in.alternatives.size() << '\n';
    for (const auto& alt : in.alternatives) {
      os << " ";
      if (alt.empty()) os << " (none needed)";
      for (const auto& r : alt) os << ' ' << describe(r);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace dtr
