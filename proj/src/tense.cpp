#include "dtr/tense.hpp"

#include <algorithm>

namespace dtr {

UnresolvedReferenceTime::UnresolvedReferenceTime(std::string clause_id)
    : std::runtime_error("clause " + clause_id +
                         ": past perfect needs a salient reference time but none has been introduced"),
      clause_id_(std::move(clause_id)) {}

std::string event_point_id(const std::string& clause_id) { return "t_" + clause_id; }

TenseResult resolve_tense(const Clause& clause, const TenseResolutionContext& ctx) {
  TenseResult r;
  r.event_time = TimePoint{event_point_id(clause.id), PointKind::Event, clause.id};
  const bool taken =
      r.event_time.id == ctx.speech_time.id ||
      std::any_of(ctx.salient_event_times.begin(), ctx.salient_event_times.end(),
                  [&](const TimePoint& p) { return p.id == r.event_time.id; });
  if (taken) throw std::invalid_argument("time point '" + r.event_time.id + "' already exists");

  const std::string& t = r.event_time.id;
  const std::string& now = ctx.speech_time.id;
  switch (clause.tense) {
    case TenseForm::SimplePast:
      r.reference_time = ctx.speech_time;
      r.new_constraints.push_back({t, now, PointRelation::Precedes});
      break;
    case TenseForm::SimplePresent:
      r.reference_time = ctx.speech_time;
      r.new_constraints.push_back({t, now, PointRelation::Equals});
      break;
    case TenseForm::SimpleFuture:
      r.reference_time = ctx.speech_time;
      r.new_constraints.push_back({now, t, PointRelation::Precedes});
      break;
    case TenseForm::PastPerfect:
      if (ctx.salient_event_times.empty()) throw UnresolvedReferenceTime(clause.id);
      r.reference_time = ctx.salient_event_times.back();
      r.new_constraints.push_back({t, r.reference_time.id, PointRelation::Precedes});
      r.new_constraints.push_back({r.reference_time.id, now, PointRelation::Precedes});
      break;
  }
  return r;
}

TemporalNetwork apply(const TemporalNetwork& net, const TenseResult& result) {
  TemporalNetwork out = net.add_point(result.event_time);
  for (const auto& c : result.new_constraints)
    out = out.assert_constraint(c.first, c.second, c.relation);
  return out;
}

TemporalNetwork tense_network(const Discourse& d) {
  TemporalNetwork net;
  TenseResolutionContext ctx{net.speech(), {}};
  for (const auto& clause : d.clauses) {
    TenseResult r = resolve_tense(clause, ctx);
    net = apply(net, r);
    ctx.salient_event_times.push_back(r.event_time);
  }
  return net.close();
}

}  // namespace dtr
