#pragma once

// Tense as indefinite reference. Every main-verb tense mints a fresh event
// point ordered against a discourse reference time; simple tenses take the
// speech time as reference, the past perfect's auxiliary picks up the most
// recent salient event time.

#include <stdexcept>
#include <string>
#include <vector>

#include "dtr/discourse.hpp"
#include "dtr/temporal_network.hpp"

namespace dtr {

struct TenseResolutionContext {
  TimePoint speech_time;
  // Event points of earlier clauses, most recent last.
  std::vector<TimePoint> salient_event_times;
};

struct TenseResult {
  TimePoint event_time;
  TimePoint reference_time;
  std::vector<Constraint> new_constraints;
};

// Raised when a past perfect has no salient time to anchor to.
class UnresolvedReferenceTime : public std::runtime_error {
 public:
  explicit UnresolvedReferenceTime(std::string clause_id);
  const std::string& clause_id() const { return clause_id_; }

 private:
  std::string clause_id_;
};

// "t_" + clause id.
std::string event_point_id(const std::string& clause_id);

TenseResult resolve_tense(const Clause& clause, const TenseResolutionContext& ctx);

// Adds the result's event point and constraints to net (unclosed).
TemporalNetwork apply(const TemporalNetwork& net, const TenseResult& result);

// Runs tense resolution over a whole discourse with no coherence reasoning.
// Throws UnresolvedReferenceTime on the first unanchored past perfect.
TemporalNetwork tense_network(const Discourse& d);

}  // namespace dtr
