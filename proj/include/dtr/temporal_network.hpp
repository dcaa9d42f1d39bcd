#pragma once

// Point-algebra constraint network over time points.
//
// Relations are drawn from {<, >, =, ?}. The network is a value type: every
// mutating operation returns a new network. Contradictions are a state of
// the network (is_consistent() == false), never an exception.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dtr {

enum class PointKind { Event, Reference, Speech };

enum class PointRelation { Precedes, Follows, Equals, Unconstrained };

std::string_view to_string(PointKind k);
std::string_view to_string(PointRelation r);
PointRelation inverse(PointRelation r);

struct TimePoint {
  std::string id;
  PointKind kind = PointKind::Event;
  std::optional<std::string> source_clause;

  bool operator==(const TimePoint&) const = default;
};

// A single stored fact, always written in canonical direction: PRECEDES(a,b)
// or EQUALS(a,b) with a inserted before b.
struct Constraint {
  std::string first;
  std::string second;
  PointRelation relation = PointRelation::Unconstrained;

  bool operator==(const Constraint&) const = default;
};

class UnknownPointError : public std::invalid_argument {
 public:
  explicit UnknownPointError(const std::string& id)
      : std::invalid_argument("unknown time point '" + id + "'") {}
};

class InconsistentNetworkError : public std::logic_error {
 public:
  InconsistentNetworkError() : std::logic_error("query on an inconsistent temporal network") {}
};

class TemporalNetwork {
 public:
  static constexpr std::string_view kSpeechId = "speech";

  // A network holding only the speech point.
  TemporalNetwork();

  // Throws std::invalid_argument for duplicate ids, a second speech point, or
  // an event/reference point without a source clause.
  TemporalNetwork add_point(TimePoint p) const;

  // Meets rel into the stored relation on (a,b). Does not close.
  TemporalNetwork assert_constraint(std::string_view a, std::string_view b,
                                    PointRelation rel) const;

  TemporalNetwork close() const;

  // Consistency of the stored constraints; closes a copy when needed.
  bool is_consistent() const;

  // Strongest entailed relation between a and b. Throws
  // InconsistentNetworkError if the network has no model.
  PointRelation query(std::string_view a, std::string_view b) const;

  // Stored (not necessarily closed) relation.
  PointRelation stored(std::string_view a, std::string_view b) const;

  bool contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }
  const TimePoint& point(std::string_view id) const;
  const TimePoint& speech() const { return points_.front(); }
  const std::vector<TimePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool closed() const { return closed_; }

  // Non-trivial stored facts in canonical direction, ordered by point
  // insertion order.
  std::vector<Constraint> constraints() const;

  bool operator==(const TemporalNetwork& o) const;

 private:
  std::size_t idx(std::string_view id) const;
  PointRelation& at(std::size_t i, std::size_t j) { return rel_[i * points_.size() + j]; }
  PointRelation at(std::size_t i, std::size_t j) const { return rel_[i * points_.size() + j]; }
  void meet(std::size_t i, std::size_t j, PointRelation r);
  void mark_inconsistent();
  void close_in_place();

  std::vector<TimePoint> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PointRelation> rel_;  // row-major, rel_[i][j] relates point i to j
  bool consistent_ = true;
  bool closed_ = true;
};

}  // namespace dtr
