#include "dtr/temporal_network.hpp"

#include <utility>

namespace dtr {

std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::Event: return "EVENT";
    case PointKind::Reference: return "REFERENCE";
    case PointKind::Speech: return "SPEECH";
  }
  return "?";
}

std::string_view to_string(PointRelation r) {
  switch (r) {
    case PointRelation::Precedes: return "PRECEDES";
    case PointRelation::Follows: return "FOLLOWS";
    case PointRelation::Equals: return "EQUALS";
    case PointRelation::Unconstrained: return "UNCONSTRAINED";
  }
  return "?";
}

PointRelation inverse(PointRelation r) {
  switch (r) {
    case PointRelation::Precedes: return PointRelation::Follows;
    case PointRelation::Follows: return PointRelation::Precedes;
    default: return r;
  }
}

namespace {

// Composition of r(i,k) with r(k,j) in the four-relation algebra.
PointRelation compose(PointRelation ik, PointRelation kj) {
  using R = PointRelation;
  if (ik == R::Equals) return kj;
  if (kj == R::Equals) return ik;
  if (ik == kj && ik != R::Unconstrained) return ik;
  return R::Unconstrained;
}

}  // namespace

TemporalNetwork::TemporalNetwork() {
  points_.push_back(TimePoint{std::string(kSpeechId), PointKind::Speech, std::nullopt});
  index_.emplace(std::string(kSpeechId), 0);
  rel_.assign(1, PointRelation::Equals);
}

TemporalNetwork TemporalNetwork::add_point(TimePoint p) const {
  if (index_.count(p.id)) throw std::invalid_argument("duplicate time point '" + p.id + "'");
  if (p.kind == PointKind::Speech)
    throw std::invalid_argument("a network holds exactly one speech point");
  if (!p.source_clause)
    throw std::invalid_argument("time point '" + p.id + "' needs a source clause");

  const std::size_t n = points_.size();
  TemporalNetwork out;
  out.points_ = points_;
  out.index_ = index_;
  out.consistent_ = consistent_;
  out.closed_ = closed_;
  out.index_.emplace(p.id, n);
  out.points_.push_back(std::move(p));
  out.rel_.assign((n + 1) * (n + 1), PointRelation::Unconstrained);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = at(i, j);
  out.at(n, n) = PointRelation::Equals;
  return out;
}

std::size_t TemporalNetwork::idx(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw UnknownPointError(std::string(id));
  return it->second;
}

const TimePoint& TemporalNetwork::point(std::string_view id) const { return points_[idx(id)]; }

void TemporalNetwork::mark_inconsistent() {
  // Canonical state so that inconsistent networks over the same points compare equal.
  consistent_ = false;
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      at(i, j) = i == j ? PointRelation::Equals : PointRelation::Unconstrained;
}

void TemporalNetwork::meet(std::size_t i, std::size_t j, PointRelation r) {
  if (!consistent_ || r == PointRelation::Unconstrained) return;
  PointRelation cur = at(i, j);
  if (cur == r) return;
  if (cur != PointRelation::Unconstrained) {
    mark_inconsistent();
    return;
  }
  at(i, j) = r;
  at(j, i) = inverse(r);
  closed_ = false;
}

TemporalNetwork TemporalNetwork::assert_constraint(std::string_view a, std::string_view b,
                                                   PointRelation rel) const {
  std::size_t i = idx(a), j = idx(b);
  TemporalNetwork out = *this;
  if (i == j) {
    if (rel == PointRelation::Precedes || rel == PointRelation::Follows) out.mark_inconsistent();
    return out;
  }
  out.meet(i, j, rel);
  return out;
}

void TemporalNetwork::close_in_place() {
  const std::size_t n = points_.size();
  bool changed = true;
  while (changed && consistent_) {
    changed = false;
    for (std::size_t k = 0; k < n && consistent_; ++k)
      for (std::size_t i = 0; i < n && consistent_; ++i) {
        if (i == k || at(i, k) == PointRelation::Unconstrained) continue;
        for (std::size_t j = 0; j < n && consistent_; ++j) {
          if (j == k) continue;
          PointRelation via = compose(at(i, k), at(k, j));
          if (via == PointRelation::Unconstrained || at(i, j) == via) continue;
          if (i == j || at(i, j) != PointRelation::Unconstrained) {
            // A strict cycle through i, or two different basic relations.
            mark_inconsistent();
            break;
          }
          at(i, j) = via;
          at(j, i) = inverse(via);
          changed = true;
        }
      }
  }
  closed_ = true;
}

TemporalNetwork TemporalNetwork::close() const {
  TemporalNetwork out = *this;
  if (!out.closed_) out.close_in_place();
  return out;
}

bool TemporalNetwork::is_consistent() const {
  if (!consistent_) return false;
  if (closed_) return true;
  return close().consistent_;
}

PointRelation TemporalNetwork::query(std::string_view a, std::string_view b) const {
  std::size_t i = idx(a), j = idx(b);
  if (!closed_) return close().query(a, b);
  if (!consistent_) throw InconsistentNetworkError();
  return at(i, j);
}

PointRelation TemporalNetwork::stored(std::string_view a, std::string_view b) const {
  return at(idx(a), idx(b));
}

std::vector<Constraint> TemporalNetwork::constraints() const {
  std::vector<Constraint> out;
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PointRelation r = at(i, j);
      if (r == PointRelation::Precedes || (r == PointRelation::Equals && i < j))
        out.push_back(Constraint{points_[i].id, points_[j].id, r});
    }
  return out;
}

bool TemporalNetwork::operator==(const TemporalNetwork& o) const {
  return points_ == o.points_ && rel_ == o.rel_ && consistent_ == o.consistent_ &&
         closed_ == o.closed_;
}

}  // namespace dtr
