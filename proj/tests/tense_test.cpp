#include <gtest/gtest.h>

#include <algorithm>

#include "dtr/tense.hpp"
#include "support/generators.hpp"

namespace dtr {
namespace {

using R = PointRelation;

Clause clause(const std::string& id, const std::string& verb, TenseForm tense) {
  Clause c;
  c.id = id;
  c.subject = "Max";
  c.verb = verb;
  c.tense = tense;
  return c;
}

TenseResolutionContext empty_context() { return {TemporalNetwork().speech(), {}}; }

TEST(ResolveTense, SimplePastIsNotAnaphoric) {
  auto ctx = empty_context();
  ctx.salient_event_times.push_back(TimePoint{"t_c0", PointKind::Event, "c0"});
  auto r = resolve_tense(clause("c1", "slip", TenseForm::SimplePast), ctx);
  EXPECT_EQ(r.event_time.id, "t_c1");
  EXPECT_EQ(r.event_time.kind, PointKind::Event);
  EXPECT_EQ(r.event_time.source_clause, "c1");
  EXPECT_EQ(r.reference_time, ctx.speech_time);
  ASSERT_EQ(r.new_constraints.size(), 1u);
  EXPECT_EQ(r.new_constraints[0], (Constraint{"t_c1", "speech", R::Precedes}));
}

TEST(ResolveTense, PresentAndFuture) {
  auto pres = resolve_tense(clause("c1", "slip", TenseForm::SimplePresent), empty_context());
  EXPECT_EQ(pres.reference_time.id, "speech");
  EXPECT_EQ(pres.new_constraints, (std::vector<Constraint>{{"t_c1", "speech", R::Equals}}));
  auto fut = resolve_tense(clause("c1", "slip", TenseForm::SimpleFuture), empty_context());
  EXPECT_EQ(fut.reference_time.id, "speech");
  EXPECT_EQ(fut.new_constraints, (std::vector<Constraint>{{"speech", "t_c1", R::Precedes}}));
}

TEST(ResolveTense, PastPerfectPicksUpSalientEvent) {
  auto ctx = empty_context();
  ctx.salient_event_times.push_back(TimePoint{"t_slip", PointKind::Event, "slip"});
  auto r = resolve_tense(clause("spill", "spill", TenseForm::PastPerfect), ctx);
  EXPECT_EQ(r.reference_time.id, "t_slip");
  EXPECT_EQ(r.new_constraints, (std::vector<Constraint>{{"t_spill", "t_slip", R::Precedes},
                                                        {"t_slip", "speech", R::Precedes}}));
}

TEST(ResolveTense, PastPerfectUsesMostRecent) {
  auto ctx = empty_context();
  ctx.salient_event_times.push_back(TimePoint{"t_a", PointKind::Event, "a"});
  ctx.salient_event_times.push_back(TimePoint{"t_b", PointKind::Event, "b"});
  EXPECT_EQ(resolve_tense(clause("c", "spill", TenseForm::PastPerfect), ctx).reference_time.id, "t_b");
}

TEST(ResolveTense, PastPerfectWithoutContext) {
  try {
    resolve_tense(clause("spill", "spill", TenseForm::PastPerfect), empty_context());
    FAIL() << "expected UnresolvedReferenceTime";
  } catch (const UnresolvedReferenceTime& e) {
    EXPECT_EQ(e.clause_id(), "spill");
  }
}

TEST(ResolveTense, CollidingIdRejected) {
  auto ctx = empty_context();
  ctx.salient_event_times.push_back(TimePoint{"t_c1", PointKind::Event, "c1"});
  EXPECT_THROW(resolve_tense(clause("c1", "slip", TenseForm::SimplePast), ctx), std::invalid_argument);
}

TEST(TenseProperty, SimplePastsStayUnordered) {
  testing::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    Discourse d = testing::random_discourse(rng, {6, 0.0, 0.0});
    for (auto& c : d.clauses) c.tense = TenseForm::SimplePast;
    auto net = tense_network(d);
    for (const auto& a : d.clauses)
      for (const auto& b : d.clauses)
        if (a.id != b.id)
          ASSERT_EQ(net.query(event_point_id(a.id), event_point_id(b.id)), R::Unconstrained);
  }
}

TEST(TenseProperty, PastPerfectPrecedesSpeech) {
  testing::Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    Discourse d = testing::random_discourse(rng, {6, 0.0, 0.0});
    d.clauses.front().tense = TenseForm::SimplePast;
    const bool past_only = std::all_of(d.clauses.begin(), d.clauses.end(), [](const Clause& c) {
      return c.tense == TenseForm::SimplePast || c.tense == TenseForm::PastPerfect;
    });
    auto net = tense_network(d);
    if (past_only) ASSERT_TRUE(net.is_consistent());
    if (!net.is_consistent()) continue;
    for (const auto& c : d.clauses)
      if (c.tense == TenseForm::PastPerfect)
        ASSERT_EQ(net.query(event_point_id(c.id), "speech"), R::Precedes);
  }
}

TEST(TenseNetwork, PastPerfectAfterFutureClashes) {
  Discourse d{{clause("c1", "slip", TenseForm::SimpleFuture), clause("c2", "spill", TenseForm::PastPerfect)}, {}};
  EXPECT_FALSE(tense_network(d).is_consistent());
}

TEST(TenseProperty, FreshEventIds) {
  testing::Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    Discourse d = testing::random_discourse(rng, {6, 0.0, 0.0});
    d.clauses.front().tense = TenseForm::SimplePast;
    auto net = tense_network(d);  // add_point throws on any collision
    EXPECT_EQ(net.size(), d.clauses.size() + 1);
  }
}

TEST(TenseProperty, InitialPastPerfectAlwaysUnresolved) {
  testing::Rng rng(34);
  for (int i = 0; i < 300; ++i) {
    Discourse d = testing::random_discourse(rng);
    d.clauses.front().tense = TenseForm::PastPerfect;
    EXPECT_THROW(tense_network(d), UnresolvedReferenceTime);
  }
}

}  // namespace
}  // namespace dtr
