#include <gtest/gtest.h>

#include "dtr/discourse.hpp"
#include "support/generators.hpp"

namespace dtr {
namespace {

Lexicon slip_spill() { return parse_lexicon("verb slip class=achievement\nverb spill class=accomplishment\n"); }

// Runs fn expecting a ParseError at the given position.
template <class Fn>
void expect_parse_error(Fn&& fn, std::size_t line, std::size_t column, const std::string& needle) {
  try {
    fn();
    FAIL() << "expected ParseError containing '" << needle << "'";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(ParseDiscourse, TwoSimplePasts) {
  auto d = parse_discourse(
      "clause id=c1 subj=Max verb=slip tense=SPAST\n"
      "clause id=c2 subj=he verb=spill obj=\"a bucket of water\" tense=SPAST",
      slip_spill());
  ASSERT_EQ(d.clauses.size(), 2u);
  EXPECT_EQ(d.clauses[0].id, "c1");
  EXPECT_EQ(d.clauses[0].subject, "Max");
  EXPECT_EQ(d.clauses[1].object, "a bucket of water");
  EXPECT_EQ(d.clauses[1].tense, TenseForm::SimplePast);
  EXPECT_FALSE(d.clauses[0].connective);
  EXPECT_FALSE(d.clauses[1].connective);
  EXPECT_FALSE(d.context_question);
}

TEST(ParseDiscourse, SingleClause) {
  auto d = parse_discourse("clause id=c1 subj=Max verb=slip tense=SPAST", slip_spill());
  EXPECT_EQ(d.clauses.size(), 1u);
}

TEST(ParseDiscourse, ConnectiveOnFirstClauseRejected) {
  expect_parse_error(
      [] { parse_discourse("clause id=c1 conn=because subj=Max verb=slip tense=SPAST", slip_spill()); },
      1, 14, "first clause");
}

TEST(ParseDiscourse, HeaderCommentsAndFieldOrder) {
  auto d = parse_discourse(
      "# a comment\n"
      "\n"
      "@context question=\"What bad things happened to Max today?\"\r\n"
      "  clause tense=SPAST verb=slip subj=\"Max Smith\" id=a\n"
      "clause id=b conn=and_also subj=he verb=spill tense=PPERF\n",
      slip_spill());
  EXPECT_EQ(d.context_question, "What bad things happened to Max today?");
  EXPECT_EQ(d.clauses[0].subject, "Max Smith");
  EXPECT_EQ(d.clauses[1].connective, ConnectiveForm::AndAlso);
  EXPECT_EQ(d.clauses[1].tense, TenseForm::PastPerfect);
}

TEST(ParseDiscourse, Errors) {
  const Lexicon lex = slip_spill();
  expect_parse_error([&] { parse_discourse("clause id=c1 subj=Max verb=run tense=SPAST", lex); }, 1, 28,
                     "unknown verb lemma 'run'");
  expect_parse_error(
      [&] {
        parse_discourse("clause id=c1 subj=Max verb=slip tense=SPAST\n"
                        "clause id=c1 subj=he verb=spill tense=SPAST",
                        lex);
      },
      2, 11, "duplicate clause id");
  expect_parse_error([&] { parse_discourse("clause id=c1 subj=Max verb=slip tense=PAST", lex); }, 1, 39,
                     "unknown tense");
  expect_parse_error([&] { parse_discourse("clause id=c1 subj=Max verb=slip", lex); }, 1, 1,
                     "missing field 'tense'");
  expect_parse_error([&] { parse_discourse("clause id=c1 subj=Max verb=slip tense=SPAST color=red", lex); },
                     1, 45, "unknown field");
  expect_parse_error([&] { parse_discourse("clause id=c1 id=c2 subj=Max verb=slip tense=SPAST", lex); }, 1,
                     14, "duplicate field");
  expect_parse_error([&] { parse_discourse("clause id=c1 subj=\"Max verb=slip tense=SPAST", lex); }, 1, 19,
                     "unterminated string");
  expect_parse_error([&] { parse_discourse("clause id=c1 subj=\"a\\qb\" verb=slip tense=SPAST", lex); }, 1,
                     21, "unknown escape");
  expect_parse_error([&] { parse_discourse("clause id=c1 subj=Max verb=slip obj=water tense=SPAST", lex); },
                     1, 37, "'obj' must be a quoted string");
  expect_parse_error([&] { parse_discourse("clause id=c-1 subj=Max verb=slip tense=SPAST", lex); }, 1, 11,
                     "identifier");
  expect_parse_error([&] { parse_discourse("sentence id=c1", lex); }, 1, 1, "expected 'clause'");
  expect_parse_error([&] { parse_discourse("# nothing here\n", lex); }, 1, 1, "no clauses");
  expect_parse_error(
      [&] {
        parse_discourse("clause id=c1 subj=Max verb=slip tense=SPAST\n@context question=\"q\"", lex);
      },
      2, 1, "precede");
  expect_parse_error([&] { parse_discourse("@context question=q\nclause id=c1 subj=Max verb=slip tense=SPAST", lex); },
                     1, 19, "quoted");
  expect_parse_error([&] { parse_discourse("clause id=c1 conn=since subj=he verb=slip tense=SPAST", lex); },
                     1, 19, "unknown connective");
}

TEST(ParseDiscourse, EscapesDecode) {
  auto d = parse_discourse(R"(clause id=c1 subj=Max verb=slip obj="say \"hi\"\\\n" tense=SPAST)", slip_spill());
  EXPECT_EQ(d.clauses[0].object, "say \"hi\"\\\n");
}

TEST(ParseLexicon, Entries) {
  auto lex = parse_lexicon("verb slip class=achievement\nverb spill class=accomplishment");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.aspect("slip"), AspectClass::Achievement);
  EXPECT_EQ(lex.aspect("spill"), AspectClass::Accomplishment);
}

TEST(ParseLexicon, EmptyInput) { EXPECT_TRUE(parse_lexicon("").empty()); }

TEST(ParseLexicon, Errors) {
  expect_parse_error([] { parse_lexicon("verb slip class=state"); }, 1, 17, "unknown aspect class");
  expect_parse_error([] { parse_lexicon("verb slip class=achievement\nverb slip class=accomplishment"); }, 2, 6,
                     "duplicate lemma");
  expect_parse_error([] { parse_lexicon("noun slip class=achievement"); }, 1, 1, "expected 'verb'");
  expect_parse_error([] { parse_lexicon("verb slip"); }, 1, 1, "class=");
}

TEST(ParseAxioms, SlippingLaw) {
  auto axioms = parse_axioms("cause spill slip");
  ASSERT_EQ(axioms.size(), 1u);
  EXPECT_EQ(axioms[0], (CausalAxiom{"spill", "slip"}));
}

TEST(ParseAxioms, EmptyAndDuplicates) {
  EXPECT_TRUE(parse_axioms("").empty());
  EXPECT_EQ(parse_axioms("cause spill slip\ncause spill slip"), (std::vector<CausalAxiom>{{"spill", "slip"}}));
  EXPECT_EQ(parse_axioms("cause a b\ncause c d\ncause a b"),
            (std::vector<CausalAxiom>{{"a", "b"}, {"c", "d"}}));
}

TEST(ParseAxioms, MalformedLines) {
  expect_parse_error([] { parse_axioms("cause spill"); }, 1, 12, "expected verb lemma");
  expect_parse_error([] { parse_axioms("cause spill slip fall"); }, 1, 18, "trailing");
  expect_parse_error([] { parse_axioms("causes spill slip"); }, 1, 1, "expected 'cause'");
}

TEST(CheckAxioms, UnknownLemma) {
  EXPECT_NO_THROW(check_axioms(parse_axioms("cause spill slip"), slip_spill()));
  EXPECT_THROW(check_axioms(parse_axioms("cause spill fall"), slip_spill()), std::invalid_argument);
}

TEST(Canonical, RoundTripProperty) {
  testing::Rng rng(7);
  const Lexicon lex = testing::pool_lexicon();
  for (int i = 0; i < 500; ++i) {
    Discourse d = testing::random_discourse(rng);
    d.clauses.front().connective.reset();
    if (i % 3 == 0) d.clauses.front().subject = "Max \"the\" Slipper";
    const std::string text = to_canonical(d);
    Discourse back = parse_discourse(text, lex);
    ASSERT_EQ(back, d) << text;
    ASSERT_EQ(to_canonical(back), text);
  }
}

TEST(Parsing, ClauseOrderFollowsLineOrder) {
  testing::Rng rng(11);
  const Lexicon lex = testing::pool_lexicon();
  for (int i = 0; i < 200; ++i) {
    Discourse d = testing::random_discourse(rng, {8, 0.3, 0.2});
    d.clauses.front().connective.reset();
    // Reverse ids so that id order and line order disagree.
    for (std::size_t k = 0; k < d.clauses.size(); ++k)
      d.clauses[k].id = "z" + std::to_string(d.clauses.size() - k);
    Discourse back = parse_discourse(to_canonical(d), lex);
    ASSERT_EQ(back.clauses.size(), d.clauses.size());
    for (std::size_t k = 0; k < d.clauses.size(); ++k) EXPECT_EQ(back.clauses[k].id, d.clauses[k].id);
  }
}

TEST(Parsing, EveryLineParsesOrErrorsWithPosition) {
  // Mutate valid lines byte by byte; each result either parses or throws a
  // positioned ParseError that points inside the text.
  const Lexicon lex = slip_spill();
  const std::string base = "clause id=c1 subj=\"Max\" verb=slip obj=\"w\" tense=SPAST";
  const std::string junk = "=\" \\#x";
  for (std::size_t pos = 0; pos < base.size(); ++pos)
    for (char c : junk) {
      std::string text = base;
      text[pos] = c;
      try {
        auto d = parse_discourse(text, lex);
        EXPECT_EQ(d.clauses.size(), 1u);
      } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_GE(e.column(), 1u);
        EXPECT_LE(e.column(), text.size() + 1);
      }
    }
}

}  // namespace
}  // namespace dtr
