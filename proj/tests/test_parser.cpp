#include <gtest/gtest.h>

#include "ctc/errors.hpp"
#include "ctc/generator.hpp"
#include "ctc/parser.hpp"
#include "helpers.hpp"

using namespace ctc;
using test::P;

namespace {

Process a_nil() { return Process::prefix(Action::name("a"), Process::nil()); }
Process b_nil() { return Process::prefix(Action::name("b"), Process::nil()); }

}  // namespace

TEST(ParseTerm, Sum) { EXPECT_EQ(P("a.nil + b.nil"), Process::sum(a_nil(), b_nil())); }

TEST(ParseTerm, MultiPrefix) {
  EXPECT_EQ(P("(a || b).nil"), Process::multi_prefix(Step{Action::name("a"), Action::name("b")}, Process::nil()));
}

TEST(ParseTerm, ComplementaryMultiPrefixRejected) {
  try {
    P("(a || 'a).nil");
    FAIL() << "expected SourceError";
  } catch (const SourceError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_NE(e.message().find("complementary"), std::string::npos);
  }
}

TEST(ParseTerm, Precedence) {
  // postfix, then prefix, then ||, then +
  EXPECT_EQ(P("a.nil || b.nil + c.nil"), Process::sum(Process::par(a_nil(), b_nil()), P("c.nil")));
  EXPECT_EQ(P("a.b.nil \\ {b}"), P("a.b.(nil \\ {b})"));
  EXPECT_EQ(P("(a.b.nil) \\ {b}"), Process::restrict(Process::prefix(Action::name("a"), b_nil()), {Symbol("b")}));
  EXPECT_EQ(P("(a.nil + b.nil)[c/a, d/b]"),
            Process::relabel(Process::sum(a_nil(), b_nil()), RelabelFn({{Symbol("a"), Symbol("c")},
                                                                        {Symbol("b"), Symbol("d")}})));
}

TEST(ParseTerm, ConamesTauAndConstants) {
  Process p = P("'a.tau.A");
  EXPECT_EQ(p.action(), Action::coname("a"));
  EXPECT_TRUE(p.body().action().is_tau());
  EXPECT_EQ(p.body().body().kind(), ProcKind::Const);
}

TEST(ParseTerm, CommentsIgnored) { EXPECT_EQ(P("a.nil # trailing\n + b.nil"), Process::sum(a_nil(), b_nil())); }

TEST(ParseTerm, Errors) {
  for (const char* bad : {"a.nil +", "a.(b.nil", "a", "'tau.nil", "nil \\ {tau}", "nil[b/]", "a..nil", "%"})
    EXPECT_THROW(P(bad), SourceError) << bad;
}

TEST(ParseTerm, ErrorPosition) {
  try {
    parse_program("A = a.nil;\n  B = a..nil;");
    FAIL();
  } catch (const SourceError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 9);
  }
}

TEST(ParseProgram, Examples) {
  auto env = parse_program("A = a.A;");
  ASSERT_TRUE(env.contains(Symbol("A")));
  EXPECT_EQ(env.at(Symbol("A")), Process::prefix(Action::name("a"), Process::constant("A")));

  try {
    parse_program("A = A + a.nil;");
    FAIL();
  } catch (const UnguardedRecursion& e) {
    EXPECT_EQ(e.name(), "A");
  }
  EXPECT_THROW(parse_program("A = a.B;"), UnboundConstant);
  EXPECT_THROW(parse_program("A = a.nil; A = b.nil;"), DuplicateDefinition);
}

TEST(ParseProgram, MutualUnguardedRecursion) {
  EXPECT_THROW(parse_program("A = B; B = A + a.nil;"), UnguardedRecursion);
  EXPECT_NO_THROW(parse_program("A = B; B = a.A;"));
}

TEST(ParseProgram, PrintRoundTrip) {
  auto env = parse_program("A = (a || 'b).A + tau.B \\ {c};\nB = (c.nil || 'c.B)[d/c];\n");
  auto again = parse_program(env.str());
  EXPECT_EQ(again.str(), env.str());
  for (Symbol n : env.order()) EXPECT_EQ(again.at(n), env.at(n));
}

// parse(print(p)) == p on random terms, and print is a fixed point.
TEST(RoundTrip, RandomTerms) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    TermGenerator gen(seed, GeneratorOptions{5, 3, 4, true});
    for (int i = 0; i < 250; ++i) {
      Process p = gen.term();
      Process q = parse_term(p.str());
      EXPECT_EQ(q, p) << p.str();
      EXPECT_EQ(q.str(), p.str());
    }
  }
}

TEST(RoundTrip, HandWrittenSpellings) {
  for (const char* text : {"a.nil + b.nil + c.nil", "a.(b.nil + c.nil)", "(a.nil || b.nil) || c.nil",
                           "a.nil || (b.nil || c.nil)", "((a.nil + b.nil) \\ {a})[c/b]", "(a || a).nil",
                           "tau.(a.nil || 'a.nil) \\ {a}"}) {
    Process p = P(text);
    EXPECT_EQ(P(p.str()), p) << text << " printed as " << p.str();
  }
}
