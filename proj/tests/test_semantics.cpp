#include <gtest/gtest.h>

#include <algorithm>

#include "ctc/analysis.hpp"
#include "ctc/errors.hpp"
#include "ctc/generator.hpp"
#include "ctc/parser.hpp"
#include "ctc/semantics.hpp"
#include "helpers.hpp"

using namespace ctc;
using test::P;

namespace {

const DefEnv kEmpty;

std::vector<std::pair<std::string, std::string>> render(const std::vector<Transition>& ts) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& t : ts) out.emplace_back(t.step.str(), t.target.str());
  return out;
}

using Rendered = std::vector<std::pair<std::string, std::string>>;

}  // namespace

TEST(StrongSteps, ParallelFiresJointly) {
  EXPECT_EQ(render(strong_steps(P("a.nil || b.nil"), kEmpty)), (Rendered{{"a,b", "nil || nil"}}));
}

TEST(StrongSteps, Communication) {
  EXPECT_EQ(render(strong_steps(P("a.nil || 'a.nil"), kEmpty)), (Rendered{{"tau", "nil || nil"}}));
}

TEST(StrongSteps, Restriction) {
  EXPECT_EQ(render(strong_steps(P("(a.nil + b.nil) \\ {b}"), kEmpty)), (Rendered{{"a", "nil \\ {b}"}}));
}

TEST(StrongSteps, OneSideStuck) {
  EXPECT_EQ(render(strong_steps(P("a.nil || nil"), kEmpty)), (Rendered{{"a", "nil || nil"}}));
  EXPECT_EQ(render(strong_steps(P("nil || (a || b).nil"), kEmpty)), (Rendered{{"a,b", "nil || nil"}}));
}

TEST(StrongSteps, MultisetStep) {
  EXPECT_EQ(render(strong_steps(P("(a || a).nil"), kEmpty)), (Rendered{{"a,a", "nil"}}));
  EXPECT_EQ(render(strong_steps(P("a.nil || a.nil"), kEmpty)), (Rendered{{"a,a", "nil || nil"}}));
}

TEST(StrongSteps, RestrictedSideBlocksPartner) {
  // the right side can move, so the left may not move alone; the joint step
  // is forbidden by the restriction
  EXPECT_TRUE(strong_steps(P("(a.nil || b.nil) \\ {b}"), kEmpty).empty());
}

TEST(StrongSteps, Relabel) {
  EXPECT_EQ(render(strong_steps(P("('a.nil + b.nil)[c/a]"), kEmpty)),
            (Rendered{{"b", "nil[c/a]"}, {"'c", "nil[c/a]"}}));
}

TEST(StrongSteps, Constants) {
  auto env = parse_program("A = a.A;");
  EXPECT_EQ(render(strong_steps(P("A"), env)), (Rendered{{"a", "A"}}));
  EXPECT_THROW(strong_steps(P("B"), env), UnboundConstant);
}

TEST(WeakSteps, Examples) {
  EXPECT_EQ(render(weak_steps(P("tau.a.nil"), kEmpty)), (Rendered{{"a", "nil"}}));
  EXPECT_EQ(render(weak_steps(P("a.nil"), kEmpty)), (Rendered{{"a", "nil"}}));
  EXPECT_TRUE(weak_steps(P("tau.nil"), kEmpty).empty());
}

TEST(WeakSteps, TrailingTauAbsorbed) {
  auto r = render(weak_steps(P("a.tau.b.nil"), kEmpty));
  EXPECT_NE(std::find(r.begin(), r.end(), std::pair<std::string, std::string>{"a", "tau.b.nil"}), r.end());
  EXPECT_NE(std::find(r.begin(), r.end(), std::pair<std::string, std::string>{"a", "b.nil"}), r.end());
}

TEST(WeakSteps, MixedStepErasesTau) {
  auto r = render(weak_steps(P("(tau || a).nil"), kEmpty));
  EXPECT_EQ(r, (Rendered{{"a", "nil"}}));
}

TEST(WeakSteps, DivergenceBounded) {
  auto env = parse_program("D = tau.(D || tau.nil);");
  EXPECT_THROW(weak_steps(P("D"), env, 50), NonTerminatingTauClosure);
}

TEST(BuildLts, Examples) {
  auto env = parse_program("A = a.A;");
  Lts l = build_lts(P("A"), env, 10);
  EXPECT_EQ(l.num_states(), 1u);
  ASSERT_EQ(l.num_edges(), 1u);
  EXPECT_EQ(l.edges[0], (LtsEdge{0, Step{Action::name("a")}, 0}));

  Lts c = build_lts(P("a.b.nil"), kEmpty);
  EXPECT_EQ(c.num_states(), 3u);
  EXPECT_EQ(lts_to_text(c), "state 0 a.b.nil\nstate 1 b.nil\nstate 2 nil\ntrans 0 a 1\ntrans 1 b 2\n");
}

TEST(BuildLts, UnboundedChannelHitsBound) {
  // a channel that may always duplicate its content
  auto env = parse_program("Trans = 'x.nil + tau.(Trans || x.nil);");
  EXPECT_THROW(build_lts(P("Trans"), env, 100), StateBoundExceeded);
}

TEST(BuildLts, Exports) {
  Lts l = build_lts(P("a.nil || 'b.nil"), kEmpty);
  EXPECT_EQ(lts_to_text(l), "state 0 a.nil || 'b.nil\nstate 1 nil || nil\ntrans 0 a,'b 1\n");
  EXPECT_NE(lts_to_dot(l).find("label=\"a,'b\""), std::string::npos);
  EXPECT_NE(lts_to_json(l).find("\"initial\": 0"), std::string::npos);
  Lts t = build_lts(P("tau.nil"), kEmpty);
  EXPECT_NE(lts_to_text(t).find("trans 0 tau 1"), std::string::npos);
}

TEST(SaturateWeak, Examples) {
  Lts s = saturate_weak(build_lts(P("tau.a.nil"), kEmpty));
  // states: tau.a.nil, a.nil, nil
  bool found = false;
  for (const auto& e : s.edges)
    if (e.src == 0 && e.step == Step{Action::name("a")} && e.dst == 2) found = true;
  EXPECT_TRUE(found);

  Lts a = saturate_weak(build_lts(P("a.nil"), kEmpty));
  std::vector<LtsEdge> visible;
  for (const auto& e : a.edges)
    if (!e.step.empty()) visible.push_back(e);
  EXPECT_EQ(visible, (std::vector<LtsEdge>{{0, Step{Action::name("a")}, 1}}));

  Lts t = saturate_weak(build_lts(P("tau.nil"), kEmpty));
  for (const auto& e : t.edges) EXPECT_TRUE(e.step.empty());
  EXPECT_EQ(t.num_edges(), 3u);  // 0->0, 0->1, 1->1
}

TEST(SaturateWeak, EmptyLoopOnEveryState) {
  Lts s = saturate_weak(build_lts(P("a.tau.b.nil || c.nil"), kEmpty));
  for (std::uint32_t i = 0; i < s.num_states(); ++i) {
    auto [b, e] = s.out(i);
    EXPECT_TRUE(std::any_of(b, e, [&](const LtsEdge& x) { return x.step.empty() && x.dst == i; }));
  }
}

// Properties over random terms.
class SemanticsProperty : public ::testing::Test {
protected:
  const DefEnv& env = library_env();
  StepSemantics sem{library_env()};
};

TEST_F(SemanticsProperty, ParSymmetry) {
  TermGenerator gen(21);
  for (int i = 0; i < 200; ++i) {
    Process p = gen.term(2), q = gen.term(2);
    std::vector<Transition> swapped;
    for (const auto& t : sem.steps(Process::par(q, p)))
      swapped.push_back({t.step, Process::par(t.target.right(), t.target.left())});
    std::sort(swapped.begin(), swapped.end());
    EXPECT_EQ(sem.steps(Process::par(p, q)), swapped) << p.str() << " || " << q.str();
  }
}

TEST_F(SemanticsProperty, RestrictionSoundness) {
  TermGenerator gen(22);
  for (int i = 0; i < 300; ++i) {
    Process p = gen.term();
    auto l = gen.label_set();
    for (const auto& t : sem.steps(Process::restrict(p, l)))
      for (const auto& a : t.step) EXPECT_TRUE(a.is_tau() || !l.count(a.base())) << p.str();
  }
}

TEST_F(SemanticsProperty, RelabelNaturality) {
  TermGenerator gen(23);
  for (int i = 0; i < 300; ++i) {
    Process p = gen.term();
    RelabelFn f = gen.relabelling();
    std::vector<Transition> image;
    for (const auto& t : sem.steps(p)) image.push_back({apply_relabel(f, t.step), Process::relabel(t.target, f)});
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    EXPECT_EQ(sem.steps(Process::relabel(p, f)), image) << p.str();
  }
}

TEST_F(SemanticsProperty, StrongIsWeak) {
  TermGenerator gen(24);
  for (int i = 0; i < 200; ++i) {
    Process p = gen.term();
    auto weak = weak_steps(p, env);
    for (const auto& t : sem.steps(p)) {
      if (t.step.all_tau()) continue;
      Transition w{t.step.without_tau(), t.target};
      EXPECT_TRUE(std::binary_search(weak.begin(), weak.end(), w)) << p.str() << " --" << t.step.str() << "->";
    }
  }
}

TEST_F(SemanticsProperty, LtsDeterministic) {
  TermGenerator gen(25);
  for (int i = 0; i < 50; ++i) {
    Process p = gen.term();
    EXPECT_EQ(lts_to_text(build_lts(p, env)), lts_to_text(build_lts(p, env)));
  }
}
