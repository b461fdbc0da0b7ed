#include <gtest/gtest.h>

#include <random>

#include "ctc/equivalence.hpp"
#include "ctc/errors.hpp"
#include "ctc/generator.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace ctc;

namespace {

std::shared_ptr<const EventStructure> random_pes(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 5), label(0, 1), pct(0, 99);
  for (;;) {
    auto es = std::make_shared<EventStructure>();
    int n = size(rng);
    for (int i = 0; i < n; ++i) es->add_event("x" + std::to_string(i), Action::name(label(rng) ? "a" : "b"));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int roll = pct(rng);
        if (roll < 30)
          es->add_cause(i, j);
        else if (roll < 55)
          es->add_conflict(i, j);
      }
    try {
      es->close();
      return es;
    } catch (const InvalidArgument&) {
      // conflict with an own cause; draw again
    }
  }
}

struct Tally {
  int pairs = 0, hp_true = 0, hhp_true = 0;
};

void compare(const std::shared_ptr<const EventStructure>& l, const std::shared_ptr<const EventStructure>& r,
             Tally& t, const std::string& what) {
  oracle::Oracle o(*l, *r);
  bool hp = es_hp_bisim(l, r, Strength::Strong).equivalent;
  bool hhp = es_hhp_bisim(l, r, Strength::Strong).equivalent;
  EXPECT_EQ(hp, o.hp()) << "hp " << what << "\n" << l->to_text() << "--\n" << r->to_text();
  EXPECT_EQ(hhp, o.hhp()) << "hhp " << what << "\n" << l->to_text() << "--\n" << r->to_text();
  ++t.pairs;
  t.hp_true += hp;
  t.hhp_true += hhp;
}

}  // namespace

TEST(Oracle, SanityOnKnownPairs) {
  auto l = test::U("a.nil || b.nil"), r = test::U("a.b.nil + b.a.nil");
  oracle::Oracle o(*l, *r);
  EXPECT_FALSE(o.hp());
  EXPECT_FALSE(o.hhp());
  oracle::Oracle same(*l, *l);
  EXPECT_TRUE(same.hp());
  EXPECT_TRUE(same.hhp());
}

TEST(Oracle, RandomEventStructures) {
  std::mt19937_64 rng(51);
  Tally t;
  for (int i = 0; i < 1500; ++i) {
    auto l = random_pes(rng);
    // random pairs are rarely equivalent, so every third one is reflexive
    auto r = i % 3 == 0 ? l : random_pes(rng);
    compare(l, r, t, "random #" + std::to_string(i));
  }
  EXPECT_GT(t.hp_true, 500);
  EXPECT_GT(t.pairs - t.hp_true, 300);
}

TEST(Oracle, UnfoldedTerms) {
  GeneratorOptions go;
  go.use_library = false;
  go.depth = 3;
  TermGenerator gen(52, go);
  DefEnv env;
  Tally t;
  std::vector<std::shared_ptr<const EventStructure>> pool;
  for (int i = 0; pool.size() < 250 && i < 20000; ++i) {
    Process p = gen.term();
    auto es = std::make_shared<const EventStructure>(unfold(p, env, UnfoldOptions{}));
    if (es->size() <= 5 && es->open_groups().empty()) pool.push_back(es);
  }
  ASSERT_EQ(pool.size(), 250u);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j : {i, (i * 7 + 3) % pool.size(), (i + 1) % pool.size()})
      compare(pool[i], pool[j], t, std::to_string(i) + "/" + std::to_string(j));
  EXPECT_GT(t.hp_true, 250);
}

TEST(Oracle, HpNotHhpFound) {
  // the oracle itself separates the two on the absorption structures
  auto build = [](bool extra) {
    auto es = std::make_shared<EventStructure>();
    std::vector<std::vector<EventId>> parts;
    EventId a1 = es->add_event("a1", Action::name("a")), b1 = es->add_event("b1", Action::name("b")),
            c1 = es->add_event("c1", Action::name("c"));
    es->add_conflict(b1, c1);
    parts.push_back({a1, b1, c1});
    EventId a2 = es->add_event("a2", Action::name("a")), c2 = es->add_event("c2", Action::name("c")),
            b2 = es->add_event("b2", Action::name("b"));
    es->add_conflict(a2, c2);
    parts.push_back({a2, c2, b2});
    if (extra) parts.push_back({es->add_event("a3", Action::name("a")), es->add_event("b3", Action::name("b"))});
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        for (auto x : parts[i])
          for (auto y : parts[j]) es->add_conflict(x, y);
    es->close();
    return es;
  };
  auto l = build(true), r = build(false);
  oracle::Oracle o(*l, *r);
  EXPECT_TRUE(o.hp());
  EXPECT_FALSE(o.hhp());
}
