#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cyclattice/errors.hpp"
#include "cyclattice/poset.hpp"
#include "test_support.hpp"

using namespace cyc;

namespace {

Condition S(std::initializer_list<PosInt> lengths) { return Condition{CycleSet(lengths)}; }

bool atMost(CompareResult r) { return r == CompareResult::StrictlyBelow || r == CompareResult::Equivalent; }

const PrimeSet kPrimes235{2, 3, 5};

std::size_t unionNode(const HasseGraph& g, const CycleSet& c) {
  const CycleSet target = canon(c);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].representative == target) return i;
  ADD_FAILURE() << "no node for " << c.str();
  return 0;
}

std::size_t conditionNode(const HasseGraph& g, const CycleSet& c) {
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (equivalent(Condition{g.nodes[i].representative}, Condition{c})) return i;
  ADD_FAILURE() << "no node for " << c.str();
  return 0;
}

bool hasCover(const HasseGraph& g, std::size_t lo, std::size_t hi) {
  return std::find(g.covers.begin(), g.covers.end(), std::make_pair(lo, hi)) != g.covers.end();
}

// Node labels and cover edges (lower, upper) of the three-prime diagrams.
const std::map<std::string, CycleSet> kUnionDiagram{
    {"0", {2, 3, 5}}, {"00", {6, 10, 15}}, {"11", {2, 15}}, {"12", {3, 10}}, {"13", {5, 6}},
    {"21", {10, 15}}, {"22", {6, 15}},     {"23", {6, 10}}, {"31", {2, 3}},  {"32", {30}},
    {"33", {2, 5}},   {"34", {3, 5}},      {"41", {6}},     {"42", {10}},    {"43", {15}},
    {"51", {2}},      {"52", {3}},         {"53", {5}},     {"60", {1}}};
const std::map<std::string, CycleSet> kConditionDiagram{
    {"0", {1}},        {"00", {2, 3, 5}}, {"11", {3, 5}},   {"12", {2, 5}}, {"13", {2, 3}},
    {"21", {5, 6}},    {"22", {3, 10}},   {"23", {2, 15}},  {"31", {5}},    {"32", {6, 10, 15}},
    {"33", {3}},       {"34", {2}},       {"41", {10, 15}}, {"42", {6, 15}}, {"43", {6, 10}},
    {"51", {15}},      {"52", {10}},      {"53", {6}},      {"60", {30}}};
const std::vector<std::pair<std::string, std::string>> kDiagramEdges{
    {"0", "00"},  {"00", "11"}, {"00", "12"}, {"00", "13"}, {"11", "21"}, {"11", "22"}, {"12", "21"},
    {"12", "23"}, {"13", "22"}, {"13", "23"}, {"21", "31"}, {"21", "32"}, {"22", "32"}, {"22", "33"},
    {"23", "32"}, {"23", "34"}, {"31", "41"}, {"32", "41"}, {"32", "42"}, {"32", "43"}, {"33", "42"},
    {"34", "43"}, {"41", "51"}, {"41", "52"}, {"42", "51"}, {"42", "53"}, {"43", "52"}, {"43", "53"},
    {"51", "60"}, {"52", "60"}, {"53", "60"}};

}  // namespace

TEST(Satisfies, Examples) {
  EXPECT_TRUE(satisfies(CycleSet{10}, S({2, 5})));
  for (PosInt n = 2; n <= 8; ++n) EXPECT_FALSE(satisfies(CycleSet{n}, Condition{CycleSet{n}})) << n;
  EXPECT_FALSE(satisfies(CycleSet{5, 6}, S({2, 5})));
  EXPECT_FALSE(satisfies(CycleSet{2, 3, 5}, S({6, 20, 15})));
  EXPECT_TRUE(satisfies(CycleSet{2, 15}, S({3, 5, 15})));
  EXPECT_TRUE(satisfies(CycleSet{3}, S({2})));
  EXPECT_TRUE(satisfies(CycleSet{1}, S({2, 3})));
  EXPECT_TRUE(satisfies(CycleSet{4}, S({1})));
}

TEST(Satisfies, WitnessViolatesCriterion) {
  const auto h = unsatisfyingMap(CycleSet{5, 6}, S({2, 5}));
  ASSERT_TRUE(h.has_value());
  PosInt period = 1;
  for (const auto& [b, a] : *h) {
    EXPECT_TRUE((CycleSet{2, 5}).contains(b));
    EXPECT_TRUE((CycleSet{5, 6}).contains(a));
    period = lcm(period, dotdiv(a, b));
  }
  for (PosInt a : CycleSet{5, 6}) EXPECT_NE(period % a, 0u);
  EXPECT_FALSE(unsatisfyingMap(CycleSet{10}, S({2, 5})).has_value());
}

TEST(Satisfies, MapGuard) {
  Limits limits;
  limits.maxMaps = 8;
  EXPECT_THROW(satisfies(CycleSet{2, 3, 5}, S({2, 3}), limits), ResourceError);
}

TEST(Npc, Examples) {
  EXPECT_EQ(npc(CycleSet{2, 3}).maximalSets(), (std::vector<PrimeSet>{PrimeSet{2, 3}}));
  EXPECT_EQ(npc(CycleSet{6}).maximalSets(), (std::vector<PrimeSet>{PrimeSet{2}, PrimeSet{3}}));
  EXPECT_TRUE(npc(CycleSet{1}).empty());
  EXPECT_EQ(npc(CycleSet{6, 20}).maximalSets(), (std::vector<PrimeSet>{PrimeSet{2, 3}, PrimeSet{3, 5}}));
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(CycleSet{2, 3, 5}, CycleSet{6, 20, 15}), CompareResult::StrictlyBelow);
  EXPECT_FALSE(atMost(compare(CycleSet{2, 15}, CycleSet{6, 20, 15})));
  EXPECT_EQ(compare(CycleSet{6, 20}, CycleSet{3, 10}), CompareResult::Equivalent);
  EXPECT_EQ(compare(CycleSet{3}, CycleSet{9}), CompareResult::Equivalent);
  EXPECT_EQ(compare(CycleSet{6}, CycleSet{3}), CompareResult::StrictlyBelow);
  EXPECT_EQ(compare(CycleSet{3}, CycleSet{6}), CompareResult::StrictlyAbove);
  EXPECT_EQ(compare(CycleSet{2}, CycleSet{3}), CompareResult::Incomparable);
  EXPECT_EQ(toString(CompareResult::Incomparable), "||");
}

TEST(Canon, Examples) {
  EXPECT_EQ(canon(CycleSet{6, 20}), (CycleSet{3, 10}));
  EXPECT_EQ(canon(CycleSet{9}), (CycleSet{3}));
  EXPECT_EQ(canon(CycleSet{1}), (CycleSet{1}));
  EXPECT_EQ(canon(CycleSet{2, 6}), (CycleSet{2}));
}

TEST(ConditionLattice, MeetAndJoin) {
  EXPECT_EQ(condMeet(S({2}), S({3})), S({2, 3}));
  EXPECT_TRUE(equivalent(condMeet(S({6, 20}), S({6, 20})), S({6, 20})));
  EXPECT_TRUE(equivalent(condMeet(S({2}), S({2, 3})), S({2, 3})));
  EXPECT_TRUE(equivalent(condJoin(S({2}), S({3})), S({6})));
  EXPECT_TRUE(equivalent(condJoin(S({2, 3}), S({3, 5})), S({3, 10})));
  // The trivial condition is the bottom: neutral for join, absorbing for meet.
  EXPECT_TRUE(equivalent(condJoin(S({6, 20}), S({1})), S({6, 20})));
  EXPECT_TRUE(isTrivial(condMeet(S({6, 20}), S({1}))));
}

TEST(UnionLattice, MeetAndJoin) {
  EXPECT_EQ(ucMeet(CycleSet{2}, CycleSet{3}), (CycleSet{6}));
  EXPECT_EQ(ucJoin(CycleSet{2}, CycleSet{3}), (CycleSet{1}));
  EXPECT_EQ(ucMeet(CycleSet{6, 20}, CycleSet{1}), canon(CycleSet{6, 20}));
  EXPECT_EQ(ucJoin(CycleSet{6, 20}, CycleSet{2, 3, 5}), canon(CycleSet{6, 20}));
}

TEST(Hasse, Counts) {
  const auto uc23 = enumerateHasse(PrimeSet{2, 3}, HasseKind::Unions);
  EXPECT_EQ(uc23.nodes.size(), 5u);
  EXPECT_EQ(uc23.covers.size(), 5u);
  const auto uc2 = enumerateHasse(PrimeSet{2}, HasseKind::Unions);
  ASSERT_EQ(uc2.nodes.size(), 2u);
  ASSERT_EQ(uc2.covers.size(), 1u);
  EXPECT_EQ(uc2.nodes[uc2.covers[0].first].representative, (CycleSet{2}));
  EXPECT_EQ(uc2.nodes[uc2.covers[0].second].representative, (CycleSet{1}));
  EXPECT_EQ(enumerateHasse(kPrimes235, HasseKind::Unions).nodes.size(), 19u);
  const auto cond = enumerateHasse(kPrimes235, HasseKind::Conditions);
  EXPECT_EQ(cond.nodes.size(), 19u);
  EXPECT_TRUE(cond.find("S{1}").has_value());
  EXPECT_THROW(enumerateHasse(PrimeSet{2, 3, 5, 7, 11}, HasseKind::Unions), ResourceError);
  EXPECT_EQ(enumerateHasse(PrimeSet{2, 3, 5, 7}, HasseKind::Unions).nodes.size(), 167u);
}

TEST(Hasse, UnionLabels) {
  const auto g = enumerateHasse(PrimeSet{2, 3}, HasseKind::Unions);
  std::set<std::string> labels;
  for (const auto& n : g.nodes) labels.insert(n.label);
  EXPECT_EQ(labels, (std::set<std::string>{"C{1}", "C{2}", "C{3}", "C{6}", "C{2,3}"}));
  const auto c = enumerateHasse(PrimeSet{2, 3}, HasseKind::Conditions);
  labels.clear();
  for (const auto& n : c.nodes) labels.insert(n.label);
  EXPECT_EQ(labels, (std::set<std::string>{"S{1}", "S{2}", "S{3}", "S{2,3}", "S{2}+S{3}"}));
}

TEST(Hasse, MatchesReferenceUnionDiagram) {
  const auto g = enumerateHasse(kPrimes235, HasseKind::Unions);
  ASSERT_EQ(g.covers.size(), kDiagramEdges.size());
  for (const auto& [lo, hi] : kDiagramEdges)
    EXPECT_TRUE(hasCover(g, unionNode(g, kUnionDiagram.at(lo)), unionNode(g, kUnionDiagram.at(hi)))) << lo << "->" << hi;
}

TEST(Hasse, MatchesReferenceConditionDiagram) {
  const auto g = enumerateHasse(kPrimes235, HasseKind::Conditions);
  ASSERT_EQ(g.covers.size(), kDiagramEdges.size());
  for (const auto& [lo, hi] : kDiagramEdges)
    EXPECT_TRUE(hasCover(g, conditionNode(g, kConditionDiagram.at(lo)), conditionNode(g, kConditionDiagram.at(hi))))
        << lo << "->" << hi;
}

TEST(Hasse, MatchesGoldenOracle) {
  for (const char* file : {"/hasse_23.txt", "/hasse_235.txt"}) {
    const auto golden = gen::readGolden(std::string(CYC_GOLDEN_DIR) + file);
    const PrimeSet primes = std::string(file) == "/hasse_23.txt" ? PrimeSet{2, 3} : kPrimes235;
    const auto uc = enumerateHasse(primes, HasseKind::Unions);
    const auto cond = enumerateHasse(primes, HasseKind::Conditions);
    ASSERT_GT(golden.ucNodes, 0u) << file;
    EXPECT_EQ(uc.nodes.size(), golden.ucNodes);
    EXPECT_EQ(uc.covers.size(), golden.ucEdges);
    EXPECT_EQ(cond.nodes.size(), golden.condNodes);
    EXPECT_EQ(cond.covers.size(), golden.condEdges);
    for (const auto& e : golden.edges) {
      if (e.kind == "uc")
        EXPECT_TRUE(hasCover(uc, unionNode(uc, e.lower), unionNode(uc, e.upper))) << e.lower.str() << e.upper.str();
      else
        EXPECT_TRUE(hasCover(cond, conditionNode(cond, e.lower), conditionNode(cond, e.upper)))
            << e.lower.str() << e.upper.str();
    }
  }
}

TEST(Hasse, CoverEdgesOfChainAndDiamond) {
  // 0 < 1 < 2 plus 0 < 2 implied.
  std::vector<std::vector<bool>> chain{{false, true, true}, {false, false, true}, {false, false, false}};
  EXPECT_EQ(coverEdges(chain), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
}

TEST(Hasse, IrreducibleElements) {
  const auto cond = enumerateHasse(kPrimes235, HasseKind::Conditions);
  const auto bottom = *cond.find("S{1}");
  for (std::size_t i = 0; i < cond.nodes.size(); ++i) {
    if (i == bottom) continue;
    const auto lower = std::count_if(cond.covers.begin(), cond.covers.end(), [&](auto e) { return e.second == i; });
    EXPECT_EQ(lower == 1, cond.nodes[i].antichain.size() == 1) << cond.nodes[i].label;
  }
  const auto uc = enumerateHasse(kPrimes235, HasseKind::Unions);
  const auto top = *uc.find("C{1}");
  std::set<CycleSet> primeUnions;
  for (auto& s : gen::nonemptySubsets({2, 3, 5})) primeUnions.insert(CycleSet(s));
  for (std::size_t i = 0; i < uc.nodes.size(); ++i) {
    if (i == top) continue;
    const auto upper = std::count_if(uc.covers.begin(), uc.covers.end(), [&](auto e) { return e.first == i; });
    EXPECT_EQ(upper == 1, primeUnions.count(uc.nodes[i].representative) == 1) << uc.nodes[i].label;
  }
}

TEST(PosetProperty, LatticeLawsOnThreePrimes) {
  const auto g = enumerateHasse(kPrimes235, HasseKind::Unions);
  std::vector<CycleSet> xs;
  for (const auto& n : g.nodes) xs.push_back(n.representative);
  for (const auto& a : xs) {
    EXPECT_EQ(ucMeet(a, a), a);
    for (const auto& b : xs) {
      ASSERT_EQ(ucMeet(a, b), ucMeet(b, a));
      ASSERT_EQ(ucJoin(a, b), ucJoin(b, a));
      ASSERT_EQ(ucMeet(a, ucJoin(a, b)), a);
      ASSERT_EQ(ucJoin(a, ucMeet(a, b)), a);
      ASSERT_TRUE(atMost(compare(ucMeet(a, b), a)));
      ASSERT_TRUE(atMost(compare(a, ucJoin(a, b))));
      for (const auto& c : xs) {
        ASSERT_EQ(ucMeet(a, ucMeet(b, c)), ucMeet(ucMeet(a, b), c));
        ASSERT_EQ(ucJoin(a, ucJoin(b, c)), ucJoin(ucJoin(a, b), c));
        ASSERT_EQ(ucMeet(a, ucJoin(b, c)), ucJoin(ucMeet(a, b), ucMeet(a, c)));
        ASSERT_EQ(ucJoin(a, ucMeet(b, c)), ucMeet(ucJoin(a, b), ucJoin(a, c)));
      }
    }
  }
}

TEST(PosetProperty, TimesIsMeetOnPrimeCycleAntichains) {
  for (const auto& p : gen::nonemptySubsets({2, 3, 5, 7})) {
    for (const auto& q : gen::nonemptySubsets({2, 3, 5, 7})) {
      const PrimeSet ps(p), qs(q);
      if (ps.isSubsetOf(qs) || qs.isSubsetOf(ps)) continue;
      const CycleSet a(p), b(q);
      ASSERT_EQ(ucMeet(a, b), canon(timesProduct(a, b))) << a.str() << b.str();
    }
  }
  EXPECT_EQ(canon(timesProduct(CycleSet{2}, CycleSet{2, 3})), (CycleSet{2}));
  EXPECT_EQ(ucMeet(CycleSet{2}, CycleSet{2, 3}), (CycleSet{2, 3}));
  // Outside prime cycles the product can sit strictly above the meet.
  EXPECT_EQ(canon(timesProduct(CycleSet{30}, CycleSet{2, 3})), canon(CycleSet{30}));
  EXPECT_EQ(ucMeet(CycleSet{30}, CycleSet{2, 3}), canon(CycleSet{10, 15}));
}

TEST(PosetProperty, ConditionLatticeLaws) {
  const auto g = enumerateHasse(kPrimes235, HasseKind::Conditions);
  for (const auto& x : g.nodes) {
    const Condition a{x.representative};
    for (const auto& y : g.nodes) {
      const Condition b{y.representative};
      ASSERT_TRUE(implies(condJoin(a, b), a));
      ASSERT_TRUE(implies(condJoin(a, b), b));
      ASSERT_TRUE(implies(a, condMeet(a, b)));
      ASSERT_TRUE(equivalent(condMeet(a, condJoin(a, b)), a));
      ASSERT_TRUE(equivalent(condJoin(a, condMeet(a, b)), a));
      ASSERT_EQ(hasseLeq(HasseKind::Conditions, x, y), implies(b, a));
    }
  }
}

TEST(PosetProperty, OwnLoopConditions) {
  std::mt19937_64 rng(gen::kSeed + 10);
  for (int iter = 0; iter < 300; ++iter) {
    const CycleSet c = gen::randomCycleSet(rng, 1, 30, 3);
    for (PosInt x : divisors(c.lcm())) {
      const CycleSet image = dotdiv(c, x);
      ASSERT_EQ(satisfies(c, Condition{image}), image.contains(1)) << c.str() << " c=" << x;
    }
  }
}

TEST(PosetProperty, FiveEquivalencesForPrimeSets) {
  for (const auto& p : gen::nonemptySubsets({2, 3, 5, 7})) {
    for (const auto& q : gen::nonemptySubsets({2, 3, 5, 7})) {
      const PrimeSet ps(p), qs(q);
      const bool first = primeImplies({ps}, {qs});
      ASSERT_EQ(first, atMost(compare(qs.asCycleSet(), ps.asCycleSet())));
      ASSERT_EQ(first, !satisfies(qs.asCycleSet(), Condition{ps.asCycleSet()}));
      ASSERT_EQ(first, ps.isSubsetOf(qs));
      ASSERT_EQ(first, homMaps(ps.asCycleSet(), qs.asCycleSet()));
      ASSERT_EQ(first, implies(Condition{ps.asCycleSet()}, Condition{qs.asCycleSet()}));
    }
  }
}

TEST(PosetProperty, FingerprintSoundness) {
  std::mt19937_64 rng(gen::kSeed + 11);
  for (int iter = 0; iter < 300; ++iter) {
    const CycleSet c = gen::randomCycleSet(rng, 1, 60, 3);
    const auto fingerprint = npc(c);
    const auto primes = primeDivisors(c.lcm());
    if (primes.empty()) continue;
    for (const auto& p : gen::nonemptySubsets(primes)) {
      const PrimeSet ps(p);
      ASSERT_EQ(fingerprint.unsatisfied(ps), !satisfies(c, Condition{ps.asCycleSet()})) << c.str() << ps.str();
    }
  }
}

TEST(PosetProperty, CompareIsPartialOrderOnCanon) {
  std::mt19937_64 rng(gen::kSeed + 12);
  for (int iter = 0; iter < 800; ++iter) {
    const CycleSet a = gen::randomCycleSet(rng, 1, 60, 3);
    const CycleSet b = gen::randomCycleSet(rng, 1, 60, 3);
    const CycleSet c = gen::randomCycleSet(rng, 1, 60, 3);
    ASSERT_EQ(compare(a, b) == CompareResult::Equivalent, canon(a) == canon(b));
    if (atMost(compare(a, b)) && atMost(compare(b, c))) ASSERT_TRUE(atMost(compare(a, c)));

    const CycleSet k = canon(a);
    for (PosInt x : k) ASSERT_EQ(rad(x), x);
    ASSERT_EQ(canon(k), k);
    ASSERT_EQ(compare(a, k), CompareResult::Equivalent);
  }
}

TEST(PosetProperty, MonotoneSatisfaction) {
  std::mt19937_64 rng(gen::kSeed + 13);
  const std::vector<PosInt> smooth{1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 35, 42, 70, 105};
  std::vector<Condition> conditions;
  for (int i = 0; i < 120; ++i) {
    std::vector<PosInt> v;
    for (int j = 0, n = static_cast<int>(rng() % 3) + 1; j < n; ++j) v.push_back(smooth[rng() % smooth.size()]);
    conditions.push_back(Condition{CycleSet(v)});
  }
  int related = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const CycleSet b = gen::randomCycleSet(rng, 1, 30, 2);
    const CycleSet c = gen::randomCycleSet(rng, 1, 30, 2);
    if (!atMost(compare(b, c))) continue;
    ++related;
    for (const auto& s : conditions)
      if (satisfies(b, s)) ASSERT_TRUE(satisfies(c, s)) << b.str() << ' ' << c.str() << ' ' << s.carrier.str();
  }
  EXPECT_GT(related, 20);
}

TEST(PosetProperty, SatisfactionInvariantUnderReduction) {
  std::mt19937_64 rng(gen::kSeed + 14);
  for (int iter = 0; iter < 500; ++iter) {
    const CycleSet c = gen::randomCycleSet(rng, 1, 40, 4);
    const Condition s{gen::randomCycleSet(rng, 1, 40, 3)};
    ASSERT_EQ(satisfies(c, s), satisfies(reduceByDivisibility(c), s));
  }
}
