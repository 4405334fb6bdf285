#include <set>

#include <gtest/gtest.h>

#include "bkpuzzle/enumerate.hpp"
#include "bkpuzzle/factor.hpp"
#include "bkpuzzle/oracle.hpp"
#include "bkpuzzle/puzzle_io.hpp"
#include "bkpuzzle/selfcheck.hpp"

using namespace bkp;

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(count_puzzles(parse_key("12132", "23112", "32121")), 1);
  EXPECT_EQ(count_puzzles(parse_key("12112", "12112", "21121")), 1);
  EXPECT_EQ(count_puzzles(parse_key("112", "122", "122")), 0);
  EXPECT_EQ(count_puzzles(parse_key("1212", "1212", "2112")), 1);
  EXPECT_EQ(count_puzzles(parse_key("1212", "1212", "1221")), 1);
  EXPECT_EQ(count_puzzles(parse_key("111", "111", "111")), 1);
}

TEST(Enumerate, NoPuzzlesWithoutInvTwoOne) {
  for (const auto& s : words_with_content({1, 1, 1}))
    EXPECT_EQ(count_puzzles({Word::parse("213"), Word::parse("132"), s}), 0) << s.to_string();
}

TEST(Enumerate, KeyErrors) {
  EXPECT_THROW(count_puzzles({Word::parse("12"), Word::parse("123"), Word::parse("12")}),
               std::invalid_argument);
  EXPECT_THROW(count_puzzles({Word::parse("12"), Word::parse("12", 3), Word::parse("12")}),
               std::invalid_argument);
  // make_key widens to a common alphabet
  EXPECT_EQ(parse_key("12", "13", "12").alphabet(), 3);
}

TEST(Enumerate, ListIsSortedDeterministicAndValid) {
  auto key = parse_key("11222", "12122", "22121");
  auto a = list_puzzles(key);
  auto b = list_puzzles(key);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(BigInt(a.size()), count_puzzles(key));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  for (const auto& p : a) {
    EXPECT_TRUE(validate(p).ok());
    Boundary bd = boundary(p);
    EXPECT_EQ((TripleKey{bd.nw, bd.ne, bd.s}), key);
  }
}

TEST(Enumerate, NoPuzzlesWhenNotAdditive) {
  for (const auto& k : equal_content_triples(1, 4, 3, 3)) {
    if (!additive(k)) {
      ASSERT_EQ(count_puzzles(k), 0) << k.to_string();
    }
  }
  for (const auto& k : std::vector<TripleKey>{parse_key("112", "121", "122")})
    EXPECT_EQ(count_puzzles(k), 0);
}

TEST(Factor, ExampleInstance) {
  auto r = factor_check(parse_key("12132", "23112", "32121"));
  ASSERT_EQ(r.factors.size(), 3u);
  EXPECT_EQ(r.factors[0].i, 2);
  EXPECT_EQ(r.factors[0].j, 1);
  EXPECT_EQ(r.factors[0].key, parse_key("1212", "2112", "2121"));
  for (const auto& f : r.factors) EXPECT_EQ(f.count, 1);
  EXPECT_EQ(r.product, 1);
  EXPECT_EQ(r.count, 1);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.violated.empty());
}

TEST(Factor, GrassmannianHasOneFactor) {
  auto r = factor_check(parse_key("1212", "1212", "2112"));
  ASSERT_EQ(r.factors.size(), 1u);
  EXPECT_EQ(r.factors[0].key, parse_key("1212", "1212", "2112"));
  EXPECT_TRUE(r.equal);
}

TEST(Factor, ReportsViolatedPair) {
  auto r = factor_check({Word::parse("213"), Word::parse("132"), Word::parse("321")});
  EXPECT_FALSE(r.violated.empty());
  EXPECT_EQ(r.count, 0);
  EXPECT_TRUE(r.equal);
}

TEST(Factor, FullFlagDisjointInversionSets) {
  // Permutation words pi, rho, sigma with Inv(pi) and Inv(rho) disjoint and
  // uniting to Inv(sigma): the product of pair factors is 1.
  for (int n = 1; n <= 4; ++n) {
    auto ws = words_with_content(std::vector<int>(n, 1));
    int seen = 0;
    for (const auto& a : ws)
      for (const auto& b : ws)
        for (const auto& c : ws) {
          TripleKey k{a, b, c};
          if (!additive(k)) continue;
          auto r = factor_check(k);
          EXPECT_TRUE(r.equal) << k.to_string();
          EXPECT_EQ(r.product, 1) << k.to_string();
          ++seen;
        }
    EXPECT_GT(seen, 0);
  }
}

TEST(Assembly, TupleShapes) {
  auto p = list_puzzles(parse_key("12132", "23112", "32121"))[0];
  auto t = assembly_tuple(p);
  ASSERT_EQ(t.size(), 3u);
  const char* expect[3][3] = {{"1212", "2112", "2121"}, {"112", "211", "211"}, {"121", "121", "211"}};
  for (int k = 0; k < 3; ++k) {
    Boundary b = boundary(t[k]);
    EXPECT_EQ((TripleKey{b.nw, b.ne, b.s}), parse_key(expect[k][0], expect[k][1], expect[k][2]));
  }
  Puzzle mono(3, 1);
  for (const Edge& e : mono.edges()) mono.set(e, Label::single(1));
  EXPECT_TRUE(assembly_tuple(mono).empty());
  auto g = list_puzzles(parse_key("1212", "1212", "2112"))[0];
  auto tg = assembly_tuple(g);
  ASSERT_EQ(tg.size(), 1u);
  EXPECT_EQ(tg[0], g);
}

TEST(Assembly, InjectiveAtSizeSix) {
  // spot check beyond the acceptance sweep
  for (const char* s : {"321312", "332121", "323121"}) {
    auto key = parse_key("112233", "123123", s);
    if (!additive(key)) continue;
    auto ps = list_puzzles(key);
    std::set<std::vector<Puzzle>> tuples;
    for (const auto& p : ps) tuples.insert(assembly_tuple(p));
    EXPECT_EQ(tuples.size(), ps.size());
    EXPECT_TRUE(factor_check(key).equal);
  }
}

TEST(Coarse, Examples) {
  auto key = parse_key("12132", "23112", "32121");
  auto r = coarse_check(key, Ambiguator::from_classes({{1}, {2, 3}}, 3));
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.count, 1);
  EXPECT_EQ(r.ambiguated, 1);
  EXPECT_EQ(r.blocks, (std::vector<BigInt>{1, 1}));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(coarse_check(key, Ambiguator::singletons(3)).equal);
  auto one = coarse_check(key, Ambiguator::single_class(3));
  EXPECT_EQ(one.ambiguated, 1);
  EXPECT_EQ(one.product, one.count);
}

TEST(Coarse, OracleValues) {
  // Same identity with Schubert-oracle constants in place of counts.
  for (const auto& k : equal_content_triples(1, 4, 3, 3)) {
    if (!additive(k)) continue;
    for (int cut = 1; cut <= 2; ++cut) {
      auto amb = Ambiguator::cut(cut, 3);
      auto a = ambiguate_key(k, amb);
      BigInt prod = bk_constant(a.nw, a.ne, a.s);
      for (int m = 1; m <= 2; ++m) {
        auto d = deflate_key(k, amb.members(m));
        prod *= bk_constant(d.nw, d.ne, d.s);
      }
      ASSERT_EQ(prod, bk_constant(k.nw, k.ne, k.s)) << k.to_string() << " cut " << cut;
    }
  }
}
