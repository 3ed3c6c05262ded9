#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "jxextract/scoring.hpp"
#include "test_support.hpp"

using namespace jxextract;

namespace {

using Set = std::set<std::string>;

const Set kSelected{"metaType", "fc", "fcb"};
const Set kRemainder{"metaType", "btn", "cy", "cx", "cw", "ch", "buttons", "me", "rect"};

Set random_set(std::mt19937& rng) {
  Set s;
  int n = std::uniform_int_distribution<int>(0, 8)(rng);
  for (int i = 0; i < n; ++i) s.insert("e" + std::to_string(rng() % 12));
  return s;
}

struct Method {
  SourceUnit unit;
  std::unique_ptr<MethodAnalysis> a;
};

Method analyze(const std::string& source, const std::string& cls, const std::string& name) {
  Method out{jxtest::parse_resolved(source), nullptr};
  out.a = std::make_unique<MethodAnalysis>(analyze_method(out.unit, cls, name));
  return out;
}

ScoredCandidate with_total(const Candidate& c, double total) {
  ScoredCandidate s;
  s.candidate = c;
  s.score.total = total;
  return s;
}

}  // namespace

TEST(Kulczynski, SelectionBoxVariableSets) {
  EXPECT_NEAR(kulczynski_dist(kSelected, kRemainder), 7.0 / 9.0, 1e-9);
  EXPECT_NEAR(kulczynski_dist(kSelected, kRemainder),
              jxtest::kulczynski_oracle(kSelected, kRemainder), 1e-12);
}

TEST(Kulczynski, IdentityAndDisjoint) {
  EXPECT_EQ(kulczynski_dist(Set{"a", "b"}, Set{"a", "b"}), 0.0);
  EXPECT_EQ(kulczynski_dist(Set{"a"}, Set{"b"}), 1.0);
  EXPECT_EQ(kulczynski_dist(Set{}, Set{"b"}), 1.0);
  EXPECT_EQ(kulczynski_dist(Set{}, Set{}), 1.0);
}

TEST(KulczynskiProperties, RandomPairs) {
  std::mt19937 rng(2024);
  for (int n = 0; n < 2000; ++n) {
    Set a = random_set(rng);
    Set b = random_set(rng);
    double d = kulczynski_dist(a, b);
    EXPECT_NEAR(d, jxtest::kulczynski_oracle(a, b), 1e-12);
    EXPECT_EQ(d, kulczynski_dist(b, a));
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
    if (!a.empty()) {
      EXPECT_EQ(kulczynski_dist(a, a), 0.0);
    }
    bool disjoint = std::none_of(a.begin(), a.end(), [&](const auto& x) { return b.count(x); });
    if (disjoint) {
      EXPECT_EQ(d, 1.0);
    }
    EXPECT_EQ(d == 0.0, a == b && !a.empty());
  }
}

TEST(Score, DisjointSetsScoreOne) {
  DepSets a{{VarId::parameter("x")}, {"p.A"}, {"p"}};
  DepSets b{{VarId::parameter("y")}, {"q.B"}, {"q"}};
  Score s = score_sets(a, b);
  EXPECT_EQ(s.total, 1.0);
}

TEST(Score, IdenticalSetsScoreZero) {
  DepSets a{{VarId::parameter("x")}, {"p.A"}, {"p"}};
  Score s = score_sets(a, a);
  EXPECT_EQ(s.total, 0.0);
  EXPECT_EQ(s.dist_var, 0.0);
}

TEST(Score, MeanOfThreeDistances) {
  DepSets a{{VarId::parameter("x"), VarId::parameter("y")}, {"p.A"}, {"p"}};
  DepSets b{{VarId::parameter("x")}, {"q.B"}, {"p", "q"}};
  Score s = score_sets(a, b);
  EXPECT_DOUBLE_EQ(s.dist_var, 1.0 - 0.5 * (0.5 + 1.0));
  EXPECT_DOUBLE_EQ(s.dist_type, 1.0);
  EXPECT_DOUBLE_EQ(s.dist_pack, 1.0 - 0.5 * (1.0 + 0.5));
  EXPECT_DOUBLE_EQ(s.total, (s.dist_var + s.dist_type + s.dist_pack) / 3.0);
}

TEST(Score, SelectionBoxCandidate) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  auto a = analyze_method(u, "SelectionClassifierBox", "mouseReleased");
  auto sc = score(make_candidate(a, 3, 2, 5), a);
  EXPECT_NEAR(sc.score.dist_var, 7.0 / 9.0, 1e-9);
  // FigClassifier and FigCompartmentBox live in the host package, the rest is
  // java.*: types and packages separate completely
  EXPECT_EQ(sc.score.dist_type, 1.0);
  EXPECT_EQ(sc.score.dist_pack, 1.0);
  EXPECT_NEAR(sc.score.total, 25.0 / 27.0, 1e-9);
}

TEST(Rank, TopThreeOfFive) {
  auto m = analyze(jxtest::method_source("log(1); log(2); log(3); log(4); log(5); log(6);"), "C",
                   "m");
  auto all = enumerate_all(*m.a);
  std::vector<ScoredCandidate> in;
  const double totals[] = {0.1, 0.9, 0.5, 0.7, 0.3};
  for (int i = 0; i < 5; ++i) in.push_back(with_total(all[i], totals[i]));
  auto out = rank(in);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].score().total, 0.9);
  EXPECT_EQ(out[1].score().total, 0.7);
  EXPECT_EQ(out[2].score().total, 0.5);
  EXPECT_EQ(out[0].rank, 1);
  EXPECT_EQ(out[2].rank, 3);
}

TEST(Rank, MinScoreFilters) {
  auto m = analyze(jxtest::method_source("log(1); log(2); log(3); log(4);"), "C", "m");
  std::vector<ScoredCandidate> in;
  for (const auto& c : enumerate_all(*m.a)) in.push_back(with_total(c, 0.5));
  EXPECT_TRUE(rank(in, RankingConfig{3, 0.8}).empty());
  EXPECT_EQ(rank(in, RankingConfig{3, 0.5}).size(), 3u);
}

TEST(Rank, TieBreaks) {
  auto m = analyze(jxtest::method_source("log(1); log(2); log(3); if (true) { log(4); }"), "C",
                   "m");
  auto c13 = make_candidate(*m.a, 1, 1, 3);
  auto c23 = make_candidate(*m.a, 1, 2, 3);
  auto c12 = make_candidate(*m.a, 1, 1, 2);
  auto c44 = make_candidate(*m.a, 1, 4, 4);
  auto inner = make_candidate(*m.a, 2, 1, 1);
  auto out = rank({with_total(c23, 0.5), with_total(c13, 0.5), with_total(c12, 0.5)},
                  RankingConfig{5, 0});
  // earlier start first, then smaller size
  EXPECT_EQ(out[0].candidate().sel, c12.sel);
  EXPECT_EQ(out[1].candidate().sel, c13.sel);
  EXPECT_EQ(out[2].candidate().sel, c23.sel);
  // equal scores and sizes: the `if` starts before its child
  auto out2 = rank({with_total(inner, 0.4), with_total(c44, 0.4)}, RankingConfig{5, 0});
  EXPECT_EQ(out2[0].candidate().sel, c44.sel);
}

TEST(RankProperties, PermutationInvariant) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  auto a = analyze_method(u, "SelectionClassifierBox", "mouseReleased");
  std::vector<ScoredCandidate> in;
  for (const auto& c : generate(a, GenerationConfig{1})) in.push_back(score(c, a));
  auto expected = rank(in, RankingConfig{100, 0});
  std::mt19937 rng(9);
  for (int n = 0; n < 50; ++n) {
    std::shuffle(in.begin(), in.end(), rng);
    auto got = rank(in, RankingConfig{100, 0});
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      EXPECT_EQ(got[i].candidate().sel, expected[i].candidate().sel);
  }
}

TEST(ScoringProperties, ComplementSymmetry) {
  for (const auto& f : jxtest::fixtures()) {
    for (const auto& c : f.unit.classes) {
      for (const auto& m : c.methods) {
        auto a = analyze_method(f.unit, c, m);
        for (const auto& cand : generate(a, GenerationConfig{1})) {
          auto sc = score(cand, a);
          Score flipped = score_sets(sc.remainder, sc.selected);
          EXPECT_EQ(sc.score.dist_var, flipped.dist_var);
          EXPECT_EQ(sc.score.dist_type, flipped.dist_type);
          EXPECT_EQ(sc.score.dist_pack, flipped.dist_pack);
          EXPECT_EQ(sc.score.total, flipped.total);
        }
      }
    }
  }
}

TEST(ScoringProperties, RanksAreDenseAndOrdered) {
  for (const auto& f : jxtest::fixtures()) {
    for (const auto& mr : recommend_unit(f.unit)) {
      EXPECT_LE(mr.recommendations.size(), 3u);
      for (std::size_t i = 0; i < mr.recommendations.size(); ++i) {
        EXPECT_EQ(mr.recommendations[i].rank, static_cast<int>(i + 1));
        EXPECT_GE(mr.recommendations[i].candidate().size, 3u);
        if (i > 0) {
          EXPECT_LE(mr.recommendations[i].score().total,
                    mr.recommendations[i - 1].score().total);
        }
      }
    }
  }
}

TEST(Recommend, SelectionBoxTopCandidate) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  auto a = analyze_method(u, "SelectionClassifierBox", "mouseReleased");
  auto recs = recommend(a);
  ASSERT_FALSE(recs.empty());
  EXPECT_EQ(recs[0].candidate().sel.label_range(), "S3.2–S3.5");
}
