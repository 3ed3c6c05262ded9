#include <gtest/gtest.h>

#include <tuple>

#include "jxextract/candidates.hpp"
#include "jxextract/error.hpp"
#include "jxextract/refactor.hpp"
#include "test_support.hpp"

using namespace jxextract;

namespace {

using Triple = std::tuple<int, int, int>;

Triple triple(const Candidate& c) { return {c.sel.block_id, c.sel.start, c.sel.end}; }

std::set<Triple> triples(const std::vector<Candidate>& cs) {
  std::set<Triple> out;
  for (const auto& c : cs) out.insert(triple(c));
  return out;
}

struct Method {
  SourceUnit unit;
  std::unique_ptr<MethodAnalysis> a;
};

Method analyze(const std::string& body, const std::string& params = {}) {
  Method out{jxtest::parse_resolved(jxtest::method_source(body, params)), nullptr};
  out.a = std::make_unique<MethodAnalysis>(analyze_method(out.unit, "C", "m"));
  return out;
}

std::vector<std::string> codes_for(const Method& m, int b, int i, int j,
                                   GenerationConfig cfg = {}) {
  return is_valid(make_candidate(*m.a, b, i, j), *m.a, cfg).codes();
}

}  // namespace

TEST(Candidates, FourStatementsMinOne) {
  auto m = analyze("log(1); log(2); log(3); log(4);");
  EXPECT_EQ(enumerate_all(*m.a).size(), 10u);
  // the whole body is the only triple rejected, by V4
  auto gen = generate(*m.a, GenerationConfig{1});
  EXPECT_EQ(gen.size(), 9u);
  EXPECT_FALSE(triples(gen).count({1, 1, 4}));
}

TEST(Candidates, FourStatementsDefaultMin) {
  auto m = analyze("log(1); log(2); log(3); log(4);");
  auto gen = generate(*m.a);
  EXPECT_EQ(triples(gen), (std::set<Triple>{{1, 1, 3}, {1, 2, 4}}));
}

TEST(Candidates, EnumerationOrder) {
  auto m = analyze("log(1); if (true) { log(2); log(3); }");
  std::vector<Triple> got;
  for (const auto& c : enumerate_all(*m.a)) got.push_back(triple(c));
  EXPECT_EQ(got, (std::vector<Triple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2},
                                      {2, 2, 2}}));
}

TEST(Candidates, SizeCountsNestedStatements) {
  auto m = analyze("log(1); if (true) { log(2); log(3); }");
  EXPECT_EQ(make_candidate(*m.a, 1, 2, 2).size, 3u);
}

TEST(Candidates, SelectionBoxYieldsExpectedCandidate) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  auto a = analyze_method(u, "SelectionClassifierBox", "mouseReleased");
  EXPECT_TRUE(triples(generate(a)).count({3, 2, 5}));
}

TEST(Candidates, NoCrossBlockSelections) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  auto a = analyze_method(u, "SelectionClassifierBox", "mouseReleased");
  for (const auto& c : enumerate_all(a)) {
    const auto& blk = a.labeled.block(c.sel.block_id);
    EXPECT_LE(c.sel.end, static_cast<int>(blk.statements.size()));
  }
}

TEST(Candidates, MakeCandidateOutOfRange) {
  auto m = analyze("log(1); log(2);");
  EXPECT_THROW(make_candidate(*m.a, 1, 2, 3), RangeError);
  EXPECT_THROW(make_candidate(*m.a, 4, 1, 1), RangeError);
}

TEST(Candidates, MinimumBelowOneRejected) {
  auto m = analyze("log(1); log(2);");
  EXPECT_THROW(generate(*m.a, GenerationConfig{0}), std::invalid_argument);
}

TEST(Validity, TwoStatementsFailMinSize) {
  auto m = analyze("log(1); log(2); log(3); log(4);");
  EXPECT_EQ(codes_for(m, 1, 1, 2), (std::vector<std::string>{"V1"}));
}

TEST(Validity, TwoLiveOuts) {
  auto m = analyze("int x = 0; int y = 0; x = 5; y = 6; log(9); log(x + y);");
  EXPECT_EQ(codes_for(m, 1, 3, 5), (std::vector<std::string>{"V2"}));
}

TEST(Validity, ReturnInside) {
  auto m = analyze("log(1); if (p > 0) { log(2); return; } log(3);", "int p");
  EXPECT_EQ(codes_for(m, 1, 1, 2), (std::vector<std::string>{"V3"}));
}

TEST(Validity, BreakLeavingSelection) {
  auto m = analyze("while (p > 0) { log(1); log(2); if (p > 3) { break; } p = p - 1; }", "int p");
  EXPECT_EQ(codes_for(m, 2, 1, 3), (std::vector<std::string>{"V3"}));
  // the whole loop keeps its break inside
  auto whole = analyze("log(0); while (p > 0) { log(1); if (p > 3) { break; } p = p - 1; }",
                       "int p");
  EXPECT_TRUE(is_valid(make_candidate(*whole.a, 1, 2, 2), *whole.a).valid);
}

TEST(Validity, WholeBody) {
  auto m = analyze("log(1); log(2); log(3);");
  EXPECT_EQ(codes_for(m, 1, 1, 3), (std::vector<std::string>{"V4"}));
}

TEST(Validity, DeclarationSplit) {
  // a and b declared inside, only b is live-out; a is written later but
  // never read after, so it is not live-out, yet its declaration would vanish
  auto m = analyze("int a = 1; int b = 2; log(a); a = 3; log(b);");
  EXPECT_EQ(codes_for(m, 1, 1, 3), (std::vector<std::string>{"V5"}));
}

TEST(Validity, SeveralReasonsInOrder) {
  auto m = analyze("int x = 0; int y = 0; log(x + y);");
  EXPECT_EQ(codes_for(m, 1, 1, 2), (std::vector<std::string>{"V1", "V2", "V5"}));
}

TEST(Validity, CodesAndDescriptions) {
  EXPECT_EQ(code(Precondition::MinSize), "V1");
  EXPECT_EQ(code(Precondition::DeclarationSplit), "V5");
  EXPECT_FALSE(description(Precondition::ControlFlow).empty());
}

namespace {

std::vector<std::pair<const SourceUnit*, std::pair<const ClassDecl*, const MethodDecl*>>>
fixture_methods() {
  std::vector<std::pair<const SourceUnit*, std::pair<const ClassDecl*, const MethodDecl*>>> out;
  for (const auto& f : jxtest::fixtures())
    for (const auto& c : f.unit.classes)
      for (const auto& m : c.methods) out.push_back({&f.unit, {&c, &m}});
  return out;
}

}  // namespace

TEST(CandidateProperties, EnumerationMatchesBruteForce) {
  auto methods = fixture_methods();
  ASSERT_GE(methods.size(), 20u);
  for (const auto& [u, cm] : methods) {
    auto a = analyze_method(*u, *cm.first, *cm.second);
    EXPECT_EQ(triples(enumerate_all(a)), jxtest::brute_force_triples(*cm.second))
        << cm.second->name;
  }
}

TEST(CandidateProperties, ExcludedTriplesFailAPrecondition) {
  for (const auto& [u, cm] : fixture_methods()) {
    auto a = analyze_method(*u, *cm.first, *cm.second);
    auto kept = triples(generate(a));
    for (const auto& c : enumerate_all(a)) {
      auto v = is_valid(c, a);
      EXPECT_EQ(v.valid, v.reasons.empty());
      EXPECT_EQ(kept.count(triple(c)) == 1, v.valid);
      for (const auto& code : v.codes()) {
        EXPECT_TRUE(code == "V1" || code == "V2" || code == "V3" || code == "V4" || code == "V5");
      }
    }
  }
}

TEST(CandidateProperties, SizeMatchesClosure) {
  for (const auto& [u, cm] : fixture_methods()) {
    auto a = analyze_method(*u, *cm.first, *cm.second);
    for (const auto& c : enumerate_all(a)) {
      EXPECT_EQ(c.size, count_statements(c.sel));
      auto v = is_valid(c, a);
      bool small = c.size < 3;
      bool has_v1 = !v.reasons.empty() && v.reasons.front() == Precondition::MinSize;
      EXPECT_EQ(small, has_v1);
    }
  }
}

// Anything generate() accepts, extract() rewrites into a unit that parses.
TEST(CandidateProperties, ValidCandidatesExtract) {
  std::vector<SourceUnit> units;
  for (const auto& f : jxtest::fixtures()) units.push_back(f.unit);
  std::mt19937 rng(3);
  for (int n = 0; n < 40; ++n) units.push_back(jxtest::unit_with(jxtest::random_method(rng)));
  for (const auto& u : units) {
    for (const auto& c : u.classes) {
      for (const auto& m : c.methods) {
        auto a = analyze_method(u, c, m);
        for (const auto& cand : generate(a, GenerationConfig{1})) {
          EXPECT_NO_THROW({
            SourceUnit out = extract(u, cand, "extractedPart", ExtractOptions{{1}, 0});
            bool found = false;
            for (const auto& oc : out.classes)
              if (oc.name == c.name) found = oc.find_method("extractedPart") != nullptr;
            EXPECT_TRUE(found);
          }) << m.name << " " << cand.sel.label_range();
        }
      }
    }
  }
}
