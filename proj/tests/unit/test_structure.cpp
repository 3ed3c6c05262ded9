#include <gtest/gtest.h>

#include <set>

#include "jxextract/error.hpp"
#include "jxextract/structure.hpp"
#include "test_support.hpp"

using namespace jxextract;

namespace {

const MethodDecl& method_of(const SourceUnit& u, const std::string& name) {
  for (const auto& c : u.classes)
    if (const auto* m = c.find_method(name)) return *m;
  throw std::runtime_error("no method " + name);
}

std::vector<std::string> labels(const LabeledMethod& lm) {
  std::vector<std::string> out;
  for (const auto& s : lm.statements()) out.push_back(s.label.str());
  return out;
}

std::set<std::size_t> closure_set(const Selection& s) {
  auto c = s.closure();
  return {c.begin(), c.end()};
}

// Fixture and random methods used by the property tests.
std::vector<SourceUnit> property_units() {
  std::vector<SourceUnit> out;
  for (const auto& f : jxtest::fixtures()) out.push_back(f.unit);
  std::mt19937 rng(11);
  for (int n = 0; n < 60; ++n) out.push_back(jxtest::unit_with(jxtest::random_method(rng)));
  return out;
}

}  // namespace

TEST(Structure, FlatBodyLabels) {
  SourceUnit u = jxtest::parse_resolved(jxtest::method_source("int a = 1; a = 2; log(a);"));
  LabeledMethod lm(method_of(u, "m"));
  EXPECT_EQ(lm.blocks().size(), 1u);
  EXPECT_EQ(labels(lm), (std::vector<std::string>{"S1.1", "S1.2", "S1.3"}));
}

TEST(Structure, IfChildrenGetBlockTwo) {
  SourceUnit u = jxtest::parse_resolved(
      jxtest::method_source("int a = 1; if (a > 0) { a = 2; log(a); a = 3; log(a); }"));
  LabeledMethod lm(method_of(u, "m"));
  ASSERT_EQ(lm.blocks().size(), 2u);
  EXPECT_EQ(lm.block(1).statements.size(), 2u);
  EXPECT_EQ(lm.block(2).statements.size(), 4u);
  EXPECT_EQ(labels(lm), (std::vector<std::string>{"S1.1", "S1.2", "S2.1", "S2.2", "S2.3",
                                                  "S2.4"}));
  EXPECT_FALSE(lm.block(1).parent.has_value());
  EXPECT_EQ(*lm.block(2).parent, 1u);
}

TEST(Structure, ElseGetsItsOwnBlockAndNumberingIsPreOrder) {
  SourceUnit u = jxtest::parse_resolved(jxtest::method_source(
      "if (a) { while (b) { log(1); } } else { log(2); } { log(3); }", "boolean a, boolean b"));
  LabeledMethod lm(method_of(u, "m"));
  // if -> then=2, else=3; while inside then -> 4; nested block statement -> 5
  ASSERT_EQ(lm.blocks().size(), 5u);
  EXPECT_EQ(labels(lm), (std::vector<std::string>{"S1.1", "S2.1", "S4.1", "S3.1", "S1.2",
                                                  "S5.1"}));
  EXPECT_EQ(lm.block(3).statements.size(), 1u);
  EXPECT_EQ(jxtest::block_sizes(method_of(u, "m")), (std::vector<int>{2, 1, 1, 1, 1}));
}

TEST(Structure, SelectionBoxLabels) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  LabeledMethod lm(method_of(u, "mouseReleased"));
  ASSERT_EQ(lm.blocks().size(), 3u);
  EXPECT_EQ(lm.block(1).statements.size(), 2u);
  EXPECT_EQ(lm.block(2).statements.size(), 6u);
  EXPECT_EQ(lm.block(3).statements.size(), 7u);
  // S2.3 declares cw
  const Stmt& s23 = *lm.at(lm.flat_index(StmtLabel{2, 3})).stmt;
  EXPECT_EQ(s23.as<VarDecl>()->name, "cw");
}

TEST(Structure, CompositeSelectionBringsChildren) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  LabeledMethod lm(method_of(u, "mouseReleased"));
  Selection s = selection(lm, 2, 6, 6);
  std::vector<std::string> got;
  for (auto i : s.closure()) got.push_back(lm.at(i).label.str());
  EXPECT_EQ(got, (std::vector<std::string>{"S2.6", "S3.1", "S3.2", "S3.3", "S3.4", "S3.5",
                                           "S3.6", "S3.7"}));
}

TEST(Structure, SelectionBoxCandidateSelection) {
  const auto& u = jxtest::fixture("selection_box.jx").unit;
  LabeledMethod lm(method_of(u, "mouseReleased"));
  Selection s = selection(lm, 3, 2, 5);
  EXPECT_EQ(s.label_range(), "S3.2–S3.5");
  EXPECT_EQ(count_statements(s), 4u);
  const Stmt& first = *lm.at(lm.flat_index({3, 2})).stmt;
  const Stmt& last = *lm.at(lm.flat_index({3, 5})).stmt;
  EXPECT_EQ(s.span.begin.offset, first.span.begin.offset);
  EXPECT_EQ(s.span.end.offset, last.span.end.offset);
}

TEST(Structure, CountStatements) {
  SourceUnit u = jxtest::parse_resolved(
      jxtest::method_source("int a = 1; a = 2; log(a); if (a > 0) { a = 2; log(a); a = 3; log(a); }"));
  LabeledMethod lm(method_of(u, "m"));
  EXPECT_EQ(count_statements(selection(lm, 1, 1, 3)), 3u);
  EXPECT_EQ(count_statements(selection(lm, 1, 4, 4)), 5u);
  EXPECT_EQ(count_statements(selection(lm, 1, 1, 4)), lm.size());
}

TEST(Structure, WholeBodySelectionCoversEverything) {
  SourceUnit u = jxtest::parse_resolved(jxtest::method_source("int a = 1; a = 2; log(a);"));
  LabeledMethod lm(method_of(u, "m"));
  EXPECT_EQ(count_statements(selection(lm, 1, 1, 3)), lm.size());
}

TEST(Structure, OutOfRangeSelections) {
  SourceUnit u = jxtest::parse_resolved(jxtest::method_source("int a = 1; a = 2; log(a);"));
  LabeledMethod lm(method_of(u, "m"));
  EXPECT_THROW(selection(lm, 2, 1, 1), RangeError);
  EXPECT_THROW(selection(lm, 1, 0, 1), RangeError);
  EXPECT_THROW(selection(lm, 1, 2, 1), RangeError);
  EXPECT_THROW(selection(lm, 1, 1, 4), RangeError);
  EXPECT_THROW(lm.block(0), RangeError);
}

TEST(Structure, ForHeaderIsNotLabeled) {
  SourceUnit u = jxtest::parse_resolved(
      jxtest::method_source("for (int i = 0; i < 3; i = i + 1) { log(i); log(i); }"));
  LabeledMethod lm(method_of(u, "m"));
  EXPECT_EQ(labels(lm), (std::vector<std::string>{"S1.1", "S2.1", "S2.2"}));
}

// Every statement has exactly one label, the labels are exactly the valid
// (X, Y) pairs, and blocks are numbered 1..n.
TEST(StructureProperties, LabelBijection) {
  for (const auto& u : property_units()) {
    for (const auto& c : u.classes) {
      for (const auto& m : c.methods) {
        LabeledMethod lm(m);
        std::set<StmtLabel> seen;
        for (std::size_t i = 0; i < lm.size(); ++i) {
          StmtLabel l = lm.at(i).label;
          EXPECT_TRUE(seen.insert(l).second);
          EXPECT_EQ(lm.flat_index(l), i);
          EXPECT_EQ(lm.index_of(*lm.at(i).stmt), i);
        }
        std::set<StmtLabel> valid;
        auto sizes = jxtest::block_sizes(m);
        ASSERT_EQ(lm.blocks().size(), sizes.size());
        for (std::size_t b = 0; b < sizes.size(); ++b) {
          EXPECT_EQ(lm.blocks()[b].id, static_cast<int>(b + 1));
          for (int y = 1; y <= sizes[b]; ++y) valid.insert({static_cast<int>(b + 1), y});
        }
        EXPECT_EQ(seen, valid);
      }
    }
  }
}

TEST(StructureProperties, ClosureMonotonicity) {
  for (const auto& u : property_units()) {
    for (const auto& c : u.classes) {
      for (const auto& m : c.methods) {
        LabeledMethod lm(m);
        for (const auto& b : lm.blocks()) {
          int n = static_cast<int>(b.statements.size());
          for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
              auto inner = closure_set(selection(lm, b.id, i, j));
              if (j < n) {
                auto wider = closure_set(selection(lm, b.id, i, j + 1));
                EXPECT_TRUE(std::includes(wider.begin(), wider.end(), inner.begin(), inner.end()));
              }
              if (i > 1) {
                auto wider = closure_set(selection(lm, b.id, i - 1, j));
                EXPECT_TRUE(std::includes(wider.begin(), wider.end(), inner.begin(), inner.end()));
              }
            }
          }
        }
      }
    }
  }
}

TEST(StructureProperties, DisjointSiblings) {
  for (const auto& u : property_units()) {
    for (const auto& c : u.classes) {
      for (const auto& m : c.methods) {
        LabeledMethod lm(m);
        for (const auto& b : lm.blocks()) {
          int n = static_cast<int>(b.statements.size());
          for (int i = 1; i <= n; ++i)
            for (int j = i; j < n; ++j) {
              auto left = closure_set(selection(lm, b.id, i, j));
              auto right = closure_set(selection(lm, b.id, j + 1, n));
              for (auto x : left) EXPECT_EQ(right.count(x), 0u);
            }
        }
      }
    }
  }
}

// The closure computed from the flat range equals the closure collected by
// walking the AST.
TEST(StructureProperties, ClosureMatchesTreeWalk) {
  for (const auto& u : property_units()) {
    for (const auto& c : u.classes) {
      for (const auto& m : c.methods) {
        LabeledMethod lm(m);
        for (const auto& b : lm.blocks()) {
          int n = static_cast<int>(b.statements.size());
          for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
              std::set<const Stmt*> walked;
              std::function<void(const Stmt&)> walk = [&](const Stmt& s) {
                walked.insert(&s);
                for (const Block* cb : child_blocks(s))
                  for (const auto& k : cb->stmts) walk(k);
              };
              for (int k = i; k <= j; ++k) walk(b.block->stmts[k - 1]);
              std::set<const Stmt*> flat;
              for (auto x : selection(lm, b.id, i, j).closure()) flat.insert(lm.at(x).stmt);
              EXPECT_EQ(walked, flat);
            }
          }
        }
      }
    }
  }
}
