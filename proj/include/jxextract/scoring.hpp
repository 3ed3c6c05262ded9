#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "jxextract/candidates.hpp"
#include "jxextract/deps.hpp"

namespace jxextract {

// Kulczynski distance between two finite sets:
//
//   1 - (a/(a+b) + a/(a+c)) / 2,   a = |A∩B|, b = |A\B|, c = |B\A|
//
// A term with a = 0 counts as 0, so disjoint or empty operands are at
// distance 1.
template <class T, class Cmp>
double kulczynski_dist(const std::set<T, Cmp>& lhs, const std::set<T, Cmp>& rhs) {
  std::size_t common = 0;
  auto i = lhs.begin();
  auto j = rhs.begin();
  const Cmp& less = lhs.key_comp();
  while (i != lhs.end() && j != rhs.end()) {
    if (less(*i, *j)) {
      ++i;
    } else if (less(*j, *i)) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  if (common == 0) return 1.0;
  double a = static_cast<double>(common);
  // a+b = |A|, a+c = |B|
  return 1.0 - 0.5 * (a / static_cast<double>(lhs.size()) +
                      a / static_cast<double>(rhs.size()));
}

struct Score {
  double total = 0;
  double dist_var = 0;
  double dist_type = 0;
  double dist_pack = 0;
};

// Equal-weight mean of the three set distances.
Score score_sets(const DepSets& selected, const DepSets& remainder);

struct ScoredCandidate {
  Candidate candidate;
  Score score;
  DepSets selected;   // m'
  DepSets remainder;  // m''
};

ScoredCandidate score(const Candidate& cand, const MethodAnalysis& analysis);

struct RankingConfig {
  int max_recommendations_per_method = 3;
  double min_score = 0.0;
};

struct Recommendation {
  ScoredCandidate scored;
  int rank = 0;

  const Candidate& candidate() const { return scored.candidate; }
  const Score& score() const { return scored.score; }
};

// Sorts by total score (descending), breaking ties by earlier selection
// start, then smaller size, then lower block id; drops scores below
// min_score and keeps the first max_recommendations_per_method.
std::vector<Recommendation> rank(std::vector<ScoredCandidate> scored,
                                 const RankingConfig& cfg = {});

// generate -> score -> rank for one method.
std::vector<Recommendation> recommend(const MethodAnalysis& analysis,
                                      const GenerationConfig& gen = {},
                                      const RankingConfig& ranking = {});

struct MethodRecommendations {
  std::string class_name;
  std::string method_name;
  std::string qualified_name;
  std::vector<Recommendation> recommendations;
};

// Runs recommend() over every method of a resolved unit, in declaration
// order.
std::vector<MethodRecommendations> recommend_unit(const SourceUnit& unit,
                                                  const GenerationConfig& gen = {},
                                                  const RankingConfig& ranking = {});

}  // namespace jxextract
