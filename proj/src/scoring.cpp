#include "jxextract/scoring.hpp"

#include <stdexcept>
#include <tuple>

namespace jxextract {

Score score_sets(const DepSets& selected, const DepSets& remainder) {
  Score s;
  s.dist_var = kulczynski_dist(selected.vars, remainder.vars);
  s.dist_type = kulczynski_dist(selected.types, remainder.types);
  s.dist_pack = kulczynski_dist(selected.packs, remainder.packs);
  s.total = (s.dist_var + s.dist_type + s.dist_pack) / 3.0;
  return s;
}

ScoredCandidate score(const Candidate& cand, const MethodAnalysis& analysis) {
  ScoredCandidate out;
  out.candidate = cand;
  out.selected = selection_deps(analysis.facts, cand.sel);
  out.remainder = remainder_deps(analysis.facts, cand.sel);
  out.score = score_sets(out.selected, out.remainder);
  return out;
}

std::vector<Recommendation> rank(std::vector<ScoredCandidate> scored,
                                 const RankingConfig& cfg) {
  if (cfg.max_recommendations_per_method < 1)
    throw std::invalid_argument("max_recommendations_per_method must be >= 1");
  auto key = [](const ScoredCandidate& s) {
    return std::make_tuple(-s.score.total, s.candidate.sel.span.begin.offset,
                           s.candidate.size, s.candidate.sel.block_id);
  };
  std::sort(scored.begin(), scored.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::vector<Recommendation> out;
  for (auto& s : scored) {
    if (out.size() >= static_cast<std::size_t>(cfg.max_recommendations_per_method))
      break;
    if (s.score.total < cfg.min_score) continue;
    out.push_back(Recommendation{std::move(s), static_cast<int>(out.size()) + 1});
  }
  return out;
}

std::vector<Recommendation> recommend(const MethodAnalysis& analysis,
                                      const GenerationConfig& gen,
                                      const RankingConfig& ranking) {
  std::vector<ScoredCandidate> scored;
  for (const auto& c : generate(analysis, gen)) scored.push_back(score(c, analysis));
  return rank(std::move(scored), ranking);
}

std::vector<MethodRecommendations> recommend_unit(const SourceUnit& unit,
                                                  const GenerationConfig& gen,
                                                  const RankingConfig& ranking) {
  std::vector<MethodRecommendations> out;
  for (const auto& cls : unit.classes) {
    for (const auto& m : cls.methods) {
      MethodAnalysis a = analyze_method(unit, cls, m);
      out.push_back({cls.name, m.name, a.qualified_name(), recommend(a, gen, ranking)});
    }
  }
  return out;
}

}  // namespace jxextract
