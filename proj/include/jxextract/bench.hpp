#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jxextract/candidates.hpp"
#include "jxextract/refactor.hpp"
#include "jxextract/scoring.hpp"

namespace jxextract {

struct MatchResult {
  OracleEntry oracle;
  std::optional<int> matched_rank;
};

// Exact match on (block, start, end); off by one statement is a miss.
MatchResult match(const std::vector<Recommendation>& recs, const OracleEntry& oracle);

struct BenchReport {
  int k = 1;
  int oracle_count = 0;
  int matched = 0;
  int recommendations_emitted = 0;
  double recall = 0;     // matched / oracle_count
  double precision = 0;  // matched / recommendations_emitted, 0 when nothing emitted
  std::vector<MatchResult> matches;  // in oracle order
};

struct BenchConfig {
  int k = 1;
  GenerationConfig gen;
  double min_score = 0.0;
};

// Recommends on every method that carries an oracle entry (at most k each)
// and counts exact matches. `units` maps the oracle `file` field to the
// resolved mutated unit. Throws CorpusError for dangling references.
BenchReport evaluate(const std::map<std::string, SourceUnit>& units,
                     const std::vector<OracleEntry>& oracles, const BenchConfig& cfg);

// Loads the files the oracle names, relative to `corpus_dir`.
BenchReport evaluate(const std::filesystem::path& corpus_dir,
                     const std::vector<OracleEntry>& oracles, const BenchConfig& cfg);

nlohmann::ordered_json oracle_to_json(const std::vector<OracleEntry>& oracles);
// Throws CorpusError on a malformed document.
std::vector<OracleEntry> oracle_from_json(const nlohmann::json& doc);
std::vector<OracleEntry> read_oracle(const std::filesystem::path& path);
void write_oracle(const std::filesystem::path& path, const std::vector<OracleEntry>& oracles);

// {"k", "oracles", "matched", "emitted", "recall", "precision"}
nlohmann::ordered_json to_json(const BenchReport& report);
// Aligned table: Top-k | Oracles | Matched (recall) | Emitted | Precision
std::string format_table(const std::vector<BenchReport>& reports);

}  // namespace jxextract
