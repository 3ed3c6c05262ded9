#include "jxextract/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "jxextract/error.hpp"
#include "jxextract/parser.hpp"
#include "jxextract/report.hpp"
#include "jxextract/resolve.hpp"

namespace jxextract {

using nlohmann::json;
using nlohmann::ordered_json;

MatchResult match(const std::vector<Recommendation>& recs, const OracleEntry& oracle) {
  MatchResult r{oracle, std::nullopt};
  for (const auto& rec : recs) {
    const Selection& s = rec.candidate().sel;
    if (s.block_id == oracle.block && s.start == oracle.start && s.end == oracle.end) {
      r.matched_rank = rec.rank;
      break;
    }
  }
  return r;
}

BenchReport evaluate(const std::map<std::string, SourceUnit>& units,
                     const std::vector<OracleEntry>& oracles, const BenchConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  RankingConfig ranking{cfg.k, cfg.min_score};
  BenchReport report;
  report.k = cfg.k;
  report.oracle_count = static_cast<int>(oracles.size());

  // A method carrying several oracles still emits its recommendations once.
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<Recommendation>> cache;
  for (const auto& o : oracles) {
    auto unit = units.find(o.file);
    if (unit == units.end()) throw CorpusError("oracle names unknown file '" + o.file + "'");
    auto key = std::make_tuple(o.file, o.class_name, o.method_name);
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::vector<Recommendation> recs;
      try {
        MethodAnalysis a = analyze_method(unit->second, o.class_name, o.method_name);
        make_candidate(a, o.block, o.start, o.end);
        recs = recommend(a, cfg.gen, ranking);
      } catch (const RangeError& e) {
        throw CorpusError(o.file + ": dangling oracle entry: " + e.what());
      }
      report.recommendations_emitted += static_cast<int>(recs.size());
      it = cache.emplace(key, std::move(recs)).first;
    }
    MatchResult m = match(it->second, o);
    if (m.matched_rank) ++report.matched;
    report.matches.push_back(std::move(m));
  }
  report.recall = report.oracle_count ? double(report.matched) / report.oracle_count : 0.0;
  report.precision = report.recommendations_emitted
                         ? double(report.matched) / report.recommendations_emitted
                         : 0.0;
  return report;
}

BenchReport evaluate(const std::filesystem::path& corpus_dir,
                     const std::vector<OracleEntry>& oracles, const BenchConfig& cfg) {
  std::map<std::string, SourceUnit> units;
  for (const auto& o : oracles) {
    if (units.count(o.file)) continue;
    std::filesystem::path p = corpus_dir / o.file;
    std::ifstream in(p, std::ios::binary);
    if (!in) throw CorpusError("cannot read corpus file " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      units.emplace(o.file, resolve_types(parse(ss.str())));
    } catch (const Error& e) {
      throw CorpusError(p.string() + ": " + e.what());
    }
  }
  return evaluate(units, oracles, cfg);
}

ordered_json oracle_to_json(const std::vector<OracleEntry>& oracles) {
  ordered_json arr = ordered_json::array();
  for (const auto& o : oracles) {
    ordered_json j;
    j["file"] = o.file;
    j["class"] = o.class_name;
    j["method"] = o.method_name;
    j["block"] = o.block;
    j["start"] = o.start;
    j["end"] = o.end;
    j["inlined_from"] = o.inlined_from;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<OracleEntry> oracle_from_json(const json& doc) {
  if (!doc.is_array()) throw CorpusError("oracle document must be a JSON array");
  std::vector<OracleEntry> out;
  for (const auto& j : doc) {
    try {
      OracleEntry o;
      o.file = j.at("file").get<std::string>();
      o.class_name = j.at("class").get<std::string>();
      o.method_name = j.at("method").get<std::string>();
      o.block = j.at("block").get<int>();
      o.start = j.at("start").get<int>();
      o.end = j.at("end").get<int>();
      o.inlined_from = j.at("inlined_from").get<std::string>();
      out.push_back(std::move(o));
    } catch (const json::exception& e) {
      throw CorpusError(std::string("malformed oracle entry: ") + e.what());
    }
  }
  return out;
}

std::vector<OracleEntry> read_oracle(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read oracle file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw CorpusError(path.string() + ": " + e.what());
  }
  return oracle_from_json(doc);
}

void write_oracle(const std::filesystem::path& path, const std::vector<OracleEntry>& oracles) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write oracle file " + path.string());
  out << oracle_to_json(oracles).dump(2) << "\n";
}

namespace {

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", x * 100.0);
  return buf;
}

}  // namespace

ordered_json to_json(const BenchReport& r) {
  ordered_json j;
  j["k"] = r.k;
  j["oracles"] = r.oracle_count;
  j["matched"] = r.matched;
  j["emitted"] = r.recommendations_emitted;
  j["recall"] = round4(r.recall);
  j["precision"] = round4(r.precision);
  return j;
}

std::string format_table(const std::vector<BenchReport>& reports) {
  std::vector<std::vector<std::string>> rows{
      {"Top-k", "Oracles", "Matched", "Recall", "Emitted", "Precision"}};
  for (const auto& r : reports)
    rows.push_back({"Top-" + std::to_string(r.k), std::to_string(r.oracle_count),
                    std::to_string(r.matched), percent(r.recall),
                    std::to_string(r.recommendations_emitted), percent(r.precision)});
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      // first column left-aligned, numbers right-aligned
      if (c == 0)
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      else
        out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace jxextract
