#include "jxextract/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jxextract/bench.hpp"
#include "jxextract/candidates.hpp"
#include "jxextract/error.hpp"
#include "jxextract/parser.hpp"
#include "jxextract/printer.hpp"
#include "jxextract/refactor.hpp"
#include "jxextract/resolve.hpp"
#include "jxextract/structure.hpp"

namespace fs = std::filesystem;

namespace jxextract {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

SourceUnit load_unit(const fs::path& path) {
  try {
    return resolve_types(parse(read_file(path)));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::vector<std::pair<fs::path, std::string>> collect_sources(const fs::path& root) {
  std::vector<std::pair<fs::path, std::string>> out;
  if (fs::is_regular_file(root)) {
    out.emplace_back(root, root.filename().generic_string());
    return out;
  }
  if (!fs::is_directory(root)) throw Error("no such file or directory: " + root.string());
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".jx") continue;
    out.emplace_back(entry.path(), fs::relative(entry.path(), root).generic_string());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::pair<std::string, std::string> find_method(const SourceUnit& unit,
                                                const std::string& spec) {
  std::vector<std::pair<std::string, std::string>> hits;
  for (const auto& cls : unit.classes) {
    for (const auto& m : cls.methods) {
      std::string short_name = cls.name + "." + m.name;
      std::string full = unit.package_name.empty() ? short_name
                                                   : unit.package_name + "." + short_name;
      if (spec == m.name || spec == short_name || spec == full)
        hits.emplace_back(cls.name, m.name);
    }
  }
  if (hits.empty()) throw RangeError("no method '" + spec + "'");
  if (hits.size() > 1)
    throw RangeError("method name '" + spec + "' is ambiguous; qualify it as Class.method");
  return hits.front();
}

std::string label_listing(const MethodDecl& method) {
  LabeledMethod labeled(method);
  std::size_t width = 0;
  for (const auto& s : labeled.statements()) width = std::max(width, s.label.str().size());
  return print_method(
      method, [&](const Stmt& s) { return labeled.label(s).str(); }, width + 2);
}

ReportDocument build_report(const std::vector<std::pair<std::string, SourceUnit>>& units,
                            const GenerationConfig& gen, const RankingConfig& ranking) {
  ReportDocument doc;
  doc.version = JXEXTRACT_VERSION;
  for (const auto& [path, unit] : units)
    doc.files.push_back(FileReport{path, recommend_unit(unit, gen, ranking)});
  std::stable_sort(doc.files.begin(), doc.files.end(),
                   [](const auto& a, const auto& b) { return a.path < b.path; });
  return doc;
}

std::uint64_t file_seed(std::uint64_t seed, const std::string& relative_path) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : relative_path) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finalizer
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct RecommendFlags {
  int min_statements = 3;
  int max_recs = 3;
  double min_score = 0.0;
};

void add_recommend_flags(CLI::App* cmd, RecommendFlags& f) {
  cmd->add_option("--min-statements", f.min_statements,
                  "Minimum statements in an extracted fragment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--min-score", f.min_score, "Drop recommendations scoring below this")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

int cmd_recommend(const std::vector<std::string>& paths, const RecommendFlags& f, bool json,
                  bool explain, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, SourceUnit>> units;
  for (const auto& p : paths) {
    for (const auto& [full, rel] : collect_sources(p)) {
      std::string shown = fs::is_directory(p) ? (fs::path(p) / rel).generic_string()
                                              : fs::path(p).generic_string();
      try {
        units.emplace_back(shown, load_unit(full));
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
      }
    }
  }
  ReportDocument doc = build_report(units, GenerationConfig{f.min_statements},
                                    RankingConfig{f.max_recs, f.min_score});
  if (json)
    out << to_json(doc, explain).dump(2) << "\n";
  else
    out << format_text(doc, explain);
  return kExitOk;
}

int cmd_apply(const std::string& path, const std::string& method_spec,
              const std::string& range, const std::string& name, const std::string& output,
              int min_statements, std::ostream& out, std::ostream& err) {
  SourceUnit unit = load_unit(path);
  auto [cls, method] = find_method(unit, method_spec);

  int b = 0, i = 0, j = 0;
  char c1 = 0, c2 = 0;
  std::istringstream rs(range);
  if (!(rs >> b >> c1 >> i >> c2 >> j) || c1 != ':' || c2 != ':' || rs.peek() != EOF) {
    err << "error: range '" << range << "' is not of the form B:I:J\n";
    return kExitPrecondition;
  }
  MethodAnalysis analysis = analyze_method(unit, cls, method);
  Candidate cand;
  try {
    cand = make_candidate(analysis, b, i, j);
  } catch (const RangeError& e) {
    err << "error: invalid range: " << e.what() << "\n";
    return kExitPrecondition;
  }
  GenerationConfig gen{min_statements};
  ValidityVerdict verdict = is_valid(cand, analysis, gen);
  if (!verdict.valid) {
    err << "error: " << cand.sel.label_range() << " cannot be extracted:\n";
    for (auto r : verdict.reasons) err << "  " << code(r) << ": " << description(r) << "\n";
    return kExitPrecondition;
  }
  SourceUnit result;
  try {
    result = extract(unit, cand, name, ExtractOptions{gen, 0});
  } catch (const NameClashError& e) {
    err << "error: NameClash: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  std::string text = pretty_print(result);
  if (output.empty() || output == "-")
    out << text;
  else
    write_file(output, text);
  return kExitOk;
}

int cmd_mutate(const std::string& path, std::uint64_t seed, const std::string& outdir,
               std::string oracle_path, double probability, int min_statements,
               std::ostream& out, std::ostream& err) {
  std::vector<std::pair<fs::path, std::string>> sources = collect_sources(path);
  std::vector<std::pair<std::string, SourceUnit>> units;
  for (const auto& [full, rel] : sources) {
    try {
      units.emplace_back(rel, load_unit(full));
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  fs::create_directories(outdir);
  std::vector<OracleEntry> oracles;
  std::size_t changed = 0;
  for (std::size_t n = 0; n < sources.size(); ++n) {
    const auto& [rel, unit] = units[n];
    MutationResult r =
        mutate(unit, file_seed(seed, rel), GenerationConfig{min_statements}, probability, rel);
    fs::path target = fs::path(outdir) / rel;
    if (r.oracles.empty()) {
      write_file(target, read_file(sources[n].first));
    } else {
      ++changed;
      write_file(target, pretty_print(r.unit));
      oracles.insert(oracles.end(), r.oracles.begin(), r.oracles.end());
    }
  }
  if (oracle_path.empty()) oracle_path = (fs::path(outdir) / "oracle.json").string();
  write_oracle(oracle_path, oracles);
  out << "mutated " << changed << " of " << sources.size() << " files, " << oracles.size()
      << " oracle entries written to " << oracle_path << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& corpus, std::string oracle_path, const std::vector<int>& ks,
              const RecommendFlags& f, bool json_only, std::ostream& out) {
  if (oracle_path.empty()) oracle_path = (fs::path(corpus) / "oracle.json").string();
  std::vector<OracleEntry> oracles = read_oracle(oracle_path);
  std::vector<BenchReport> reports;
  for (int k : ks)
    reports.push_back(evaluate(fs::path(corpus), oracles,
                               BenchConfig{k, GenerationConfig{f.min_statements}, f.min_score}));
  nlohmann::ordered_json j;
  if (reports.size() == 1) {
    j = to_json(reports.front());
  } else {
    j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
  }
  out << j.dump(2) << "\n";
  if (!json_only) out << "\n" << format_table(reports);
  return kExitOk;
}

int cmd_label(const std::string& path, const std::string& method_spec, std::ostream& out) {
  SourceUnit unit = load_unit(path);
  auto [cls, method] = find_method(unit, method_spec);
  out << label_listing(*unit.find_class(cls)->find_method(method));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extract Method recommendations for JX sources", "jxextract"};
  app.set_version_flag("--version", std::string(JXEXTRACT_VERSION));
  app.require_subcommand(1);

  // recommend
  std::vector<std::string> rec_paths;
  RecommendFlags rec_flags;
  bool rec_json = false, rec_explain = false;
  auto* rec = app.add_subcommand("recommend", "Rank Extract Method candidates per method");
  rec->add_option("paths", rec_paths, ".jx files or directories")->required();
  add_recommend_flags(rec, rec_flags);
  rec->add_option("--max-recs", rec_flags.max_recs, "Recommendations kept per method")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rec->add_flag("--json", rec_json, "Emit the JSON report");
  rec->add_flag("--explain", rec_explain, "Include dependency sets");

  // apply
  std::string ap_path, ap_method, ap_range, ap_name, ap_out;
  int ap_min = 3;
  auto* ap = app.add_subcommand("apply", "Extract a statement range into a new method");
  ap->add_option("path", ap_path, ".jx file")->required();
  ap->add_option("--method", ap_method, "method, Class.method or pkg.Class.method")->required();
  ap->add_option("--range", ap_range, "Block and statement range B:I:J")->required();
  ap->add_option("--name", ap_name, "Name of the new method")->required();
  ap->add_option("-o,--output", ap_out, "Output file (default: standard output)");
  ap->add_option("--min-statements", ap_min, "Minimum statements in an extracted fragment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // mutate
  std::string mu_path, mu_out, mu_oracle;
  std::uint64_t mu_seed = 0;
  double mu_prob = 0.5;
  int mu_min = 3;
  auto* mu = app.add_subcommand("mutate", "Plant Extract Method oracles by inlining callees");
  mu->add_option("path", mu_path, ".jx file or directory")->required();
  mu->add_option("--seed", mu_seed, "Random seed")->capture_default_str();
  mu->add_option("-o,--output", mu_out, "Output directory")->required();
  mu->add_option("--oracle", mu_oracle, "Oracle JSON path (default: <outdir>/oracle.json)");
  mu->add_option("--probability", mu_prob, "Chance of inlining each eligible callee")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  mu->add_option("--min-statements", mu_min, "Minimum callee body size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // bench
  std::string be_corpus, be_oracle;
  std::vector<int> be_k{1};
  RecommendFlags be_flags;
  bool be_json = false;
  auto* be = app.add_subcommand("bench", "Recall and precision against an oracle");
  be->add_option("corpus", be_corpus, "Mutated corpus directory")->required();
  be->add_option("--oracle", be_oracle, "Oracle JSON (default: <corpus>/oracle.json)");
  be->add_option("--k", be_k, "Top-k cutoff(s), e.g. --k 1,2,3")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_recommend_flags(be, be_flags);
  be->add_flag("--json", be_json, "Print only the JSON report");

  // label
  std::string la_path, la_method;
  auto* la = app.add_subcommand("label", "Print a method with SX.Y statement labels");
  la->add_option("path", la_path, ".jx file")->required();
  la->add_option("--method", la_method, "method, Class.method or pkg.Class.method")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*rec) return cmd_recommend(rec_paths, rec_flags, rec_json, rec_explain, out, err);
    if (*ap) return cmd_apply(ap_path, ap_method, ap_range, ap_name, ap_out, ap_min, out, err);
    if (*mu) return cmd_mutate(mu_path, mu_seed, mu_out, mu_oracle, mu_prob, mu_min, out, err);
    if (*be) return cmd_bench(be_corpus, be_oracle, be_k, be_flags, be_json, out);
    if (*la) return cmd_label(la_path, la_method, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace jxextract
