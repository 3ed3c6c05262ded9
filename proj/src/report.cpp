#include "jxextract/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace jxextract {

using nlohmann::ordered_json;

double round4(double x) { return std::round(x * 1e4) / 1e4; }

namespace {

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::vector<std::string> var_names(const DepSets& d) {
  std::vector<std::string> out;
  for (const auto& v : d.vars) out.push_back(v.display());
  // shadowed locals show up twice; that is intended
  std::sort(out.begin(), out.end());
  return out;
}

template <class Range>
std::string braces(const Range& items) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : items) {
    if (!first) s += ", ";
    s += x;
    first = false;
  }
  return s + "}";
}

}  // namespace

ordered_json to_json(const DepSets& deps) {
  ordered_json j;
  j["vars"] = var_names(deps);
  j["types"] = std::vector<std::string>(deps.types.begin(), deps.types.end());
  j["packs"] = std::vector<std::string>(deps.packs.begin(), deps.packs.end());
  return j;
}

ordered_json to_json(const ReportDocument& doc, bool explain) {
  ordered_json root;
  root["version"] = doc.version;
  ordered_json methods = ordered_json::array();
  for (const auto& file : doc.files) {
    for (const auto& m : file.methods) {
      if (m.recommendations.empty()) continue;
      ordered_json jm;
      jm["file"] = file.path;
      jm["method"] = m.qualified_name;
      ordered_json recs = ordered_json::array();
      for (const auto& r : m.recommendations) {
        const Selection& s = r.candidate().sel;
        ordered_json jr;
        jr["rank"] = r.rank;
        jr["range"] = s.label_range();
        jr["block"] = s.block_id;
        jr["start"] = s.start;
        jr["end"] = s.end;
        jr["span"] = {{"begin", s.span.begin.offset}, {"end", s.span.end.offset}};
        jr["size"] = r.candidate().size;
        jr["score"] = {{"total", round4(r.score().total)},
                       {"var", round4(r.score().dist_var)},
                       {"type", round4(r.score().dist_type)},
                       {"pack", round4(r.score().dist_pack)}};
        if (explain)
          jr["deps"] = {{"selected", to_json(r.scored.selected)},
                        {"remainder", to_json(r.scored.remainder)}};
        recs.push_back(std::move(jr));
      }
      jm["recommendations"] = std::move(recs);
      methods.push_back(std::move(jm));
    }
  }
  root["methods"] = std::move(methods);
  return root;
}

std::string format_text(const ReportDocument& doc, bool explain) {
  std::ostringstream out;
  bool any = false;
  for (const auto& file : doc.files) {
    for (const auto& m : file.methods) {
      if (m.recommendations.empty()) continue;
      any = true;
      out << file.path << ": " << m.qualified_name << "\n";
      for (const auto& r : m.recommendations) {
        const Score& sc = r.score();
        out << "  #" << r.rank << "  " << r.candidate().sel.label_range() << "  size "
            << r.candidate().size << "  score " << fixed4(sc.total) << " (var "
            << fixed4(sc.dist_var) << ", type " << fixed4(sc.dist_type) << ", pack "
            << fixed4(sc.dist_pack) << ")\n";
        if (!explain) continue;
        for (const auto* part : {&r.scored.selected, &r.scored.remainder}) {
          out << (part == &r.scored.selected ? "      m'  " : "      m'' ")
              << "vars " << braces(var_names(*part)) << "  types " << braces(part->types)
              << "  packs " << braces(part->packs) << "\n";
        }
      }
    }
  }
  if (!any) out << "no recommendations\n";
  return out.str();
}

}  // namespace jxextract
