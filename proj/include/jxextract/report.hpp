#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jxextract/scoring.hpp"

namespace jxextract {

struct FileReport {
  std::string path;
  std::vector<MethodRecommendations> methods;  // declaration order
};

struct ReportDocument {
  std::string version;
  std::vector<FileReport> files;  // sorted by path
};

// Document shape:
//   {"version": "...",
//    "methods": [{"file", "method", "recommendations": [
//        {"rank", "range", "block", "start", "end",
//         "span": {"begin", "end"}, "size",
//         "score": {"total", "var", "type", "pack"},
//         "deps": {"selected": {...}, "remainder": {...}}   (explain only)
//        }]}]}
// Methods without recommendations are left out; scores carry 4 decimals.
nlohmann::ordered_json to_json(const ReportDocument& doc, bool explain = false);
std::string format_text(const ReportDocument& doc, bool explain = false);

nlohmann::ordered_json to_json(const DepSets& deps);

double round4(double x);

}  // namespace jxextract
