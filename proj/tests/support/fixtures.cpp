#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "jxextract/parser.hpp"
#include "jxextract/resolve.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace jxtest {

fs::path fixture_dir() { return JX_FIXTURE_DIR; }
fs::path bench_fixture_dir() { return JX_BENCH_FIXTURE_DIR; }

jxextract::SourceUnit parse_resolved(std::string_view text) {
  return jxextract::resolve_types(jxextract::parse(text));
}

std::string method_source(const std::string& body, const std::string& params) {
  return "package p;\nclass C {\n    void m(" + params + ") {\n" + body + "\n    }\n}\n";
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    for (const auto& e : fs::directory_iterator(fixture_dir())) {
      if (e.path().extension() != ".jx") continue;
      std::ifstream in(e.path());
      std::stringstream ss;
      ss << in.rdbuf();
      out.push_back(Fixture{e.path().filename().string(), ss.str(), parse_resolved(ss.str())});
    }
    std::sort(out.begin(), out.end(),
              [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
  }();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw std::runtime_error("no fixture " + name);
}

}  // namespace jxtest
