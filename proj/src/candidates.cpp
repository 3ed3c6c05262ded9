#include "jxextract/candidates.hpp"

#include <stdexcept>

#include "jxextract/error.hpp"

namespace jxextract {

std::string MethodAnalysis::qualified_name() const {
  return unit->package_name + "." + cls->name + "." + method->name;
}

MethodAnalysis analyze_method(const SourceUnit& unit, const ClassDecl& cls,
                              const MethodDecl& method) {
  LabeledMethod labeled(method);
  DefUse facts = def_use(labeled, &cls);
  return MethodAnalysis{&unit, &cls, &method, std::move(labeled), std::move(facts)};
}

MethodAnalysis analyze_method(const SourceUnit& unit, const std::string& class_name,
                              const std::string& method_name) {
  const ClassDecl* cls = unit.find_class(class_name);
  if (!cls) throw RangeError("no class '" + class_name + "'");
  const MethodDecl* m = cls->find_method(method_name);
  if (!m) throw RangeError("no method '" + method_name + "' in class " + class_name);
  return analyze_method(unit, *cls, *m);
}

Candidate make_candidate(const MethodAnalysis& analysis, int block_id, int start,
                         int end) {
  Candidate c;
  c.class_name = analysis.cls->name;
  c.method_name = analysis.method->name;
  c.sel = selection(analysis.labeled, block_id, start, end);
  c.size = count_statements(c.sel);
  return c;
}

std::string code(Precondition p) { return "V" + std::to_string(static_cast<int>(p)); }

std::string description(Precondition p) {
  switch (p) {
    case Precondition::MinSize:
      return "fewer statements than the minimum";
    case Precondition::SingleLiveOut:
      return "more than one variable is live after the selection";
    case Precondition::ControlFlow:
      return "return, or break/continue leaving the selection";
    case Precondition::NonEmptyRemainder:
      return "selection covers the whole method body";
    case Precondition::DeclarationSplit:
      return "a local declared inside is used after the selection";
  }
  return {};
}

std::vector<std::string> ValidityVerdict::codes() const {
  std::vector<std::string> out;
  for (auto r : reasons) out.push_back(code(r));
  return out;
}

namespace {

bool escapes(const MethodAnalysis& a, const Selection& sel) {
  const auto& flat = a.labeled.statements();
  for (std::size_t i = sel.first; i < sel.last; ++i) {
    const Stmt& s = *flat[i].stmt;
    if (s.as<Return>()) return true;
    if (!s.as<Break>() && !s.as<Continue>()) continue;
    std::optional<std::size_t> up = flat[i].parent;
    while (up && !flat[*up].stmt->as<While>() && !flat[*up].stmt->as<For>())
      up = flat[*up].parent;
    if (!up || !sel.contains(*up)) return true;
  }
  return false;
}

bool splits_declaration(const MethodAnalysis& a, const Selection& sel,
                        const std::set<VarId>& outs) {
  const auto& stmts = a.facts.stmts;
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    if (sel.contains(i)) continue;
    for (const auto* list : {&stmts[i].uses, &stmts[i].defs}) {
      for (const auto& v : *list) {
        if (!declared_inside(a.labeled, v, sel)) continue;
        if (outs.size() != 1 || *outs.begin() != v) return true;
      }
    }
  }
  return false;
}

}  // namespace

ValidityVerdict is_valid(const Candidate& cand, const MethodAnalysis& analysis,
                         const GenerationConfig& cfg) {
  ValidityVerdict v;
  const Selection& sel = cand.sel;
  auto fail = [&](Precondition p) {
    v.valid = false;
    v.reasons.push_back(p);
  };
  if (cand.size < static_cast<std::size_t>(cfg.min_extracted_statements))
    fail(Precondition::MinSize);
  std::set<VarId> outs = live_out(analysis.labeled, analysis.facts, sel);
  if (outs.size() > 1) fail(Precondition::SingleLiveOut);
  if (escapes(analysis, sel)) fail(Precondition::ControlFlow);
  if (sel.last - sel.first == analysis.labeled.size())
    fail(Precondition::NonEmptyRemainder);
  if (splits_declaration(analysis, sel, outs)) fail(Precondition::DeclarationSplit);
  return v;
}

std::vector<Candidate> enumerate_all(const MethodAnalysis& analysis) {
  std::vector<Candidate> out;
  for (const auto& block : analysis.labeled.blocks()) {
    int n = static_cast<int>(block.statements.size());
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) out.push_back(make_candidate(analysis, block.id, i, j));
  }
  return out;
}

std::vector<Candidate> generate(const MethodAnalysis& analysis,
                                const GenerationConfig& cfg) {
  if (cfg.min_extracted_statements < 1)
    throw std::invalid_argument("min_extracted_statements must be >= 1");
  std::vector<Candidate> out;
  for (auto& c : enumerate_all(analysis))
    if (is_valid(c, analysis, cfg).valid) out.push_back(std::move(c));
  return out;
}

}  // namespace jxextract
