#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jxextract/ast.hpp"
#include "jxextract/candidates.hpp"
#include "jxextract/deps.hpp"

namespace jxextract {

struct ExtractOptions {
  GenerationConfig gen;
  // Turn this many leading `T x = e;` statements of the selection into
  // parameters of the new method, passing `e` at the call site. Used to undo
  // the parameter bindings that inline_method() introduces.
  std::size_t promote_leading_declarations = 0;
};

struct ExtractPlan {
  std::string new_method_name;
  std::vector<VarId> params;
  std::optional<VarId> return_var;  // the single live-out, if any
  std::optional<TypeRef> return_type;
  bool return_var_declared_inside = false;
  // Outer variables assigned inside the selection that are not passed in;
  // the new method declares them itself.
  std::vector<VarId> declared_locals;
  // Call arguments for the promoted parameters, in order.
  std::vector<Expr> promoted_args;
};

// Throws PreconditionError when the candidate fails is_valid(), or when the
// requested promotion does not fit the selection.
ExtractPlan plan_extract(const MethodAnalysis& analysis, const Candidate& cand,
                         const std::string& name, const ExtractOptions& opts = {});

// Moves the candidate's statements into a new method `name` placed right
// after the host, and replaces them by a call. The result is re-parsed and
// re-resolved. Throws PreconditionError or NameClashError.
SourceUnit extract(const SourceUnit& unit, const Candidate& cand,
                   const std::string& name, const ExtractOptions& opts = {});

// A planted Extract Method opportunity: the statement range an inline
// mutation produced in `class_name.method_name`.
struct OracleEntry {
  std::string file;
  std::string class_name;
  std::string method_name;
  int block = 0;
  int start = 0;
  int end = 0;
  std::string inlined_from;

  friend bool operator==(const OracleEntry&, const OracleEntry&) = default;
};

struct InlineResult {
  SourceUnit unit;
  OracleEntry oracle;
};

// Replaces the single call of `callee_name` inside `class_name` by fresh
// declarations binding each parameter to its argument followed by the
// callee's statements, then deletes the callee. A trailing `return v;` is
// folded into the call site `T r = callee(...)` by renaming v to r.
//
// Requires: the callee is called exactly once in the class, as a statement
// `callee(...);` (void) or `T r = callee(...);`, is not recursive, and has no
// return other than a trailing `return v;` of a parameter or top-level local.
// Throws InlineError otherwise.
InlineResult inline_method(const SourceUnit& unit, const std::string& class_name,
                           const std::string& callee_name,
                           const std::string& file = {});

struct MutationResult {
  SourceUnit unit;
  std::vector<OracleEntry> oracles;
};

// Seeded random Inline Method mutation. Eligible callees (inlinable, body of
// at least cfg.min_extracted_statements statements, planted range valid in
// the result) are visited in a shuffled order and each is inlined with the
// given probability, at most one inline per host method. Deterministic for a
// fixed seed.
MutationResult mutate(const SourceUnit& unit, std::uint64_t seed,
                      const GenerationConfig& cfg = {}, double probability = 0.5,
                      const std::string& file = {});

}  // namespace jxextract
