#pragma once

#include <string>
#include <vector>

#include "jxextract/ast.hpp"
#include "jxextract/deps.hpp"
#include "jxextract/structure.hpp"

namespace jxextract {

struct GenerationConfig {
  int min_extracted_statements = 3;
};

// Everything the candidate/scoring stages need about one method. Holds
// pointers into `unit`, which must outlive it.
struct MethodAnalysis {
  const SourceUnit* unit = nullptr;
  const ClassDecl* cls = nullptr;
  const MethodDecl* method = nullptr;
  LabeledMethod labeled;
  DefUse facts;

  std::string qualified_name() const;
};

MethodAnalysis analyze_method(const SourceUnit& unit, const ClassDecl& cls,
                              const MethodDecl& method);

// Throws RangeError when the class or method does not exist.
MethodAnalysis analyze_method(const SourceUnit& unit, const std::string& class_name,
                              const std::string& method_name);

struct Candidate {
  std::string class_name;
  std::string method_name;
  Selection sel;
  std::size_t size = 0;  // closure statement count
};

// Throws RangeError for out-of-bounds coordinates.
Candidate make_candidate(const MethodAnalysis& analysis, int block_id, int start,
                         int end);

// The validity preconditions, checked in this order.
enum class Precondition {
  MinSize = 1,        // V1: closure has at least min_extracted_statements
  SingleLiveOut,      // V2: at most one live-out variable
  ControlFlow,        // V3: no return; no break/continue leaving the closure
  NonEmptyRemainder,  // V4: something stays behind in the method
  DeclarationSplit,   // V5: locals declared inside are not used outside,
                      //     except the single live-out
};

std::string code(Precondition p);         // "V1".."V5"
std::string description(Precondition p);

struct ValidityVerdict {
  bool valid = true;
  std::vector<Precondition> reasons;

  std::vector<std::string> codes() const;
};

ValidityVerdict is_valid(const Candidate& cand, const MethodAnalysis& analysis,
                         const GenerationConfig& cfg = {});

// Every (block, i, j) with 1 <= i <= j <= |block|, block ascending, then i,
// then j. No validity filtering.
std::vector<Candidate> enumerate_all(const MethodAnalysis& analysis);

// enumerate_all() restricted to candidates that pass is_valid().
std::vector<Candidate> generate(const MethodAnalysis& analysis,
                                const GenerationConfig& cfg = {});

}  // namespace jxextract
