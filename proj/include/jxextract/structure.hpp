#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jxextract/ast.hpp"

namespace jxextract {

// `SX.Y`: statement Y of block X, both 1-based.
struct StmtLabel {
  int block = 0;
  int index = 0;

  std::string str() const;
  friend auto operator<=>(const StmtLabel&, const StmtLabel&) = default;
};

// One statement of the method in pre-order (a statement precedes its child
// blocks, then-block before else-block).
struct FlatStmt {
  const Stmt* stmt = nullptr;
  StmtLabel label;
  std::optional<std::size_t> parent;  // flat index of the owning statement
  std::size_t subtree_end = 0;        // one past the last nested statement
  std::vector<int> child_blocks;      // block ids owned by this statement
};

struct BlockInfo {
  int id = 0;
  std::vector<std::size_t> statements;  // flat indices of direct children
  std::optional<std::size_t> parent;    // owning statement; none for block 1
  const Block* block = nullptr;
};

// A method body split into numbered blocks with every statement labeled.
//
// Block 1 is the body. A composite statement receives numbers for all of its
// child blocks when it is visited (then before else), and its children are
// numbered afterwards, depth first. References into the MethodDecl are kept,
// so the method must outlive this object.
class LabeledMethod {
 public:
  explicit LabeledMethod(const MethodDecl& method);

  const MethodDecl& method() const { return *method_; }
  const std::vector<BlockInfo>& blocks() const { return blocks_; }
  // Throws RangeError for an unknown id.
  const BlockInfo& block(int id) const;
  const std::vector<FlatStmt>& statements() const { return flat_; }
  const FlatStmt& at(std::size_t flat_index) const { return flat_.at(flat_index); }
  std::size_t size() const { return flat_.size(); }

  // Throws std::out_of_range if `stmt` is not part of this method.
  std::size_t index_of(const Stmt& stmt) const;
  StmtLabel label(const Stmt& stmt) const { return flat_[index_of(stmt)].label; }
  std::size_t flat_index(StmtLabel label) const;

 private:
  void visit_block(const Block& block, int id, std::optional<std::size_t> parent);

  const MethodDecl* method_;
  std::vector<BlockInfo> blocks_;
  std::vector<FlatStmt> flat_;
  std::unordered_map<const Stmt*, std::size_t> index_;
};

inline LabeledMethod build_blocks(const MethodDecl& method) {
  return LabeledMethod(method);
}

// A contiguous run of direct statements start..end (inclusive, 1-based) of one
// block, together with everything nested inside them. Because statements are
// numbered in pre-order the closure is the flat range [first, last).
struct Selection {
  int block_id = 0;
  int start = 0;
  int end = 0;
  std::size_t first = 0;
  std::size_t last = 0;
  SourceSpan span;

  bool contains(std::size_t flat_index) const {
    return first <= flat_index && flat_index < last;
  }
  std::vector<std::size_t> closure() const;
  // "S3.2–S3.5"
  std::string label_range() const;

  friend bool operator==(const Selection& a, const Selection& b) {
    return a.block_id == b.block_id && a.start == b.start && a.end == b.end;
  }
};

// Throws RangeError unless the block exists and 1 <= start <= end <= length.
Selection selection(const LabeledMethod& labeled, int block_id, int start, int end);

// Size of the closure, nested statements included.
inline std::size_t count_statements(const Selection& sel) { return sel.last - sel.first; }

}  // namespace jxextract
