#include "jxextract/structure.hpp"

#include "jxextract/error.hpp"

namespace jxextract {

std::string StmtLabel::str() const {
  return "S" + std::to_string(block) + "." + std::to_string(index);
}

LabeledMethod::LabeledMethod(const MethodDecl& method) : method_(&method) {
  blocks_.push_back(BlockInfo{1, {}, std::nullopt, &method.body});
  visit_block(method.body, 1, std::nullopt);
}

void LabeledMethod::visit_block(const Block& block, int id,
                                std::optional<std::size_t> parent) {
  int index = 0;
  for (const auto& s : block.stmts) {
    std::size_t me = flat_.size();
    FlatStmt fs;
    fs.stmt = &s;
    fs.label = {id, ++index};
    fs.parent = parent;
    flat_.push_back(fs);
    index_.emplace(&s, me);
    blocks_[static_cast<std::size_t>(id - 1)].statements.push_back(me);

    std::vector<const Block*> children = child_blocks(s);
    std::vector<int> ids;
    for (const Block* child : children) {
      int child_id = static_cast<int>(blocks_.size()) + 1;
      blocks_.push_back(BlockInfo{child_id, {}, me, child});
      ids.push_back(child_id);
    }
    flat_[me].child_blocks = ids;
    for (std::size_t k = 0; k < children.size(); ++k)
      visit_block(*children[k], ids[k], me);
    flat_[me].subtree_end = flat_.size();
  }
}

const BlockInfo& LabeledMethod::block(int id) const {
  if (id < 1 || static_cast<std::size_t>(id) > blocks_.size())
    throw RangeError("no block " + std::to_string(id) + " in method " +
                     method_->name);
  return blocks_[static_cast<std::size_t>(id - 1)];
}

std::size_t LabeledMethod::index_of(const Stmt& stmt) const {
  auto it = index_.find(&stmt);
  if (it == index_.end()) throw std::out_of_range("statement not in method");
  return it->second;
}

std::size_t LabeledMethod::flat_index(StmtLabel label) const {
  const BlockInfo& b = block(label.block);
  if (label.index < 1 || static_cast<std::size_t>(label.index) > b.statements.size())
    throw RangeError("no statement " + label.str());
  return b.statements[static_cast<std::size_t>(label.index - 1)];
}

std::vector<std::size_t> Selection::closure() const {
  std::vector<std::size_t> out;
  out.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) out.push_back(i);
  return out;
}

std::string Selection::label_range() const {
  StmtLabel a{block_id, start};
  StmtLabel b{block_id, end};
  return a.str() + "–" + b.str();
}

Selection selection(const LabeledMethod& labeled, int block_id, int start, int end) {
  const BlockInfo& b = labeled.block(block_id);
  int n = static_cast<int>(b.statements.size());
  if (start < 1 || start > end || end > n)
    throw RangeError("selection " + std::to_string(start) + ".." +
                     std::to_string(end) + " out of range for block " +
                     std::to_string(block_id) + " of length " + std::to_string(n));
  const FlatStmt& lo = labeled.at(b.statements[static_cast<std::size_t>(start - 1)]);
  std::size_t hi_index = b.statements[static_cast<std::size_t>(end - 1)];
  const FlatStmt& hi = labeled.at(hi_index);
  Selection sel;
  sel.block_id = block_id;
  sel.start = start;
  sel.end = end;
  sel.first = b.statements[static_cast<std::size_t>(start - 1)];
  sel.last = hi.subtree_end;
  sel.span = {lo.stmt->span.begin, hi.stmt->span.end};
  return sel;
}

}  // namespace jxextract
