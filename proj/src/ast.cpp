#include "jxextract/ast.hpp"

#include <algorithm>

namespace jxextract {

TypeRef TypeRef::builtin(Kind kind) {
  TypeRef t;
  t.kind = kind;
  switch (kind) {
    case Kind::Int: t.name = "int"; break;
    case Kind::Boolean: t.name = "boolean"; break;
    case Kind::Double: t.name = "double"; break;
    case Kind::String: t.name = "String"; break;
    case Kind::Named: break;
  }
  return t;
}

TypeRef TypeRef::named(std::string name, std::string resolved) {
  TypeRef t;
  t.kind = Kind::Named;
  t.name = std::move(name);
  t.resolved = std::move(resolved);
  return t;
}

const char* spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return "||";
    case BinaryOp::And: return "&&";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
  }
  return "?";
}

const char* spelling(UnaryOp op) { return op == UnaryOp::Not ? "!" : "-"; }

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return 1;
    case BinaryOp::And: return 2;
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 3;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return 4;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 5;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return 6;
  }
  return 0;
}

namespace {

template <class StmtT, class BlockPtr>
std::vector<BlockPtr> child_blocks_impl(StmtT& stmt) {
  std::vector<BlockPtr> out;
  if (auto* s = stmt.template as<If>()) {
    out.push_back(&s->then_block);
    if (s->else_block) out.push_back(&*s->else_block);
  } else if (auto* s = stmt.template as<While>()) {
    out.push_back(&s->body);
  } else if (auto* s = stmt.template as<For>()) {
    out.push_back(&s->body);
  } else if (auto* s = stmt.template as<BlockStmt>()) {
    out.push_back(&s->block);
  }
  return out;
}

template <class Range, class Name>
auto find_named(Range& range, const Name& name) -> decltype(&*range.begin()) {
  auto it = std::find_if(range.begin(), range.end(),
                         [&](const auto& item) { return item.name == name; });
  return it == range.end() ? nullptr : &*it;
}

}  // namespace

std::vector<const Block*> child_blocks(const Stmt& stmt) {
  return child_blocks_impl<const Stmt, const Block*>(stmt);
}

std::vector<Block*> child_blocks(Stmt& stmt) {
  return child_blocks_impl<Stmt, Block*>(stmt);
}

const MethodDecl* ClassDecl::find_method(const std::string& method_name) const {
  return find_named(methods, method_name);
}

MethodDecl* ClassDecl::find_method(const std::string& method_name) {
  return find_named(methods, method_name);
}

const FieldDecl* ClassDecl::find_field(const std::string& field_name) const {
  return find_named(fields, field_name);
}

const ClassDecl* SourceUnit::find_class(const std::string& class_name) const {
  return find_named(classes, class_name);
}

ClassDecl* SourceUnit::find_class(const std::string& class_name) {
  return find_named(classes, class_name);
}

}  // namespace jxextract
