#pragma once

// Syntax tree for JX, the small Java-like language the analyzer works on.
//
// Nodes are plain values: copying a SourceUnit deep-copies the tree. Spans are
// carried on every node but never take part in equality, so `a == b` is the
// structural comparison used by the round-trip tests.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace jxextract {

struct SourcePos {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

// Half-open byte range [begin.offset, end.offset).
struct SourceSpan {
  SourcePos begin;
  SourcePos end;

  bool contains(const SourceSpan& other) const {
    return begin.offset <= other.begin.offset && other.end.offset <= end.offset;
  }
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// Owning pointer with value semantics, used for recursive members.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

struct TypeRef {
  enum class Kind { Int, Boolean, Double, String, Named };

  Kind kind = Kind::Named;
  // Source spelling: simple ("Fig") or dotted ("org.app.Fig"). Builtins carry
  // their keyword.
  std::string name;
  // Fully qualified name once resolve_types() has run. Empty for builtins.
  std::string resolved;

  bool is_builtin() const { return kind != Kind::Named; }

  static TypeRef builtin(Kind kind);
  static TypeRef named(std::string name, std::string resolved = {});

  friend bool operator==(const TypeRef&, const TypeRef&) = default;
};

struct Expr;

enum class BinaryOp { Or, And, Eq, Ne, Lt, Le, Gt, Ge, Add, Sub, Mul, Div, Mod };
enum class UnaryOp { Not, Neg };

const char* spelling(BinaryOp op);
const char* spelling(UnaryOp op);
// Binding strength; higher binds tighter. Unary operators sit above all
// binary ones.
int precedence(BinaryOp op);

struct IntLit {
  std::int64_t value = 0;
  friend bool operator==(const IntLit&, const IntLit&) = default;
};
struct BoolLit {
  bool value = false;
  friend bool operator==(const BoolLit&, const BoolLit&) = default;
};
// Kept as its lexeme so printing reproduces the literal exactly.
struct DoubleLit {
  std::string text;
  friend bool operator==(const DoubleLit&, const DoubleLit&) = default;
};
struct StringLit {
  std::string value;
  friend bool operator==(const StringLit&, const StringLit&) = default;
};
// A bare identifier: a local, a parameter or an unqualified field.
struct VarRef {
  std::string name;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};
// `this.name`
struct FieldRef {
  std::string name;
  friend bool operator==(const FieldRef&, const FieldRef&) = default;
};
struct Binary {
  BinaryOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};
struct Unary {
  UnaryOp op;
  Box<Expr> operand;
  friend bool operator==(const Unary&, const Unary&) = default;
};

struct NoReceiver {
  friend bool operator==(NoReceiver, NoReceiver) { return true; }
};
// `this.m(...)`
struct ThisReceiver {
  friend bool operator==(ThisReceiver, ThisReceiver) { return true; }
};
// Either an expression (instance call) or a type (static call). A single bare
// name is parsed as a VarRef expression and turned into a type by
// resolve_types() when no variable of that name is in scope.
using Receiver = std::variant<NoReceiver, ThisReceiver, Box<Expr>, TypeRef>;

struct Call {
  Receiver receiver;
  std::string method;
  std::vector<Expr> args;
  friend bool operator==(const Call&, const Call&) = default;
};
struct New {
  TypeRef type;
  std::vector<Expr> args;
  friend bool operator==(const New&, const New&) = default;
};
struct Cast {
  TypeRef type;
  Box<Expr> operand;
  friend bool operator==(const Cast&, const Cast&) = default;
};

struct Expr {
  using Node = std::variant<IntLit, BoolLit, DoubleLit, StringLit, VarRef,
                            FieldRef, Binary, Unary, Call, New, Cast>;
  Node node;
  SourceSpan span;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  T* as() {
    return std::get_if<T>(&node);
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.node == b.node;
  }
};

struct Stmt;

struct Block {
  std::vector<Stmt> stmts;
  SourceSpan span;

  friend bool operator==(const Block& a, const Block& b);
};

struct LValue {
  bool is_field = false;  // `this.name` when set
  std::string name;
  friend bool operator==(const LValue&, const LValue&) = default;
};

struct VarDecl {
  TypeRef type;
  std::string name;
  std::optional<Expr> init;
  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};
struct ExprStmt {
  Expr expr;
  friend bool operator==(const ExprStmt&, const ExprStmt&) = default;
};
struct Assign {
  LValue target;
  Expr value;
  friend bool operator==(const Assign&, const Assign&) = default;
};
struct If {
  Expr cond;
  Block then_block;
  std::optional<Block> else_block;
  friend bool operator==(const If&, const If&) = default;
};
struct While {
  Expr cond;
  Block body;
  friend bool operator==(const While&, const While&) = default;
};
// Header parts belong to the `for` statement itself; only the body is a
// block.
struct For {
  std::variant<std::monostate, VarDecl, Assign> init;
  std::optional<Expr> cond;
  std::optional<Assign> update;
  Block body;
  friend bool operator==(const For&, const For&) = default;
};
struct Return {
  std::optional<Expr> value;
  friend bool operator==(const Return&, const Return&) = default;
};
struct Break {
  friend bool operator==(Break, Break) { return true; }
};
struct Continue {
  friend bool operator==(Continue, Continue) { return true; }
};
// A nested `{ ... }` used as a statement.
struct BlockStmt {
  Block block;
  friend bool operator==(const BlockStmt&, const BlockStmt&) = default;
};

struct Stmt {
  using Node = std::variant<VarDecl, ExprStmt, Assign, If, While, For, Return,
                            Break, Continue, BlockStmt>;
  Node node;
  SourceSpan span;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  T* as() {
    return std::get_if<T>(&node);
  }

  friend bool operator==(const Stmt& a, const Stmt& b) {
    return a.node == b.node;
  }
};

inline bool operator==(const Block& a, const Block& b) {
  return a.stmts == b.stmts;
}

// Child blocks owned by a statement, in then/else order.
std::vector<const Block*> child_blocks(const Stmt& stmt);
std::vector<Block*> child_blocks(Stmt& stmt);

struct Param {
  TypeRef type;
  std::string name;
  friend bool operator==(const Param&, const Param&) = default;
};

struct FieldDecl {
  TypeRef type;
  std::string name;
  std::optional<Expr> init;
  SourceSpan span;

  friend bool operator==(const FieldDecl& a, const FieldDecl& b) {
    return a.type == b.type && a.name == b.name && a.init == b.init;
  }
};

struct MethodDecl {
  std::optional<TypeRef> return_type;  // nullopt means `void`
  std::string name;
  std::vector<Param> params;
  Block body;
  SourceSpan span;

  friend bool operator==(const MethodDecl& a, const MethodDecl& b) {
    return a.return_type == b.return_type && a.name == b.name &&
           a.params == b.params && a.body == b.body;
  }
};

struct ClassDecl {
  std::string name;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  SourceSpan span;

  const MethodDecl* find_method(const std::string& method_name) const;
  MethodDecl* find_method(const std::string& method_name);
  const FieldDecl* find_field(const std::string& field_name) const;

  friend bool operator==(const ClassDecl& a, const ClassDecl& b) {
    return a.name == b.name && a.fields == b.fields && a.methods == b.methods;
  }
};

struct SourceUnit {
  std::string package_name;
  std::vector<std::string> imports;
  std::vector<ClassDecl> classes;

  const ClassDecl* find_class(const std::string& class_name) const;
  ClassDecl* find_class(const std::string& class_name);

  friend bool operator==(const SourceUnit&, const SourceUnit&) = default;
};

}  // namespace jxextract
