#include "jxextract/locals.hpp"

namespace jxextract {

namespace {

// Walks statements with a scope stack, calling `on_decl(name)` at every
// declaration (returning the new spelling) and `on_ref(name, bound_to)` at
// every bare reference, where bound_to is the renamed declaration or null.
class ScopeWalker {
 public:
  using DeclFn = std::function<std::string(const std::string&)>;
  using RefFn = std::function<void(std::string&, const std::string*)>;

  ScopeWalker(DeclFn on_decl, RefFn on_ref)
      : on_decl_(std::move(on_decl)), on_ref_(std::move(on_ref)) {}

  void push(std::map<std::string, std::string> scope = {}) {
    scopes_.push_back(std::move(scope));
  }
  void pop() { scopes_.pop_back(); }

  void declare(std::string& name) {
    std::string renamed = on_decl_(name);
    scopes_.back()[name] = renamed;
    name = std::move(renamed);
  }

  void stmts(std::vector<Stmt>& list) {
    for (auto& s : list) stmt(s);
  }

  void block(Block& b) {
    push();
    stmts(b.stmts);
    pop();
  }

 private:
  const std::string* lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (auto f = it->find(name); f != it->end()) return &f->second;
    return nullptr;
  }

  void ref(std::string& name) { on_ref_(name, lookup(name)); }

  void var_decl(VarDecl& d) {
    if (d.init) expr(*d.init);
    declare(d.name);
  }

  void assign(Assign& a) {
    expr(a.value);
    if (!a.target.is_field) ref(a.target.name);
  }

  void stmt(Stmt& s) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            var_decl(n);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            expr(n.expr);
          } else if constexpr (std::is_same_v<T, Assign>) {
            assign(n);
          } else if constexpr (std::is_same_v<T, If>) {
            expr(n.cond);
            block(n.then_block);
            if (n.else_block) block(*n.else_block);
          } else if constexpr (std::is_same_v<T, While>) {
            expr(n.cond);
            block(n.body);
          } else if constexpr (std::is_same_v<T, For>) {
            push();
            if (auto* d = std::get_if<VarDecl>(&n.init)) var_decl(*d);
            if (auto* a = std::get_if<Assign>(&n.init)) assign(*a);
            if (n.cond) expr(*n.cond);
            if (n.update) assign(*n.update);
            block(n.body);
            pop();
          } else if constexpr (std::is_same_v<T, Return>) {
            if (n.value) expr(*n.value);
          } else if constexpr (std::is_same_v<T, BlockStmt>) {
            block(n.block);
          }
        },
        s.node);
  }

  void expr(Expr& e) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarRef>) {
            ref(n.name);
          } else if constexpr (std::is_same_v<T, Binary>) {
            expr(*n.lhs);
            expr(*n.rhs);
          } else if constexpr (std::is_same_v<T, Unary>) {
            expr(*n.operand);
          } else if constexpr (std::is_same_v<T, Call>) {
            if (auto* r = std::get_if<Box<Expr>>(&n.receiver)) expr(**r);
            for (auto& a : n.args) expr(a);
          } else if constexpr (std::is_same_v<T, New>) {
            for (auto& a : n.args) expr(a);
          } else if constexpr (std::is_same_v<T, Cast>) {
            expr(*n.operand);
          }
        },
        e.node);
  }

  DeclFn on_decl_;
  RefFn on_ref_;
  std::vector<std::map<std::string, std::string>> scopes_;
};

void rename_refs(std::string& name, const std::string* bound) {
  if (bound) name = *bound;
}

}  // namespace

void rename_locals(MethodDecl& method, const RenameFn& rename) {
  ScopeWalker w(rename, rename_refs);
  w.push();
  for (auto& p : method.params) w.declare(p.name);
  w.block(method.body);
}

void rename_locals(std::vector<Stmt>& stmts,
                   const std::map<std::string, std::string>& outer,
                   const RenameFn& rename) {
  ScopeWalker w(rename, rename_refs);
  w.push(outer);
  w.push();
  w.stmts(stmts);
}

std::set<std::string> identifiers(const MethodDecl& method) {
  std::set<std::string> out;
  MethodDecl copy = method;
  ScopeWalker w(
      [&](const std::string& name) {
        out.insert(name);
        return name;
      },
      [&](std::string& name, const std::string*) { out.insert(name); });
  w.push();
  for (auto& p : copy.params) w.declare(p.name);
  w.block(copy.body);
  return out;
}

std::set<std::string> free_names(const MethodDecl& method) {
  std::set<std::string> out;
  MethodDecl copy = method;
  ScopeWalker w([](const std::string& name) { return name; },
                [&](std::string& name, const std::string* bound) {
                  if (!bound) out.insert(name);
                });
  w.push();
  for (auto& p : copy.params) w.declare(p.name);
  w.block(copy.body);
  return out;
}

}  // namespace jxextract
