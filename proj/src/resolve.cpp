#include "jxextract/resolve.hpp"

#include <map>
#include <set>

#include "jxextract/error.hpp"

namespace jxextract {

namespace {

class Resolver {
 public:
  explicit Resolver(const SourceUnit& unit) : package_(unit.package_name) {
    std::map<std::string, std::vector<std::string>> by_last;
    for (const auto& imp : unit.imports) {
      auto dot = imp.rfind('.');
      std::string last = dot == std::string::npos ? imp : imp.substr(dot + 1);
      by_last[last].push_back(imp);
    }
    for (auto& [last, list] : by_last) imports_[last] = list;
  }

  void run(SourceUnit& unit) {
    for (auto& c : unit.classes) {
      fields_.clear();
      for (const auto& f : c.fields) fields_.insert(f.name);
      for (auto& f : c.fields) {
        type(f.type);
        scopes_.assign(1, {});
        if (f.init) expr(*f.init);
      }
      for (auto& m : c.methods) method(m);
    }
  }

 private:
  void type(TypeRef& t) {
    if (t.is_builtin()) return;
    t.resolved = qualify(t.name);
  }

  std::string qualify(const std::string& name) const {
    if (name.find('.') != std::string::npos) return name;
    if (auto it = imports_.find(name); it != imports_.end()) {
      if (it->second.size() > 1)
        throw ResolveError("ambiguous type '" + name + "': imported as both '" +
                           it->second[0] + "' and '" + it->second[1] + "'");
      return it->second.front();
    }
    // Rules 2 and 3 coincide: both place the name in the unit's package.
    return package_ + "." + name;
  }

  bool bound(const std::string& name) const {
    for (const auto& scope : scopes_)
      if (scope.count(name)) return true;
    return fields_.count(name) > 0;
  }

  void method(MethodDecl& m) {
    if (m.return_type) type(*m.return_type);
    scopes_.assign(1, {});
    for (auto& p : m.params) {
      type(p.type);
      scopes_.back().insert(p.name);
    }
    block(m.body);
  }

  void block(Block& b) {
    scopes_.emplace_back();
    for (auto& s : b.stmts) stmt(s);
    scopes_.pop_back();
  }

  void var_decl(VarDecl& d) {
    type(d.type);
    if (d.init) expr(*d.init);
    scopes_.back().insert(d.name);
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
            expr(n.value);
          } else if constexpr (std::is_same_v<T, If>) {
            expr(n.cond);
            block(n.then_block);
            if (n.else_block) block(*n.else_block);
          } else if constexpr (std::is_same_v<T, While>) {
            expr(n.cond);
            block(n.body);
          } else if constexpr (std::is_same_v<T, For>) {
            scopes_.emplace_back();
            if (auto* d = std::get_if<VarDecl>(&n.init)) var_decl(*d);
            if (auto* a = std::get_if<Assign>(&n.init)) expr(a->value);
            if (n.cond) expr(*n.cond);
            if (n.update) expr(n.update->value);
            block(n.body);
            scopes_.pop_back();
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
          if constexpr (std::is_same_v<T, Binary>) {
            expr(*n.lhs);
            expr(*n.rhs);
          } else if constexpr (std::is_same_v<T, Unary>) {
            expr(*n.operand);
          } else if constexpr (std::is_same_v<T, Call>) {
            call(n);
          } else if constexpr (std::is_same_v<T, New>) {
            type(n.type);
            for (auto& a : n.args) expr(a);
          } else if constexpr (std::is_same_v<T, Cast>) {
            type(n.type);
            expr(*n.operand);
          }
        },
        e.node);
  }

  void call(Call& c) {
    if (auto* recv = std::get_if<Box<Expr>>(&c.receiver)) {
      const auto* var = (*recv)->as<VarRef>();
      if (var && !bound(var->name)) {
        TypeRef t = TypeRef::named(var->name);
        type(t);
        c.receiver = std::move(t);
      } else {
        expr(**recv);
      }
    } else if (auto* t = std::get_if<TypeRef>(&c.receiver)) {
      type(*t);
    }
    for (auto& a : c.args) expr(a);
  }

  std::string package_;
  std::map<std::string, std::vector<std::string>> imports_;
  std::set<std::string> fields_;
  std::vector<std::set<std::string>> scopes_;
};

}  // namespace

SourceUnit resolve_types(SourceUnit unit) {
  Resolver(unit).run(unit);
  return unit;
}

std::string package_of(const std::string& qualified_type) {
  auto dot = qualified_type.rfind('.');
  return dot == std::string::npos ? std::string{} : qualified_type.substr(0, dot);
}

std::vector<std::string> package_with_parents(const std::string& package) {
  std::vector<std::string> out;
  std::string p = package;
  while (!p.empty()) {
    out.push_back(p);
    auto dot = p.rfind('.');
    p = dot == std::string::npos ? std::string{} : p.substr(0, dot);
  }
  return out;
}

}  // namespace jxextract
