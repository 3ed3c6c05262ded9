#include "jxextract/deps.hpp"

#include <algorithm>

#include "jxextract/resolve.hpp"

namespace jxextract {

std::string VarId::display() const {
  return kind == VarKind::Field ? "this." + name : name;
}

void DepSets::merge(const DepSets& other) {
  vars.insert(other.vars.begin(), other.vars.end());
  types.insert(other.types.begin(), other.types.end());
  packs.insert(other.packs.begin(), other.packs.end());
}

namespace {

class Binder {
 public:
  Binder(const LabeledMethod& labeled, const ClassDecl* cls) : labeled_(labeled) {
    out_.stmts.resize(labeled.size());
    if (cls) {
      for (const auto& f : cls->fields) out_.var_types[VarId::field(f.name)] = f.type;
    }
  }

  DefUse run() {
    const MethodDecl& m = labeled_.method();
    scopes_.emplace_back();
    for (const auto& p : m.params) {
      VarId v = VarId::parameter(p.name);
      scopes_.back()[p.name] = v;
      out_.var_types[v] = p.type;
    }
    block(m.body);
    return std::move(out_);
  }

 private:
  VarId lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (auto f = it->find(name); f != it->end()) return f->second;
    return VarId::field(name);
  }

  void type(const TypeRef& t) {
    if (t.is_builtin()) return;
    current_->types.insert(t.resolved.empty() ? t.name : t.resolved);
  }

  void declare(const VarDecl& d) {
    type(d.type);
    if (d.init) expr(*d.init);
    VarId v = VarId::local(d.name, label_);
    current_->defs.push_back(v);
    out_.var_types[v] = d.type;
    scopes_.back()[d.name] = v;
  }

  void assign(const Assign& a) {
    expr(a.value);
    current_->defs.push_back(a.target.is_field ? VarId::field(a.target.name)
                                               : lookup(a.target.name));
  }

  void block(const Block& b) {
    scopes_.emplace_back();
    for (const auto& s : b.stmts) stmt(s);
    scopes_.pop_back();
  }

  void stmt(const Stmt& s) {
    std::size_t me = labeled_.index_of(s);
    current_ = &out_.stmts[me];
    label_ = labeled_.at(me).label;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            declare(n);
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
            scopes_.emplace_back();
            if (const auto* d = std::get_if<VarDecl>(&n.init)) declare(*d);
            if (const auto* a = std::get_if<Assign>(&n.init)) assign(*a);
            if (n.cond) expr(*n.cond);
            if (n.update) assign(*n.update);
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

  void expr(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarRef>) {
            current_->uses.push_back(lookup(n.name));
          } else if constexpr (std::is_same_v<T, FieldRef>) {
            current_->uses.push_back(VarId::field(n.name));
          } else if constexpr (std::is_same_v<T, Binary>) {
            expr(*n.lhs);
            expr(*n.rhs);
          } else if constexpr (std::is_same_v<T, Unary>) {
            expr(*n.operand);
          } else if constexpr (std::is_same_v<T, Call>) {
            if (const auto* r = std::get_if<Box<Expr>>(&n.receiver)) expr(**r);
            if (const auto* t = std::get_if<TypeRef>(&n.receiver)) type(*t);
            for (const auto& a : n.args) expr(a);
          } else if constexpr (std::is_same_v<T, New>) {
            type(n.type);
            for (const auto& a : n.args) expr(a);
          } else if constexpr (std::is_same_v<T, Cast>) {
            type(n.type);
            expr(*n.operand);
          }
        },
        e.node);
  }

  const LabeledMethod& labeled_;
  DefUse out_;
  std::vector<std::map<std::string, VarId>> scopes_;
  StmtFacts* current_ = nullptr;
  StmtLabel label_;
};

void add_facts(DepSets& out, const StmtFacts& f) {
  out.vars.insert(f.defs.begin(), f.defs.end());
  out.vars.insert(f.uses.begin(), f.uses.end());
  for (const auto& t : f.types) {
    out.types.insert(t);
    for (auto& p : package_with_parents(package_of(t))) out.packs.insert(std::move(p));
  }
}

bool is_loop(const Stmt& s) { return s.as<While>() || s.as<For>(); }

}  // namespace

DefUse def_use(const LabeledMethod& labeled, const ClassDecl* cls) {
  return Binder(labeled, cls).run();
}

DepSets extract_deps(const DefUse& facts, std::span<const std::size_t> stmts) {
  DepSets out;
  for (std::size_t i : stmts) add_facts(out, facts.stmts.at(i));
  return out;
}

DepSets selection_deps(const DefUse& facts, const Selection& sel) {
  DepSets out;
  for (std::size_t i = sel.first; i < sel.last; ++i) add_facts(out, facts.stmts[i]);
  return out;
}

DepSets remainder_deps(const DefUse& facts, const Selection& sel) {
  DepSets out;
  for (std::size_t i = 0; i < facts.stmts.size(); ++i)
    if (!sel.contains(i)) add_facts(out, facts.stmts[i]);
  return out;
}

bool declared_inside(const LabeledMethod& labeled, const VarId& var,
                     const Selection& sel) {
  return var.kind == VarKind::Local && var.decl &&
         sel.contains(labeled.flat_index(*var.decl));
}

std::set<VarId> live_out(const LabeledMethod& labeled, const DefUse& facts,
                         const Selection& sel) {
  std::set<VarId> defined;
  for (std::size_t i = sel.first; i < sel.last; ++i)
    for (const auto& v : facts.stmts[i].defs)
      if (v.kind != VarKind::Field) defined.insert(v);
  if (defined.empty()) return {};

  // Start of the region that may observe the selection's writes.
  std::size_t observe_from = sel.last;
  std::optional<std::size_t> owner = labeled.block(sel.block_id).parent;
  while (owner) {
    if (is_loop(*labeled.at(*owner).stmt)) observe_from = *owner;
    owner = labeled.at(*owner).parent;
  }

  std::set<VarId> out;
  for (std::size_t i = observe_from; i < facts.stmts.size(); ++i) {
    if (sel.contains(i)) continue;
    for (const auto& v : facts.stmts[i].uses)
      if (defined.count(v)) out.insert(v);
  }
  return out;
}

std::vector<VarId> inputs(const LabeledMethod& labeled, const DefUse& facts,
                          const Selection& sel) {
  std::vector<VarId> out;
  std::set<VarId> seen;
  for (std::size_t i = sel.first; i < sel.last; ++i) {
    for (const auto& v : facts.stmts[i].uses) {
      if (v.kind == VarKind::Field || declared_inside(labeled, v, sel)) continue;
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  return out;
}

}  // namespace jxextract
