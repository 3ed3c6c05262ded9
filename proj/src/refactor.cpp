#include "jxextract/refactor.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "jxextract/error.hpp"
#include "jxextract/lexer.hpp"
#include "jxextract/locals.hpp"
#include "jxextract/parser.hpp"
#include "jxextract/printer.hpp"
#include "jxextract/resolve.hpp"

namespace jxextract {

namespace {

Expr make_expr(Expr::Node node) { return Expr{std::move(node), {}}; }
Stmt make_stmt(Stmt::Node node) { return Stmt{std::move(node), {}}; }

SourceUnit reparse(const SourceUnit& unit) { return resolve_types(parse(pretty_print(unit))); }

bool is_identifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !is_keyword(s);
}

// The LabeledMethod of a method we own a mutable copy of hands out const
// pointers; the objects themselves are not const.
Block& mutable_block(const LabeledMethod& labeled, int id) {
  return const_cast<Block&>(*labeled.block(id).block);
}

template <class F>
void for_each_call(const Expr& e, F&& f) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Binary>) {
          for_each_call(*n.lhs, f);
          for_each_call(*n.rhs, f);
        } else if constexpr (std::is_same_v<T, Unary>) {
          for_each_call(*n.operand, f);
        } else if constexpr (std::is_same_v<T, Cast>) {
          for_each_call(*n.operand, f);
        } else if constexpr (std::is_same_v<T, New>) {
          for (const auto& a : n.args) for_each_call(a, f);
        } else if constexpr (std::is_same_v<T, Call>) {
          if (const auto* recv = std::get_if<Box<Expr>>(&n.receiver)) for_each_call(**recv, f);
          for (const auto& a : n.args) for_each_call(a, f);
          f(n);
        }
      },
      e.node);
}

// Expressions owned by the statement itself (not by its child blocks).
std::vector<const Expr*> own_exprs(const Stmt& s) {
  std::vector<const Expr*> out;
  auto opt = [&](const std::optional<Expr>& e) {
    if (e) out.push_back(&*e);
  };
  if (const auto* d = s.as<VarDecl>()) opt(d->init);
  if (const auto* x = s.as<ExprStmt>()) out.push_back(&x->expr);
  if (const auto* a = s.as<Assign>()) out.push_back(&a->value);
  if (const auto* i = s.as<If>()) out.push_back(&i->cond);
  if (const auto* w = s.as<While>()) out.push_back(&w->cond);
  if (const auto* f = s.as<For>()) {
    if (const auto* d = std::get_if<VarDecl>(&f->init)) opt(d->init);
    if (const auto* a = std::get_if<Assign>(&f->init)) out.push_back(&a->value);
    opt(f->cond);
    if (f->update) out.push_back(&f->update->value);
  }
  if (const auto* r = s.as<Return>()) opt(r->value);
  return out;
}

bool is_self_call(const Call& c, const std::string& name) {
  return c.method == name && (std::holds_alternative<NoReceiver>(c.receiver) ||
                              std::holds_alternative<ThisReceiver>(c.receiver));
}

int count_calls(const Expr& e, const std::string& name) {
  int n = 0;
  for_each_call(e, [&](const Call& c) { n += is_self_call(c, name); });
  return n;
}

int count_calls(const MethodDecl& m, const std::string& name) {
  LabeledMethod labeled(m);
  int n = 0;
  for (const auto& fs : labeled.statements())
    for (const Expr* e : own_exprs(*fs.stmt)) n += count_calls(*e, name);
  return n;
}

const Call* direct_call(const Expr& e, const std::string& name) {
  const auto* c = e.as<Call>();
  return c && is_self_call(*c, name) ? c : nullptr;
}

// Names declared by parameters and locals.
std::set<std::string> declared_names(const MethodDecl& m) {
  std::set<std::string> out;
  MethodDecl copy = m;
  rename_locals(copy, [&](const std::string& n) {
    out.insert(n);
    return n;
  });
  return out;
}

std::set<std::size_t> promoted_indices(const MethodAnalysis& a, const Selection& sel,
                                       std::size_t count) {
  const auto& block = a.labeled.block(sel.block_id);
  std::set<std::size_t> out;
  for (std::size_t k = 0; k < count; ++k)
    out.insert(block.statements[static_cast<std::size_t>(sel.start - 1) + k]);
  return out;
}

}  // namespace

ExtractPlan plan_extract(const MethodAnalysis& a, const Candidate& cand,
                         const std::string& name, const ExtractOptions& opts) {
  ValidityVerdict verdict = is_valid(cand, a, opts.gen);
  if (!verdict.valid) {
    std::string msg = "candidate " + cand.sel.label_range() + " violates";
    for (const auto& c : verdict.codes()) msg += " " + c;
    throw PreconditionError(msg, verdict.codes());
  }
  const Selection& sel = cand.sel;
  const auto& flat = a.labeled.statements();

  ExtractPlan plan;
  plan.new_method_name = name;

  std::size_t direct = static_cast<std::size_t>(sel.end - sel.start + 1);
  if (opts.promote_leading_declarations > direct)
    throw PreconditionError("cannot promote more statements than selected", {});
  std::set<std::size_t> promoted = promoted_indices(a, sel, opts.promote_leading_declarations);
  std::set<VarId> promoted_vars;
  for (std::size_t idx : promoted) {
    const auto* decl = flat[idx].stmt->as<VarDecl>();
    if (!decl || !decl->init)
      throw PreconditionError("statement " + flat[idx].label.str() +
                                  " is not an initialized declaration",
                              {});
    for (const auto& u : a.facts.stmts[idx].uses)
      if (promoted_vars.count(u))
        throw PreconditionError("promoted declaration " + flat[idx].label.str() +
                                    " depends on another promoted declaration",
                                {});
    VarId v = a.facts.stmts[idx].defs.front();
    promoted_vars.insert(v);
    plan.params.push_back(v);
    plan.promoted_args.push_back(*decl->init);
  }

  std::set<VarId> seen(promoted_vars.begin(), promoted_vars.end());
  std::set<VarId> read;
  for (std::size_t i = sel.first; i < sel.last; ++i) {
    if (promoted.count(i)) continue;
    for (const auto& u : a.facts.stmts[i].uses) {
      if (u.kind == VarKind::Field || declared_inside(a.labeled, u, sel)) continue;
      read.insert(u);
      if (seen.insert(u).second) plan.params.push_back(u);
    }
  }

  std::set<VarId> outs = live_out(a.labeled, a.facts, sel);
  if (!outs.empty()) {
    const VarId& v = *outs.begin();
    plan.return_var = v;
    plan.return_type = a.facts.var_types.at(v);
    plan.return_var_declared_inside = declared_inside(a.labeled, v, sel);
    // The new method must see the incoming value of an outer live-out even
    // when the selection only writes it on some paths.
    if (!plan.return_var_declared_inside && seen.insert(v).second) plan.params.push_back(v);
  }

  for (std::size_t i = sel.first; i < sel.last; ++i) {
    for (const auto& d : a.facts.stmts[i].defs) {
      if (d.kind == VarKind::Field || declared_inside(a.labeled, d, sel)) continue;
      if (seen.insert(d).second) plan.declared_locals.push_back(d);
    }
  }
  return plan;
}

SourceUnit extract(const SourceUnit& unit, const Candidate& cand, const std::string& name,
                   const ExtractOptions& opts) {
  if (!is_identifier(name)) throw NameClashError("'" + name + "' is not a valid method name");
  const ClassDecl* cls0 = unit.find_class(cand.class_name);
  if (!cls0) throw RangeError("no class '" + cand.class_name + "'");
  if (cls0->find_method(name))
    throw NameClashError("class " + cand.class_name + " already has a method '" + name + "'");

  SourceUnit out = unit;
  ClassDecl& cls = *out.find_class(cand.class_name);
  MethodAnalysis a = analyze_method(out, cand.class_name, cand.method_name);
  // Re-derive the selection against our copy so the indices are ours.
  Candidate c = make_candidate(a, cand.sel.block_id, cand.sel.start, cand.sel.end);
  ExtractPlan plan = plan_extract(a, c, name, opts);

  MethodDecl fresh;
  fresh.name = name;
  fresh.return_type = plan.return_type;
  for (const auto& p : plan.params) fresh.params.push_back(Param{a.facts.var_types.at(p), p.name});
  for (const auto& v : plan.declared_locals)
    fresh.body.stmts.push_back(make_stmt(VarDecl{a.facts.var_types.at(v), v.name, std::nullopt}));

  Block& host_block = mutable_block(a.labeled, c.sel.block_id);
  auto first = host_block.stmts.begin() + (c.sel.start - 1);
  auto last = host_block.stmts.begin() + c.sel.end;
  for (auto it = first + static_cast<std::ptrdiff_t>(opts.promote_leading_declarations);
       it != last; ++it)
    fresh.body.stmts.push_back(*it);
  if (plan.return_var)
    fresh.body.stmts.push_back(make_stmt(Return{make_expr(VarRef{plan.return_var->name})}));

  Call call{NoReceiver{}, name, {}};
  for (std::size_t k = 0; k < plan.params.size(); ++k) {
    if (k < plan.promoted_args.size())
      call.args.push_back(plan.promoted_args[k]);
    else
      call.args.push_back(make_expr(VarRef{plan.params[k].name}));
  }
  Expr call_expr = make_expr(std::move(call));
  Stmt site;
  if (!plan.return_var)
    site = make_stmt(ExprStmt{std::move(call_expr)});
  else if (plan.return_var_declared_inside)
    site = make_stmt(VarDecl{*plan.return_type, plan.return_var->name, std::move(call_expr)});
  else
    site = make_stmt(Assign{LValue{false, plan.return_var->name}, std::move(call_expr)});

  auto pos = host_block.stmts.erase(first, last);
  host_block.stmts.insert(pos, std::move(site));

  auto host = std::find_if(cls.methods.begin(), cls.methods.end(),
                           [&](const MethodDecl& m) { return m.name == cand.method_name; });
  cls.methods.insert(host + 1, std::move(fresh));
  return reparse(out);
}

InlineResult inline_method(const SourceUnit& unit, const std::string& class_name,
                           const std::string& callee_name, const std::string& file) {
  const ClassDecl* cls0 = unit.find_class(class_name);
  if (!cls0) throw InlineError("no class '" + class_name + "'");
  const MethodDecl* callee = cls0->find_method(callee_name);
  if (!callee) throw InlineError("no method '" + callee_name + "' in class " + class_name);

  if (count_calls(*callee, callee_name) > 0)
    throw InlineError("'" + callee_name + "' is recursive");
  for (const auto& f : cls0->fields)
    if (f.init && count_calls(*f.init, callee_name) > 0)
      throw InlineError("'" + callee_name + "' is called from a field initializer");
  int total = 0;
  for (const auto& m : cls0->methods) total += count_calls(m, callee_name);
  if (total != 1)
    throw InlineError("'" + callee_name + "' is called " + std::to_string(total) +
                      " times, expected exactly once");

  // Returns: none for void; exactly one trailing `return v;` otherwise.
  LabeledMethod callee_labeled(*callee);
  int returns = 0;
  for (const auto& fs : callee_labeled.statements()) returns += fs.stmt->as<Return>() != nullptr;
  std::string returned;
  std::size_t body_len = callee->body.stmts.size();
  if (!callee->return_type) {
    if (returns > 0) throw InlineError("void callee '" + callee_name + "' contains return");
  } else {
    const Return* tail =
        body_len ? callee->body.stmts.back().as<Return>() : nullptr;
    if (returns != 1 || !tail || !tail->value || !tail->value->as<VarRef>())
      throw InlineError("callee '" + callee_name +
                        "' must end in its only return, of a variable");
    returned = tail->value->as<VarRef>()->name;
    std::optional<TypeRef> var_type;
    for (const auto& p : callee->params)
      if (p.name == returned) var_type = p.type;
    for (std::size_t i = 0; i + 1 < body_len; ++i)
      if (const auto* d = callee->body.stmts[i].as<VarDecl>(); d && d->name == returned)
        var_type = d->type;
    if (!var_type)
      throw InlineError("returned variable '" + returned +
                        "' is not a parameter or top-level local");
    if (!(*var_type == *callee->return_type))
      throw InlineError("returned variable '" + returned + "' has a different type");
    --body_len;
  }

  // Locate the call site.
  SourceUnit out = unit;
  ClassDecl& cls = *out.find_class(class_name);
  MethodDecl* host = nullptr;
  const Stmt* site = nullptr;
  std::optional<LabeledMethod> host_labeled;
  for (auto& m : cls.methods) {
    if (m.name == callee_name || count_calls(m, callee_name) == 0) continue;
    host = &m;
    host_labeled.emplace(m);
    for (const auto& fs : host_labeled->statements()) {
      const Stmt& s = *fs.stmt;
      if (const auto* x = s.as<ExprStmt>(); x && direct_call(x->expr, callee_name)) site = &s;
      if (const auto* d = s.as<VarDecl>(); d && d->init && direct_call(*d->init, callee_name))
        site = &s;
    }
    break;
  }
  if (!site) throw InlineError("call of '" + callee_name + "' is not a supported statement");

  const Call* call;
  std::string result_name;
  if (const auto* d = site->as<VarDecl>()) {
    if (!callee->return_type)
      throw InlineError("void callee '" + callee_name + "' used as a value");
    if (!(d->type == *callee->return_type))
      throw InlineError("call site declares a different type than '" + callee_name + "' returns");
    call = d->init->as<Call>();
    result_name = d->name;
  } else {
    if (callee->return_type)
      throw InlineError("result of '" + callee_name + "' is discarded");
    call = site->as<ExprStmt>()->expr.as<Call>();
  }
  if (call->args.size() != callee->params.size())
    throw InlineError("argument count mismatch calling '" + callee_name + "'");

  std::set<std::string> host_ids = identifiers(*host);
  std::set<std::string> host_decls = declared_names(*host);
  for (const auto& n : free_names(*callee))
    if (host_decls.count(n))
      throw InlineError("field '" + n + "' used by '" + callee_name +
                        "' is shadowed by a local of " + host->name);

  std::set<std::string> taken = host_ids;
  for (const auto& f : cls.fields) taken.insert(f.name);
  if (!result_name.empty()) taken.insert(result_name);
  std::set<std::string> avoid = taken;
  for (const auto& n : identifiers(*callee)) avoid.insert(n);

  std::map<std::string, std::string> new_name;
  for (const auto& n : declared_names(*callee)) {
    if (n == returned) {
      new_name[n] = result_name;
    } else if (taken.count(n)) {
      std::string cand;
      for (int k = 1;; ++k) {
        cand = n + "_" + std::to_string(k);
        if (!avoid.count(cand)) break;
      }
      avoid.insert(cand);
      new_name[n] = cand;
    } else {
      new_name[n] = n;
    }
  }
  MethodDecl body = *callee;
  rename_locals(body, [&](const std::string& n) { return new_name.at(n); });

  std::vector<Stmt> spliced;
  for (std::size_t k = 0; k < body.params.size(); ++k)
    spliced.push_back(make_stmt(VarDecl{body.params[k].type, body.params[k].name, call->args[k]}));
  for (std::size_t i = 0; i < body_len; ++i) spliced.push_back(body.body.stmts[i]);
  if (spliced.empty()) throw InlineError("callee '" + callee_name + "' has an empty body");

  StmtLabel label = host_labeled->label(*site);
  Block& block = mutable_block(*host_labeled, label.block);
  auto pos = block.stmts.erase(block.stmts.begin() + (label.index - 1));
  std::size_t count = spliced.size();
  block.stmts.insert(pos, std::make_move_iterator(spliced.begin()),
                     std::make_move_iterator(spliced.end()));

  OracleEntry oracle;
  oracle.file = file;
  oracle.class_name = class_name;
  oracle.method_name = host->name;
  oracle.block = label.block;
  oracle.start = label.index;
  oracle.end = label.index + static_cast<int>(count) - 1;
  oracle.inlined_from = callee_name;

  host_labeled.reset();
  cls.methods.erase(std::find_if(cls.methods.begin(), cls.methods.end(),
                                 [&](const MethodDecl& m) { return m.name == callee_name; }));
  return InlineResult{reparse(out), std::move(oracle)};
}

namespace {

// Portable across standard libraries, unlike the std distributions.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

std::size_t callee_size(const MethodDecl& m) {
  LabeledMethod labeled(m);
  std::size_t n = labeled.size();
  if (m.return_type) --n;  // the trailing return is folded away
  return n;
}

bool oracle_valid(const InlineResult& r, const GenerationConfig& cfg) {
  MethodAnalysis a = analyze_method(r.unit, r.oracle.class_name, r.oracle.method_name);
  Candidate c = make_candidate(a, r.oracle.block, r.oracle.start, r.oracle.end);
  return is_valid(c, a, cfg).valid;
}

}  // namespace

MutationResult mutate(const SourceUnit& unit, std::uint64_t seed, const GenerationConfig& cfg,
                      double probability, const std::string& file) {
  std::vector<std::pair<std::string, std::string>> eligible;
  for (const auto& cls : unit.classes) {
    for (const auto& m : cls.methods) {
      if (callee_size(m) < static_cast<std::size_t>(cfg.min_extracted_statements)) continue;
      try {
        InlineResult dry = inline_method(unit, cls.name, m.name, file);
        if (oracle_valid(dry, cfg)) eligible.emplace_back(cls.name, m.name);
      } catch (const InlineError&) {
      }
    }
  }

  std::mt19937_64 rng(seed);
  shuffle(eligible, rng);

  MutationResult result{unit, {}};
  std::set<std::pair<std::string, std::string>> touched;
  for (const auto& [cls, callee] : eligible) {
    if (uniform01(rng) >= probability) continue;
    if (touched.count({cls, callee})) continue;
    InlineResult r;
    try {
      r = inline_method(result.unit, cls, callee, file);
    } catch (const InlineError&) {
      continue;
    }
    if (touched.count({cls, r.oracle.method_name}) || !oracle_valid(r, cfg)) continue;
    touched.insert({cls, callee});
    touched.insert({cls, r.oracle.method_name});
    result.unit = std::move(r.unit);
    result.oracles.push_back(std::move(r.oracle));
  }
  return result;
}

}  // namespace jxextract
