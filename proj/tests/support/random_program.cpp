#include "jxextract/printer.hpp"
#include "test_support.hpp"

namespace jxtest {

using namespace jxextract;

namespace {

Expr ex(Expr::Node n) { return Expr{std::move(n), {}}; }
Stmt st(Stmt::Node n) { return Stmt{std::move(n), {}}; }

struct Gen {
  std::mt19937& rng;
  int max_depth;
  int max_stmts;
  int next_name = 0;
  std::vector<std::string> ints;     // int locals in scope
  std::vector<std::string> objects;  // Widget locals in scope
  int loop_depth = 0;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Expr int_expr(int depth) {
    int k = pick(depth > 0 ? 6 : 3);
    if (k == 0 || (k == 1 && ints.empty())) return ex(IntLit{pick(100)});
    if (k == 1) return ex(VarRef{ints[pick(static_cast<int>(ints.size()))]});
    if (k == 2) return ex(FieldRef{"f"});
    if (k == 3) {
      static const BinaryOp ops[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul,
                                     BinaryOp::Div, BinaryOp::Mod};
      return ex(Binary{ops[pick(5)], int_expr(depth - 1), int_expr(depth - 1)});
    }
    if (k == 4) return ex(Unary{UnaryOp::Neg, int_expr(depth - 1)});
    if (!objects.empty() && pick(2))
      return ex(Call{Box<Expr>(ex(VarRef{objects[pick(static_cast<int>(objects.size()))]})),
                     "size", {}});
    return ex(Call{TypeRef::named("Util"), "calc", {int_expr(depth - 1)}});
  }

  Expr cond(int depth) {
    int k = pick(3);
    static const BinaryOp rel[] = {BinaryOp::Lt, BinaryOp::Le, BinaryOp::Gt,
                                   BinaryOp::Ge, BinaryOp::Eq, BinaryOp::Ne};
    Expr c = ex(Binary{rel[pick(6)], int_expr(1), int_expr(1)});
    if (k == 0 && depth > 0)
      return ex(Binary{pick(2) ? BinaryOp::And : BinaryOp::Or, std::move(c), cond(depth - 1)});
    if (k == 1) return ex(Unary{UnaryOp::Not, std::move(c)});
    return c;
  }

  std::string fresh() { return "x" + std::to_string(next_name++); }

  Block block(int depth) {
    auto saved_ints = ints;
    auto saved_objects = objects;
    Block b;
    int n = 1 + pick(max_stmts);
    for (int i = 0; i < n; ++i) b.stmts.push_back(stmt(depth));
    ints = saved_ints;
    objects = saved_objects;
    return b;
  }

  Stmt stmt(int depth) {
    int k = pick(depth > 0 ? 12 : 6);
    switch (k) {
      case 0: {
        std::string n = fresh();
        Stmt s = st(VarDecl{TypeRef::builtin(TypeRef::Kind::Int), n, int_expr(2)});
        ints.push_back(n);
        return s;
      }
      case 1: {
        std::string n = fresh();
        Stmt s = st(VarDecl{TypeRef::named("Widget"), n,
                            ex(New{TypeRef::named("Widget"), {int_expr(1)}})});
        objects.push_back(n);
        return s;
      }
      case 2:
        if (!ints.empty())
          return st(Assign{LValue{false, ints[pick(static_cast<int>(ints.size()))]}, int_expr(2)});
        return st(Assign{LValue{true, "f"}, int_expr(2)});
      case 3:
        if (!objects.empty())
          return st(ExprStmt{ex(Call{
              Box<Expr>(ex(VarRef{objects[pick(static_cast<int>(objects.size()))]})), "draw",
              {int_expr(1)}})});
        return st(ExprStmt{ex(Call{NoReceiver{}, "log", {int_expr(1)}})});
      case 4:
        return st(ExprStmt{ex(Call{NoReceiver{}, "log", {int_expr(1)}})});
      case 5:
        if (loop_depth > 0 && pick(3) == 0) return pick(2) ? st(Break{}) : st(Continue{});
        return st(Assign{LValue{true, "f"}, int_expr(1)});
      case 6:
      case 7: {
        If i{cond(1), block(depth - 1), std::nullopt};
        if (pick(2)) i.else_block = block(depth - 1);
        return st(std::move(i));
      }
      case 8: {
        ++loop_depth;
        While w{cond(1), block(depth - 1)};
        --loop_depth;
        return st(std::move(w));
      }
      case 9: {
        std::string n = fresh();
        For f;
        f.init = VarDecl{TypeRef::builtin(TypeRef::Kind::Int), n, ex(IntLit{0})};
        f.cond = ex(Binary{BinaryOp::Lt, ex(VarRef{n}), ex(IntLit{10})});
        f.update = Assign{LValue{false, n},
                          ex(Binary{BinaryOp::Add, ex(VarRef{n}), ex(IntLit{1})})};
        ints.push_back(n);
        ++loop_depth;
        f.body = block(depth - 1);
        --loop_depth;
        ints.pop_back();
        return st(std::move(f));
      }
      case 10:
        return st(BlockStmt{block(depth - 1)});
      default: {
        Expr e = ex(Cast{TypeRef::builtin(TypeRef::Kind::Int), Box<Expr>(int_expr(1))});
        std::string n = fresh();
        ints.push_back(n);
        return st(VarDecl{TypeRef::builtin(TypeRef::Kind::Int), n, std::move(e)});
      }
    }
  }
};

}  // namespace

MethodDecl random_method(std::mt19937& rng, int max_depth, int max_stmts) {
  Gen g{rng, max_depth, max_stmts};
  g.ints.push_back("p");
  MethodDecl m;
  m.name = "m";
  m.params.push_back(Param{TypeRef::builtin(TypeRef::Kind::Int), "p"});
  m.body = g.block(max_depth);
  return m;
}

SourceUnit unit_with(MethodDecl method) {
  SourceUnit u;
  u.package_name = "gen.pkg";
  u.imports = {"lib.ui.Widget"};
  ClassDecl c;
  c.name = "Gen";
  c.fields.push_back(FieldDecl{TypeRef::builtin(TypeRef::Kind::Int), "f", std::nullopt, {}});
  c.methods.push_back(std::move(method));
  u.classes.push_back(std::move(c));
  return parse_resolved(pretty_print(u));
}

}  // namespace jxtest
