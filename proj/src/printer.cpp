#include "jxextract/printer.hpp"

namespace jxextract {

namespace {

constexpr int kUnaryLevel = 7;
constexpr int kPostfixLevel = 8;

int level(const Expr& e) {
  if (const auto* b = e.as<Binary>()) return precedence(b->op);
  if (e.as<Unary>() || e.as<Cast>()) return kUnaryLevel;
  return kPostfixLevel;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string expr_at(const Expr& e, int min_level);

std::string args(const std::vector<Expr>& list) {
  std::string out = "(";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ", ";
    out += expr_at(list[i], 1);
  }
  return out + ")";
}

std::string expr_node(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return std::to_string(n.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, DoubleLit>) {
          return n.text;
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return quote(n.value);
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, FieldRef>) {
          return "this." + n.name;
        } else if constexpr (std::is_same_v<T, Binary>) {
          int p = precedence(n.op);
          return expr_at(*n.lhs, p) + " " + spelling(n.op) + " " +
                 expr_at(*n.rhs, p + 1);
        } else if constexpr (std::is_same_v<T, Unary>) {
          return spelling(n.op) + expr_at(*n.operand, kUnaryLevel);
        } else if constexpr (std::is_same_v<T, Call>) {
          std::string recv;
          if (std::holds_alternative<ThisReceiver>(n.receiver)) {
            recv = "this.";
          } else if (const auto* t = std::get_if<TypeRef>(&n.receiver)) {
            recv = t->name + ".";
          } else if (const auto* r = std::get_if<Box<Expr>>(&n.receiver)) {
            recv = expr_at(**r, kPostfixLevel) + ".";
          }
          return recv + n.method + args(n.args);
        } else if constexpr (std::is_same_v<T, New>) {
          return "new " + n.type.name + args(n.args);
        } else if constexpr (std::is_same_v<T, Cast>) {
          // `(T) -x` would re-parse as a subtraction for named types
          bool wrap = !n.type.is_builtin() && n.operand->template as<Unary>() &&
                      n.operand->template as<Unary>()->op == UnaryOp::Neg;
          std::string operand = wrap ? "(" + expr_at(*n.operand, 1) + ")"
                                     : expr_at(*n.operand, kUnaryLevel);
          return "(" + n.type.name + ") " + operand;
        }
      },
      e.node);
}

std::string expr_at(const Expr& e, int min_level) {
  std::string s = expr_node(e);
  return level(e) < min_level ? "(" + s + ")" : s;
}

std::string var_decl(const VarDecl& d) {
  std::string s = d.type.name + " " + d.name;
  if (d.init) s += " = " + print_expr(*d.init);
  return s;
}

std::string assign(const Assign& a) {
  return (a.target.is_field ? "this." : "") + a.target.name + " = " +
         print_expr(a.value);
}

class Printer {
 public:
  Printer(const StmtAnnotator* annotate, std::size_t gutter)
      : annotate_(annotate && *annotate ? annotate : nullptr), gutter_(gutter) {}

  std::string take() { return std::move(out_); }

  void unit(const SourceUnit& u) {
    line(0, "package " + u.package_name + ";");
    for (const auto& imp : u.imports) line(0, "import " + imp + ";");
    for (std::size_t i = 0; i < u.classes.size(); ++i) {
      if (i) out_ += "\n";
      klass(u.classes[i]);
    }
  }

  void klass(const ClassDecl& c) {
    line(0, "class " + c.name + " {");
    bool first = true;
    for (const auto& f : c.fields) {
      std::string s = f.type.name + " " + f.name;
      if (f.init) s += " = " + print_expr(*f.init);
      line(1, s + ";");
      first = false;
    }
    for (const auto& m : c.methods) {
      if (!first) out_ += "\n";
      method(m, 1);
      first = false;
    }
    line(0, "}");
  }

  void method(const MethodDecl& m, int indent) {
    std::string head = (m.return_type ? m.return_type->name : "void") + " " +
                       m.name + "(";
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (i) head += ", ";
      head += m.params[i].type.name + " " + m.params[i].name;
    }
    line(indent, head + ") {");
    body(m.body, indent + 1);
    line(indent, "}");
  }

 private:
  void line(int indent, const std::string& text, const Stmt* stmt = nullptr) {
    if (annotate_) {
      std::string g = stmt ? (*annotate_)(*stmt) : std::string{};
      if (g.size() < gutter_) g.append(gutter_ - g.size(), ' ');
      out_ += g;
    }
    out_.append(static_cast<std::size_t>(indent) * 4, ' ');
    out_ += text;
    out_ += '\n';
  }

  void body(const Block& b, int indent) {
    for (const auto& s : b.stmts) stmt(s, indent);
  }

  void stmt(const Stmt& s, int indent) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            line(indent, var_decl(n) + ";", &s);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            line(indent, print_expr(n.expr) + ";", &s);
          } else if constexpr (std::is_same_v<T, Assign>) {
            line(indent, assign(n) + ";", &s);
          } else if constexpr (std::is_same_v<T, If>) {
            line(indent, "if (" + print_expr(n.cond) + ") {", &s);
            body(n.then_block, indent + 1);
            if (n.else_block) {
              line(indent, "} else {");
              body(*n.else_block, indent + 1);
            }
            line(indent, "}");
          } else if constexpr (std::is_same_v<T, While>) {
            line(indent, "while (" + print_expr(n.cond) + ") {", &s);
            body(n.body, indent + 1);
            line(indent, "}");
          } else if constexpr (std::is_same_v<T, For>) {
            std::string head = "for (";
            if (const auto* d = std::get_if<VarDecl>(&n.init)) head += var_decl(*d);
            if (const auto* a = std::get_if<Assign>(&n.init)) head += assign(*a);
            head += ";";
            if (n.cond) head += " " + print_expr(*n.cond);
            head += ";";
            if (n.update) head += " " + assign(*n.update);
            line(indent, head + ") {", &s);
            body(n.body, indent + 1);
            line(indent, "}");
          } else if constexpr (std::is_same_v<T, Return>) {
            line(indent, n.value ? "return " + print_expr(*n.value) + ";" : "return;",
                 &s);
          } else if constexpr (std::is_same_v<T, Break>) {
            line(indent, "break;", &s);
          } else if constexpr (std::is_same_v<T, Continue>) {
            line(indent, "continue;", &s);
          } else if constexpr (std::is_same_v<T, BlockStmt>) {
            line(indent, "{", &s);
            body(n.block, indent + 1);
            line(indent, "}");
          }
        },
        s.node);
  }

  const StmtAnnotator* annotate_;
  std::size_t gutter_;
  std::string out_;
};

}  // namespace

std::string print_expr(const Expr& e) { return expr_at(e, 1); }

std::string print_type(const TypeRef& t) { return t.name; }

std::string pretty_print(const SourceUnit& unit) {
  Printer p(nullptr, 0);
  p.unit(unit);
  return p.take();
}

std::string print_method(const MethodDecl& method, const StmtAnnotator& annotate,
                         std::size_t gutter_width) {
  Printer p(&annotate, gutter_width);
  p.method(method, 0);
  return p.take();
}

}  // namespace jxextract
