#include "jxextract/parser.hpp"

#include <charconv>
#include <set>

#include "jxextract/error.hpp"
#include "jxextract/lexer.hpp"

namespace jxextract {

namespace {

bool is_builtin_type_keyword(const Token& t) {
  return t.kind == TokenKind::Keyword &&
         (t.text == "int" || t.text == "boolean" || t.text == "double" ||
          t.text == "String");
}

TypeRef::Kind builtin_kind(const std::string& kw) {
  if (kw == "int") return TypeRef::Kind::Int;
  if (kw == "boolean") return TypeRef::Kind::Boolean;
  if (kw == "double") return TypeRef::Kind::Double;
  return TypeRef::Kind::String;
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  if (t.kind == TokenKind::String) return "string literal";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SourceUnit unit() {
    SourceUnit u;
    expect_keyword("package");
    u.package_name = dotted();
    expect_punct(";");
    std::set<std::string> seen_imports;
    while (peek().is_keyword("import")) {
      const Token& kw = take();
      std::string name = dotted();
      if (!seen_imports.insert(name).second)
        fail_at(kw, "duplicate import '" + name + "'");
      u.imports.push_back(std::move(name));
      expect_punct(";");
    }
    std::set<std::string> class_names;
    do {
      const Token& at = peek();
      u.classes.push_back(class_decl());
      if (!class_names.insert(u.classes.back().name).second)
        fail_at(at, "duplicate class '" + u.classes.back().name + "'");
    } while (!at_end());
    return u;
  }

 private:
  // -- token plumbing -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    last_end_ = t.span.end;
    return t;
  }

  [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
    throw ParseError(message, t.span.begin.line, t.span.begin.column);
  }
  [[noreturn]] void expected(const std::string& what) const {
    fail_at(peek(), "expected " + what + " but found " + describe(peek()));
  }

  void expect_punct(std::string_view p) {
    if (!peek().is_punct(p)) expected("'" + std::string(p) + "'");
    take();
  }
  void expect_keyword(std::string_view k) {
    if (!peek().is_keyword(k)) expected("'" + std::string(k) + "'");
    take();
  }
  void expect_op(std::string_view o) {
    if (!peek().is_op(o)) expected("'" + std::string(o) + "'");
    take();
  }
  std::string ident() {
    if (peek().kind != TokenKind::Ident) expected("identifier");
    return take().text;
  }
  std::string dotted() {
    std::string name = ident();
    while (peek().is_punct(".") && peek(1).kind == TokenKind::Ident) {
      take();
      name += "." + take().text;
    }
    return name;
  }

  SourceSpan span_from(SourcePos begin) const { return {begin, last_end_}; }

  // Length of the `IDENT (. IDENT)*` run starting `ahead` tokens from here,
  // in tokens; 0 when there is no identifier.
  std::size_t dotted_length(std::size_t ahead) const {
    if (peek(ahead).kind != TokenKind::Ident) return 0;
    std::size_t n = 1;
    while (peek(ahead + n).is_punct(".") &&
           peek(ahead + n + 1).kind == TokenKind::Ident)
      n += 2;
    return n;
  }

  // -- declarations ---------------------------------------------------------

  TypeRef type() {
    if (is_builtin_type_keyword(peek())) return TypeRef::builtin(builtin_kind(take().text));
    if (peek().kind != TokenKind::Ident) expected("type");
    return TypeRef::named(dotted());
  }

  ClassDecl class_decl() {
    SourcePos begin = peek().span.begin;
    expect_keyword("class");
    ClassDecl c;
    c.name = ident();
    expect_punct("{");
    std::set<std::string> members;
    while (!peek().is_punct("}")) {
      if (at_end()) expected("'}'");
      const Token& at = peek();
      SourcePos mbegin = at.span.begin;
      std::optional<TypeRef> t;
      if (peek().is_keyword("void")) {
        take();
      } else {
        t = type();
      }
      std::string name = ident();
      if (!members.insert(name).second)
        fail_at(at, "duplicate member '" + name + "' in class " + c.name);
      if (!t || peek().is_punct("(")) {
        c.methods.push_back(method_rest(std::move(t), std::move(name), mbegin));
      } else {
        FieldDecl f;
        f.type = std::move(*t);
        f.name = std::move(name);
        if (peek().is_op("=")) {
          take();
          f.init = expr();
        }
        expect_punct(";");
        f.span = span_from(mbegin);
        c.fields.push_back(std::move(f));
      }
    }
    take();
    c.span = span_from(begin);
    return c;
  }

  MethodDecl method_rest(std::optional<TypeRef> ret, std::string name,
                         SourcePos begin) {
    MethodDecl m;
    m.return_type = std::move(ret);
    m.name = std::move(name);
    expect_punct("(");
    std::set<std::string> names;
    if (!peek().is_punct(")")) {
      // `f( {`: the list never started, so the paren is what is missing
      if (!is_builtin_type_keyword(peek()) && peek().kind != TokenKind::Ident)
        expected("')'");
      for (;;) {
        Param p;
        p.type = type();
        const Token& at = peek();
        p.name = ident();
        if (!names.insert(p.name).second)
          fail_at(at, "duplicate parameter '" + p.name + "'");
        m.params.push_back(std::move(p));
        if (!peek().is_punct(",")) break;
        take();
      }
    }
    expect_punct(")");
    m.body = block();
    m.span = span_from(begin);
    return m;
  }

  // -- statements -----------------------------------------------------------

  Block block() {
    SourcePos begin = peek().span.begin;
    expect_punct("{");
    Block b;
    while (!peek().is_punct("}")) {
      if (at_end()) expected("'}'");
      b.stmts.push_back(stmt());
    }
    take();
    b.span = span_from(begin);
    return b;
  }

  // Does the upcoming text start a local variable declaration?
  bool at_var_decl() const {
    if (is_builtin_type_keyword(peek())) return peek(1).kind == TokenKind::Ident;
    std::size_t n = dotted_length(0);
    return n > 0 && peek(n).kind == TokenKind::Ident;
  }

  // `IDENT =` or `this . IDENT =`
  bool at_assign() const {
    if (peek().kind == TokenKind::Ident) return peek(1).is_op("=");
    return peek().is_keyword("this") && peek(1).is_punct(".") &&
           peek(2).kind == TokenKind::Ident && peek(3).is_op("=");
  }

  VarDecl var_decl_body() {
    VarDecl d;
    d.type = type();
    d.name = ident();
    if (peek().is_op("=")) {
      take();
      d.init = expr();
    }
    return d;
  }

  Assign assign_body() {
    Assign a;
    if (peek().is_keyword("this")) {
      take();
      expect_punct(".");
      a.target.is_field = true;
    }
    a.target.name = ident();
    expect_op("=");
    a.value = expr();
    return a;
  }

  Stmt stmt() {
    SourcePos begin = peek().span.begin;
    Stmt s;
    const Token& t = peek();
    if (t.is_punct("{")) {
      s.node = BlockStmt{block()};
    } else if (t.is_keyword("if")) {
      take();
      expect_punct("(");
      Expr cond = expr();
      expect_punct(")");
      Block then_block = block();
      std::optional<Block> else_block;
      if (peek().is_keyword("else")) {
        take();
        else_block = block();
      }
      s.node = If{std::move(cond), std::move(then_block), std::move(else_block)};
    } else if (t.is_keyword("while")) {
      take();
      expect_punct("(");
      Expr cond = expr();
      expect_punct(")");
      s.node = While{std::move(cond), block()};
    } else if (t.is_keyword("for")) {
      s.node = for_rest();
    } else if (t.is_keyword("return")) {
      take();
      Return r;
      if (!peek().is_punct(";")) r.value = expr();
      expect_punct(";");
      s.node = std::move(r);
    } else if (t.is_keyword("break")) {
      take();
      expect_punct(";");
      s.node = Break{};
    } else if (t.is_keyword("continue")) {
      take();
      expect_punct(";");
      s.node = Continue{};
    } else if (at_var_decl()) {
      s.node = var_decl_body();
      expect_punct(";");
    } else if (at_assign()) {
      s.node = assign_body();
      expect_punct(";");
    } else {
      s.node = ExprStmt{expr()};
      expect_punct(";");
    }
    s.span = span_from(begin);
    return s;
  }

  For for_rest() {
    take();  // for
    expect_punct("(");
    For f;
    if (peek().is_punct(";")) {
      take();
    } else if (at_var_decl()) {
      f.init = var_decl_body();
      expect_punct(";");
    } else if (at_assign()) {
      f.init = assign_body();
      expect_punct(";");
    } else {
      expected("declaration, assignment or ';' in for header");
    }
    if (!peek().is_punct(";")) f.cond = expr();
    expect_punct(";");
    if (!peek().is_punct(")")) {
      if (!at_assign()) expected("assignment in for update");
      f.update = assign_body();
    }
    expect_punct(")");
    f.body = block();
    return f;
  }

  // -- expressions ----------------------------------------------------------

  static std::optional<BinaryOp> binary_op(const Token& t) {
    if (t.kind != TokenKind::Op) return std::nullopt;
    static const std::pair<const char*, BinaryOp> kOps[] = {
        {"||", BinaryOp::Or}, {"&&", BinaryOp::And}, {"==", BinaryOp::Eq},
        {"!=", BinaryOp::Ne}, {"<", BinaryOp::Lt},   {"<=", BinaryOp::Le},
        {">", BinaryOp::Gt},  {">=", BinaryOp::Ge},  {"+", BinaryOp::Add},
        {"-", BinaryOp::Sub}, {"*", BinaryOp::Mul},  {"/", BinaryOp::Div},
        {"%", BinaryOp::Mod},
    };
    for (const auto& [text, op] : kOps)
      if (t.text == text) return op;
    return std::nullopt;
  }

  Expr expr() { return binary(1); }

  // Precedence climbing; every binary operator is left-associative.
  Expr binary(int min_prec) {
    SourcePos begin = peek().span.begin;
    Expr lhs = unary();
    for (;;) {
      auto op = binary_op(peek());
      if (!op || precedence(*op) < min_prec) break;
      take();
      Expr rhs = binary(precedence(*op) + 1);
      Expr e;
      e.node = Binary{*op, std::move(lhs), std::move(rhs)};
      e.span = span_from(begin);
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr unary() {
    SourcePos begin = peek().span.begin;
    if (peek().is_op("!") || peek().is_op("-")) {
      UnaryOp op = take().text == "!" ? UnaryOp::Not : UnaryOp::Neg;
      Expr operand = unary();
      Expr e;
      e.node = Unary{op, std::move(operand)};
      e.span = span_from(begin);
      return e;
    }
    return postfix();
  }

  // Can this token begin the operand of a cast to a named type? Excludes
  // `+`/`-` so `(a) - b` stays a subtraction.
  static bool starts_cast_operand(const Token& t) {
    switch (t.kind) {
      case TokenKind::Ident:
      case TokenKind::Int:
      case TokenKind::Double:
      case TokenKind::String:
        return true;
      case TokenKind::Keyword:
        return t.text == "new" || t.text == "this" || t.text == "true" ||
               t.text == "false" || t.text == "String";
      case TokenKind::Punct:
        return t.text == "(";
      case TokenKind::Op:
        return t.text == "!";
      case TokenKind::End:
        return false;
    }
    return false;
  }

  bool at_cast() const {
    if (!peek().is_punct("(")) return false;
    if (is_builtin_type_keyword(peek(1)) && peek(2).is_punct(")")) return true;
    std::size_t n = dotted_length(1);
    return n > 0 && peek(1 + n).is_punct(")") && starts_cast_operand(peek(2 + n));
  }

  std::vector<Expr> args() {
    expect_punct("(");
    std::vector<Expr> out;
    if (!peek().is_punct(")")) {
      for (;;) {
        out.push_back(expr());
        if (!peek().is_punct(",")) break;
        take();
      }
    }
    expect_punct(")");
    return out;
  }

  Expr postfix() {
    SourcePos begin = peek().span.begin;
    Expr e = primary();
    while (peek().is_punct(".")) {
      take();
      std::string name = ident();
      if (!peek().is_punct("(")) expected("'(' after method name");
      Call c;
      c.receiver = Box<Expr>(std::move(e));
      c.method = std::move(name);
      c.args = args();
      e = Expr{};
      e.node = std::move(c);
      e.span = span_from(begin);
    }
    return e;
  }

  Expr primary() {
    SourcePos begin = peek().span.begin;
    Expr e;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Int: {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{}) fail_at(t, "integer literal out of range");
        take();
        e.node = IntLit{v};
        break;
      }
      case TokenKind::Double:
        e.node = DoubleLit{take().text};
        break;
      case TokenKind::String:
        e.node = StringLit{take().text};
        break;
      case TokenKind::Ident:
        e.node = name_primary();
        break;
      case TokenKind::Keyword:
        if (t.text == "true" || t.text == "false") {
          e.node = BoolLit{take().text == "true"};
        } else if (t.text == "this") {
          take();
          expect_punct(".");
          std::string name = ident();
          if (peek().is_punct("(")) {
            e.node = Call{ThisReceiver{}, std::move(name), args()};
          } else {
            e.node = FieldRef{std::move(name)};
          }
        } else if (t.text == "new") {
          take();
          TypeRef type = this->type();
          e.node = New{std::move(type), args()};
        } else if (is_builtin_type_keyword(t) && peek(1).is_punct(".")) {
          TypeRef type = TypeRef::builtin(builtin_kind(take().text));
          take();
          std::string name = ident();
          if (!peek().is_punct("(")) expected("'(' after method name");
          e.node = Call{std::move(type), std::move(name), args()};
        } else {
          expected("expression");
        }
        break;
      case TokenKind::Punct:
        if (!t.is_punct("(")) expected("expression");
        if (at_cast()) {
          take();
          TypeRef type = this->type();
          expect_punct(")");
          Expr operand = unary();
          e.node = Cast{std::move(type), std::move(operand)};
        } else {
          take();
          Expr inner = expr();
          expect_punct(")");
          // parentheses are not kept; the printer re-derives them
          inner.span = span_from(begin);
          return inner;
        }
        break;
      default:
        expected("expression");
    }
    e.span = span_from(begin);
    return e;
  }

  // IDENT, IDENT(args), or a.b.m(args) with a dotted type receiver. A
  // single-segment receiver (`x.m()`) is left to postfix().
  Expr::Node name_primary() {
    std::vector<std::string> parts{take().text};
    while (peek().is_punct(".") && peek(1).kind == TokenKind::Ident) {
      if (parts.size() == 1 && peek(2).is_punct("(")) break;
      take();
      parts.push_back(take().text);
    }
    if (parts.size() == 1) {
      if (peek().is_punct("(")) return Call{NoReceiver{}, parts[0], args()};
      return VarRef{parts[0]};
    }
    if (!peek().is_punct("(")) expected("'(' after qualified name");
    std::string method = parts.back();
    parts.pop_back();
    std::string receiver = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) receiver += "." + parts[i];
    return Call{TypeRef::named(std::move(receiver)), std::move(method), args()};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourcePos last_end_;
};

}  // namespace

SourceUnit parse(std::string_view text) { return Parser(tokenize(text)).unit(); }

}  // namespace jxextract
