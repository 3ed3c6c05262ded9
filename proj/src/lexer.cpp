#include "jxextract/lexer.hpp"

#include <array>
#include <cctype>

#include "jxextract/error.hpp"

namespace jxextract {

namespace {

constexpr std::array kKeywords = {
    "package", "import", "class",  "void",     "int",   "boolean",
    "double",  "String", "if",     "else",     "while", "for",
    "return",  "break",  "continue", "new",    "this",  "true",
    "false",
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (at_end()) break;
      out.push_back(next());
    }
    Token end;
    end.kind = TokenKind::End;
    end.span = {pos(), pos()};
    out.push_back(end);
    return out;
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return offset_ + ahead < text_.size() ? text_[offset_ + ahead] : '\0';
  }
  SourcePos pos() const { return {offset_, line_, column_}; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[offset_]) & 0xC0) != 0x80) {
      // columns count code points, not continuation bytes
      ++column_;
    }
    ++offset_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourcePos start = pos();
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end())
            throw LexError("unterminated block comment", start.line, start.column);
          advance();
        }
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, SourcePos start, std::string text) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.span = {start, pos()};
    return t;
  }

  Token next() {
    SourcePos start = pos();
    char c = peek();
    if (ident_start(c)) {
      while (!at_end() && ident_char(peek())) advance();
      std::string word(text_.substr(start.offset, offset_ - start.offset));
      TokenKind kind = is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident;
      return make(kind, start, std::move(word));
    }
    if (digit(c)) return number(start);
    if (c == '"') return string(start);

    static constexpr std::array kTwoChar = {"||", "&&", "==", "!=", "<=", ">="};
    for (std::string_view op : kTwoChar) {
      if (text_.substr(offset_, 2) == op) {
        advance();
        advance();
        return make(TokenKind::Op, start, std::string(op));
      }
    }
    switch (c) {
      case '<': case '>': case '+': case '-': case '*': case '/': case '%':
      case '!': case '=':
        advance();
        return make(TokenKind::Op, start, std::string(1, c));
      case '.': case ',': case ';': case '(': case ')': case '{': case '}':
        advance();
        return make(TokenKind::Punct, start, std::string(1, c));
      default:
        break;
    }
    throw LexError(std::string("illegal character '") + c + "'", start.line,
                   start.column);
  }

  Token number(SourcePos start) {
    while (digit(peek())) advance();
    bool is_double = false;
    if (peek() == '.' && digit(peek(1))) {
      is_double = true;
      advance();
      while (digit(peek())) advance();
    }
    if (ident_char(peek()))
      throw LexError("malformed number", start.line, start.column);
    return make(is_double ? TokenKind::Double : TokenKind::Int, start,
                std::string(text_.substr(start.offset, offset_ - start.offset)));
  }

  Token string(SourcePos start) {
    advance();  // opening quote
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n')
        throw LexError("unterminated string literal", start.line, start.column);
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        SourcePos esc = pos();
        advance();
        if (at_end())
          throw LexError("unterminated string literal", start.line, start.column);
        switch (peek()) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default:
            throw LexError("unknown escape sequence", esc.line, esc.column);
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    return make(TokenKind::String, start, std::move(value));
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (std::string_view kw : kKeywords)
    if (kw == word) return true;
  return false;
}

std::string to_string(const Token& token) {
  switch (token.kind) {
    case TokenKind::Keyword: return "kw:" + token.text;
    case TokenKind::Ident: return "ident:" + token.text;
    case TokenKind::Int: return "int:" + token.text;
    case TokenKind::Double: return "double:" + token.text;
    case TokenKind::String: return "string:" + token.text;
    case TokenKind::Op: return "op:" + token.text;
    case TokenKind::Punct: return "punct:" + token.text;
    case TokenKind::End: return "end";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace jxextract
