#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jxextract/ast.hpp"

namespace jxextract {

enum class TokenKind {
  Keyword,
  Ident,
  Int,
  Double,
  String,
  Op,     // operators, including `=`
  Punct,  // . , ; ( ) { }
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  // Lexeme as written. For string literals this is the decoded value.
  std::string text;
  SourceSpan span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
  bool is_op(std::string_view t) const { return is(TokenKind::Op, t); }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punct, t); }
};

// "kw:int", "ident:x", "op:=", "int:1", "punct:;" ...
std::string to_string(const Token& token);

// Splits JX source into tokens. Whitespace, `//` and `/* */` comments are
// dropped. The returned list always ends with one End token.
// Throws LexError on an illegal character or an unterminated string/comment.
std::vector<Token> tokenize(std::string_view text);

bool is_keyword(std::string_view word);

}  // namespace jxextract
