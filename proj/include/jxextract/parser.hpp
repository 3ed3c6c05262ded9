#pragma once

#include <string_view>

#include "jxextract/ast.hpp"

namespace jxextract {

// Parses a JX compilation unit:
//
//   unit        := "package" dotted ";" ("import" dotted ";")* classDecl+
//   classDecl   := "class" IDENT "{" (fieldDecl | methodDecl)* "}"
//   methodDecl  := ("void" | type) IDENT "(" params? ")" block
//   stmt        := varDecl | assign | exprStmt | if | while | for
//                | "return" expr? ";" | "break" ";" | "continue" ";" | block
//
// Type names are left unresolved; run resolve_types() before analysis.
// Throws LexError or ParseError.
SourceUnit parse(std::string_view text);

}  // namespace jxextract
