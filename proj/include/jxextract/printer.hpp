#pragma once

#include <functional>
#include <string>

#include "jxextract/ast.hpp"

namespace jxextract {

// Deterministic JX formatting: 4-space indent, one statement per line, the
// minimum parentheses needed to re-parse to the same tree. Comments and the
// original layout are not preserved.
std::string pretty_print(const SourceUnit& unit);

std::string print_expr(const Expr& e);
std::string print_type(const TypeRef& t);

// Returns the gutter text for the first line of a statement, or an empty
// string for none.
using StmtAnnotator = std::function<std::string(const Stmt&)>;

// Prints one method at zero indentation. When `annotate` is set every line
// gets a gutter of `gutter_width` columns, filled from the annotator on the
// line a statement starts.
std::string print_method(const MethodDecl& method,
                         const StmtAnnotator& annotate = {},
                         std::size_t gutter_width = 0);

}  // namespace jxextract
