#pragma once

#include <string>
#include <vector>

#include "jxextract/ast.hpp"

namespace jxextract {

// Fills TypeRef::resolved for every named type in the unit:
//   1. a simple name matching the last segment of an import takes the import;
//   2. a class declared in this unit becomes `package.Class`;
//   3. any other simple name is assumed to live in the unit's own package.
// Dotted names resolve to themselves; builtins stay unresolved.
//
// Also turns `X.m()` receivers into static-call types when no local,
// parameter or field named X is in scope.
//
// Throws ResolveError when a simple name matches two imports.
SourceUnit resolve_types(SourceUnit unit);

// Package of a fully qualified type name ("a.b.C" -> "a.b"); empty when the
// name has no dot.
std::string package_of(const std::string& qualified_type);

// The package itself followed by all its parents: "a.b.c" -> {a.b.c, a.b, a}.
std::vector<std::string> package_with_parents(const std::string& package);

}  // namespace jxextract
