#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jxextract/ast.hpp"

namespace jxextract {

// Called once per declaration site (parameters first, then locals in
// pre-order) with the declared name; returns the new name.
using RenameFn = std::function<std::string(const std::string&)>;

// Renames the parameters and locals of `method`. Every reference follows the
// declaration it binds to; bare names that bind to nothing (fields) are left
// alone.
void rename_locals(MethodDecl& method, const RenameFn& rename);

// Same for a statement list. `outer` maps names already in scope to their new
// spelling.
void rename_locals(std::vector<Stmt>& stmts,
                   const std::map<std::string, std::string>& outer,
                   const RenameFn& rename);

// Every variable-like identifier spelled in the method: parameter and local
// names plus bare references and assignment targets (including unqualified
// fields).
std::set<std::string> identifiers(const MethodDecl& method);

// Bare names read or assigned in the method that bind to no parameter or
// local, i.e. unqualified field accesses.
std::set<std::string> free_names(const MethodDecl& method);

}  // namespace jxextract
