#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "jxextract/ast.hpp"
#include "jxextract/structure.hpp"

namespace jxextract {

enum class VarKind { Local, Parameter, Field };

// A variable as seen by the dependency analysis. Two locals with the same
// name but different declaration sites are different variables.
struct VarId {
  VarKind kind = VarKind::Local;
  std::string name;
  std::optional<StmtLabel> decl;  // locals only

  static VarId local(std::string name, StmtLabel decl) {
    return {VarKind::Local, std::move(name), decl};
  }
  static VarId parameter(std::string name) {
    return {VarKind::Parameter, std::move(name), std::nullopt};
  }
  static VarId field(std::string name) {
    return {VarKind::Field, std::move(name), std::nullopt};
  }

  // `name`, or `this.name` for fields.
  std::string display() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Dep_var, Dep_type and Dep_pack of a statement set. `packs` is closed under
// taking parent packages; builtin types never appear.
struct DepSets {
  std::set<VarId> vars;
  std::set<std::string> types;
  std::set<std::string> packs;

  void merge(const DepSets& other);
  friend bool operator==(const DepSets&, const DepSets&) = default;
};

// Facts owned by one statement. Composite statements own only their header
// (condition, for init/update); their children carry their own facts.
struct StmtFacts {
  std::vector<VarId> defs;  // written or declared, in order
  std::vector<VarId> uses;  // read, in evaluation order, duplicates kept
  std::set<std::string> types;  // fully qualified, builtins excluded
};

struct DefUse {
  std::vector<StmtFacts> stmts;  // indexed like LabeledMethod::statements()
  // Declared type of every local, parameter and declared field.
  std::map<VarId, TypeRef> var_types;
};

// Binds every variable occurrence of the labeled method. `cls` supplies field
// types and may be null. Requires resolved types.
DefUse def_use(const LabeledMethod& labeled, const ClassDecl* cls = nullptr);

// Union of the facts of the given statements (flat indices).
DepSets extract_deps(const DefUse& facts, std::span<const std::size_t> stmts);
DepSets selection_deps(const DefUse& facts, const Selection& sel);
// Everything in the method outside the selection's closure.
DepSets remainder_deps(const DefUse& facts, const Selection& sel);

// Variables defined inside the closure and read after it. "After" is textual
// order over the flattened method; when the selection sits inside a loop the
// rest of the outermost enclosing loop (its header included) also counts,
// for the back edge. Fields are excluded.
std::set<VarId> live_out(const LabeledMethod& labeled, const DefUse& facts,
                         const Selection& sel);

// Variables read inside the closure whose declaration lies outside it
// (earlier locals and parameters), in order of first read. Fields are
// excluded.
std::vector<VarId> inputs(const LabeledMethod& labeled, const DefUse& facts,
                          const Selection& sel);

// True when `var` is a local declared by a statement inside the closure.
bool declared_inside(const LabeledMethod& labeled, const VarId& var,
                     const Selection& sel);

}  // namespace jxextract
