#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "yuppie/base_type.hpp"
#include "yuppie/comb.hpp"

namespace yuppie {

// Type expressions: base types that may contain holes (`_` in the concrete
// syntax) or unification variables.
class TypeExpr {
 public:
  enum class Kind { Zero, One, Sum, Prod, Hole, Var };

  static TypeExpr zero();
  static TypeExpr one();
  static TypeExpr sum(TypeExpr a, TypeExpr b);
  static TypeExpr prod(TypeExpr a, TypeExpr b);
  static TypeExpr hole();
  static TypeExpr var(std::size_t id);
  static TypeExpr from(const BaseType& t);

  Kind kind() const;
  const TypeExpr& left() const;
  const TypeExpr& right() const;
  std::size_t var_id() const;

  /// The concrete type, if the expression contains no holes or variables.
  std::optional<BaseType> concrete() const;
  std::string to_string() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);

 private:
  struct Node;
  explicit TypeExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Term;
using MacroArg = std::variant<Term, TypeExpr, double>;

// Untyped UPi syntax as written by a user: primitives may omit their type
// parameters, subterms may carry annotations, and derived combinators appear
// as unexpanded macro calls.
class Term {
 public:
  enum class Kind { Prim, Phase, Hadamard, Seq, Sum, Prod, Annot, Macro };

  /// `params` is either empty (all holes) or has exactly prim_arity(p) entries.
  static Term prim(Prim p, std::vector<TypeExpr> params = {});
  static Term phase(double angle);
  static Term hadamard();
  static Term seq(Term a, Term b);
  static Term sum(Term a, Term b);
  static Term prod(Term a, Term b);
  static Term annot(Term t, TypeExpr source, TypeExpr target);
  static Term macro(std::string name, std::vector<MacroArg> args = {});

  Kind kind() const;
  Prim prim() const;
  const std::vector<TypeExpr>& params() const;
  double angle() const;
  const Term& left() const;
  const Term& right() const;
  /// Annotated subterm.
  const Term& body() const;
  const TypeExpr& annot_source() const;
  const TypeExpr& annot_target() const;
  const std::string& macro_name() const;
  const std::vector<MacroArg>& macro_args() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term binary(Kind k, Term a, Term b);
  std::shared_ptr<const Node> node_;
};

/// Fully annotated Term denoting exactly `c`.
Term to_term(const Comb& c);

/// Names accepted by expand_macro.
const std::vector<std::string>& macro_names();

/// Literal expansion of one derived combinator. The result may itself
/// contain macro calls (e.g. toffoli expands to ctrl applied to cnot).
/// Errors: UnknownMacro, ArityError.
Term expand_macro(const std::string& name, const std::vector<MacroArg>& args = {});

/// Expands every macro call, recursively, until none remain.
Term expand_all(const Term& t);

// First-order unification over type expressions.
class Unifier {
 public:
  TypeExpr fresh();
  /// Replaces holes by fresh variables.
  TypeExpr instantiate(const TypeExpr& t);
  /// Throws TypeMismatch, with `what` naming the construct being checked.
  void unify(const TypeExpr& a, const TypeExpr& b, const std::string& what);
  /// Applies the current substitution.
  TypeExpr zonk(const TypeExpr& t) const;
  /// Concrete type or UnresolvedHole.
  BaseType resolve(const TypeExpr& t, const std::string& what) const;

 private:
  TypeExpr prune(const TypeExpr& t) const;
  bool occurs(std::size_t id, const TypeExpr& t) const;
  std::vector<std::optional<TypeExpr>> bindings_;
};

// A term after inference: same shape as the Term (annotations and macros
// removed), with every primitive's parameters as type expressions.
struct ElabComb {
  Comb::Kind kind;
  Prim prim = Prim::Id;
  std::vector<TypeExpr> params;
  double angle = 0.0;
  std::vector<ElabComb> children;
  TypeExpr source;
  TypeExpr target;
};

/// Infers a macro-free term against a shared unifier (so enclosing arrow
/// terms can add constraints before resolution).
ElabComb infer(const Term& t, Unifier& u);
/// Builds the typed combinator once all constraints are in.
Comb build(const ElabComb& e, const Unifier& u);

/// Expands macros, infers, and builds. `expected` constrains the result type.
/// Errors: TypeMismatch, UnresolvedHole, BadPhase, UnknownMacro, ArityError.
Comb elaborate(const Term& t, const std::optional<std::pair<TypeExpr, TypeExpr>>& expected = {});

/// The most specific type of `t` (elaborate(t, expected).type()).
CombType typecheck(const Term& t, const std::optional<std::pair<TypeExpr, TypeExpr>>& expected = {});

}  // namespace yuppie
