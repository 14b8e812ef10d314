#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "yuppie/flowchart.hpp"
#include "yuppie/term.hpp"

namespace yuppie {

// Combinators, allocation arrows, hiding arrows, flowcharts.
enum class Level { Comb, Alloc, Hide, Chart };

std::string_view to_string(Level l);
/// From the file extension: .pi, .pia, .chi, .qfc (anything else: Comb).
Level level_for_path(std::string_view path);

// Untyped surface expression shared by all three term levels.
struct Expr {
  enum class Kind { Name, Phase, Binary, Annot };

  Kind kind = Kind::Name;
  // Name: identifier. Binary: one of ">>>", "+++", "***", ";", "+", "*".
  std::string name;
  bool has_targs = false;
  std::vector<TypeExpr> targs;
  bool has_args = false;
  // Call arguments; the two operands of Binary; the body of Annot.
  std::vector<Expr> args;
  // Phase angle, or the leading numeric argument of a call such as scale.
  std::optional<double> angle;
  // Annot: arrow kind (Comb, Alloc or Hide) and its source/target.
  Level annot_level = Level::Comb;
  std::vector<TypeExpr> annot;
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const Expr& a, const Expr& b);
};

struct ChartExpr {
  FlowChart::Kind kind = FlowChart::Kind::Initial;
  std::string name;
  std::vector<std::string> vars;
  std::vector<Expr> unitary;  // Apply: exactly one
  std::vector<ChartExpr> children;
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const ChartExpr& a, const ChartExpr& b);
};

struct Definition {
  std::string name;
  // Level of the body: from the annotation, else from the file.
  Level level = Level::Comb;
  bool annotated = false;
  std::vector<TypeExpr> annot;  // source, target when annotated
  std::optional<Expr> body;
  std::optional<ChartExpr> chart;
  std::optional<ContextSum> input;
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const Definition& a, const Definition& b);
};

struct Program {
  std::vector<Definition> defs;

  const Definition* find(std::string_view name) const;
  friend bool operator==(const Program&, const Program&) = default;
};

/// Throws ParseError with 1-based line and column.
Program parse_program(std::string_view text, Level default_level = Level::Comb);
Expr parse_expr(std::string_view text);
TypeExpr parse_type(std::string_view text);

std::string to_string(const Expr& e);
std::string to_string(const ChartExpr& c);
std::string to_string(const Program& p);

struct ChartValue {
  FlowChart chart;
  ContextSum input;
  ContextSum output;
};

using Value = std::variant<Comb, ArrowA, ArrowChi, ChartValue>;

/// Errors: UnknownDefinition, RecursiveDefinition, plus those of the
/// semantic constructors.
Value elaborate_definition(const Program& p, std::string_view name);
/// The last definition in the file.
const Definition& default_definition(const Program& p);

/// Elaborates `e` at `level` (Comb, Alloc or Hide), resolving names in `p`.
Value elaborate_expr(const Expr& e, Level level, const Program& p = {},
                     const std::optional<std::pair<TypeExpr, TypeExpr>>& expected = {});

// Conveniences over parse_expr + elaborate_expr with an empty program.
Comb parse_comb(std::string_view text);
ArrowA parse_arrow_a(std::string_view text);
ArrowChi parse_arrow_chi(std::string_view text);

/// Raises a value to a higher level (Comb -> arr -> arr); TypeMismatch when
/// asked to go down.
Comb as_comb(const Value& v);
ArrowA as_arrow_a(const Value& v);
ArrowChi as_arrow_chi(const Value& v);

}  // namespace yuppie
