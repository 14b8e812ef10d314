#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yuppie/channel.hpp"

namespace yuppie {

// A sum of typing contexts. A context is a list of qubit names, typed as the
// left-nested product 1 * Q * ... * Q.
struct ContextSum {
  enum class Kind { Zero, Ctx, Plus };

  Kind kind = Kind::Zero;
  std::vector<std::string> names;
  std::vector<ContextSum> parts;

  static ContextSum zero();
  static ContextSum ctx(std::vector<std::string> names);
  static ContextSum plus(ContextSum a, ContextSum b);

  BaseType type() const;
  std::string to_string() const;

  friend bool operator==(const ContextSum&, const ContextSum&) = default;
};

BaseType context_type(const std::vector<std::string>& names);

class FlowChart {
 public:
  enum class Kind { NewQbit, Discard, Apply, Permute, Initial, Measure, Merge, Seq, Branch };

  static FlowChart new_qbit(std::string name);
  static FlowChart discard(std::string name);
  /// `u` must have type Q^k <-> Q^k (right-nested) for k = vars.size().
  static FlowChart apply(std::vector<std::string> vars, Comb u);
  /// The context afterwards lists the variables in this order.
  static FlowChart permute(std::vector<std::string> order);
  static FlowChart initial();
  static FlowChart measure(std::string name);
  static FlowChart merge();
  static FlowChart seq(FlowChart a, FlowChart b);
  static FlowChart branch(FlowChart a, FlowChart b);

  Kind kind() const;
  const std::string& name() const;
  /// Variables of Apply, target order of Permute.
  const std::vector<std::string>& vars() const;
  const Comb& unitary() const;
  const FlowChart& left() const;
  const FlowChart& right() const;

  friend bool operator==(const FlowChart& a, const FlowChart& b);

 private:
  struct Node;
  explicit FlowChart(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Concrete syntax; parses back to an equal chart.
std::string to_string(const FlowChart& fc);

/// Output contexts for the given input (default: the empty sum, as for a
/// chart starting with `initial`). Errors: UnboundVariable, DuplicateVariable,
/// BranchMismatch, ContextShape, TypeMismatch.
ContextSum check_flowchart(const FlowChart& fc, const ContextSum& input = ContextSum::zero());

/// input.type() ~> check_flowchart(fc, input).type().
ArrowChi translate(const FlowChart& fc, const ContextSum& input = ContextSum::zero());

struct BranchResult {
  std::vector<std::string> names;
  CMatrix state;  // unnormalized block of the output density matrix
  double weight;  // trace of the block
};

// Runs a chart whose first command is `initial` on the one-dimensional state
// of the empty context and splits the output by branch.
struct RunResult {
  ContextSum output;
  CMatrix state;
  std::vector<BranchResult> branches;
};

RunResult run_flowchart(const FlowChart& fc);

}  // namespace yuppie
