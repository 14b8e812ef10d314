#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace yuppie {

// Finite base types: 0 | 1 | b + b | b * b.
//
// Values are immutable and share structure; copying a BaseType is a
// reference-count bump. Equality is structural.
class BaseType {
 public:
  enum class Kind { Zero, One, Sum, Prod };

  static BaseType zero();
  static BaseType one();
  static BaseType sum(BaseType left, BaseType right);
  static BaseType prod(BaseType left, BaseType right);
  /// 1 + 1
  static BaseType qbit();

  Kind kind() const;
  bool is_sum() const { return kind() == Kind::Sum; }
  bool is_prod() const { return kind() == Kind::Prod; }

  // Only valid on Sum and Prod nodes.
  const BaseType& left() const;
  const BaseType& right() const;

  /// Dimension of the denoted Hilbert space (size of the denoted finite set).
  std::size_t dim() const;

  /// The inhabitation judgement: 1 is inhabited, a product when both factors
  /// are, a sum when either summand is. Holds exactly when dim() > 0.
  bool inhabited() const;

  /// Number of nodes in the syntax tree.
  std::size_t size() const;

  std::string to_string() const;

  friend bool operator==(const BaseType& a, const BaseType& b);

 private:
  struct Node;
  explicit BaseType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline BaseType operator+(BaseType a, BaseType b) {
  return BaseType::sum(std::move(a), std::move(b));
}
inline BaseType operator*(BaseType a, BaseType b) {
  return BaseType::prod(std::move(a), std::move(b));
}

/// Right-nested n-fold product of qubits: Q, Q * Q, Q * (Q * Q), ...
BaseType qbit_power(std::size_t n);

}  // namespace yuppie
