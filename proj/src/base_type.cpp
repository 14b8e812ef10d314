#include "yuppie/base_type.hpp"

#include <cassert>

#include "yuppie/error.hpp"

namespace yuppie {

struct BaseType::Node {
  Kind kind;
  BaseType left;
  BaseType right;
  std::size_t dim;
  std::size_t size;
  bool inhabited;
};

BaseType BaseType::zero() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::Zero, BaseType(nullptr), BaseType(nullptr), 0, 1, false});
  return BaseType(node);
}

BaseType BaseType::one() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::One, BaseType(nullptr), BaseType(nullptr), 1, 1, true});
  return BaseType(node);
}

BaseType BaseType::sum(BaseType left, BaseType right) {
  const std::size_t d = left.node_->dim + right.node_->dim;
  const std::size_t s = 1 + left.node_->size + right.node_->size;
  const bool inh = left.node_->inhabited || right.node_->inhabited;
  return BaseType(std::make_shared<const Node>(
      Node{Kind::Sum, std::move(left), std::move(right), d, s, inh}));
}

BaseType BaseType::prod(BaseType left, BaseType right) {
  const std::size_t d = left.node_->dim * right.node_->dim;
  const std::size_t s = 1 + left.node_->size + right.node_->size;
  const bool inh = left.node_->inhabited && right.node_->inhabited;
  return BaseType(std::make_shared<const Node>(
      Node{Kind::Prod, std::move(left), std::move(right), d, s, inh}));
}

BaseType BaseType::qbit() {
  static const BaseType q = sum(one(), one());
  return q;
}

BaseType::Kind BaseType::kind() const { return node_->kind; }

const BaseType& BaseType::left() const {
  assert(node_->left.node_);
  return node_->left;
}

const BaseType& BaseType::right() const {
  assert(node_->right.node_);
  return node_->right;
}

std::size_t BaseType::dim() const { return node_->dim; }

bool BaseType::inhabited() const { return node_->inhabited; }

std::size_t BaseType::size() const { return node_->size; }

namespace {

int precedence(BaseType::Kind k) {
  switch (k) {
    case BaseType::Kind::Sum:
      return 1;
    case BaseType::Kind::Prod:
      return 2;
    default:
      return 3;
  }
}

void render(const BaseType& t, std::string& out) {
  switch (t.kind()) {
    case BaseType::Kind::Zero:
      out += '0';
      return;
    case BaseType::Kind::One:
      out += '1';
      return;
    case BaseType::Kind::Sum:
    case BaseType::Kind::Prod: {
      const int p = precedence(t.kind());
      // Binary operators parse left-associatively, so a right child of the
      // same precedence needs brackets.
      const bool lp = precedence(t.left().kind()) < p;
      const bool rp = precedence(t.right().kind()) <= p;
      if (lp) out += '(';
      render(t.left(), out);
      if (lp) out += ')';
      out += t.kind() == BaseType::Kind::Sum ? " + " : " * ";
      if (rp) out += '(';
      render(t.right(), out);
      if (rp) out += ')';
      return;
    }
  }
}

}  // namespace

std::string BaseType::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const BaseType& a, const BaseType& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->dim != b.node_->dim ||
      a.node_->size != b.node_->size) {
    return false;
  }
  if (a.node_->kind == BaseType::Kind::Zero || a.node_->kind == BaseType::Kind::One) {
    return true;
  }
  return a.left() == b.left() && a.right() == b.right();
}

BaseType qbit_power(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ArityError, "qbit_power needs at least one qubit");
  BaseType t = BaseType::qbit();
  for (std::size_t i = 1; i < n; ++i) t = BaseType::qbit() * t;
  return t;
}

}  // namespace yuppie
