#include "yuppie/comb.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "yuppie/error.hpp"

namespace yuppie {

namespace {

struct PrimInfo {
  Prim prim;
  std::string_view name;
  std::size_t arity;
  Prim inverse;
};

constexpr std::array<PrimInfo, kPrimCount> kPrims = {{
    {Prim::Id, "id", 1, Prim::Id},
    {Prim::SwapPlus, "swap+", 2, Prim::SwapPlus},
    {Prim::UnitPlus, "unit+", 1, Prim::UnitiPlus},
    {Prim::UnitiPlus, "uniti+", 1, Prim::UnitPlus},
    {Prim::AssocPlus, "assoc+", 3, Prim::AssociPlus},
    {Prim::AssociPlus, "associ+", 3, Prim::AssocPlus},
    {Prim::SwapTimes, "swap*", 2, Prim::SwapTimes},
    {Prim::UnitTimes, "unit*", 1, Prim::UnitiTimes},
    {Prim::UnitiTimes, "uniti*", 1, Prim::UnitTimes},
    {Prim::AssocTimes, "assoc*", 3, Prim::AssociTimes},
    {Prim::AssociTimes, "associ*", 3, Prim::AssocTimes},
    {Prim::Distrib, "distrib", 3, Prim::Distribi},
    {Prim::Distribi, "distribi", 3, Prim::Distrib},
    {Prim::Distribo, "distribo", 1, Prim::Distriboi},
    {Prim::Distriboi, "distriboi", 1, Prim::Distribo},
}};

const PrimInfo& info(Prim p) { return kPrims[static_cast<std::size_t>(p)]; }

struct ConcreteAlg {
  BaseType zero() const { return BaseType::zero(); }
  BaseType one() const { return BaseType::one(); }
  BaseType sum(const BaseType& a, const BaseType& b) const { return BaseType::sum(a, b); }
  BaseType prod(const BaseType& a, const BaseType& b) const { return BaseType::prod(a, b); }
};

}  // namespace

std::string_view prim_name(Prim p) { return info(p).name; }

bool prim_from_name(std::string_view name, Prim& out) {
  for (const auto& i : kPrims) {
    if (i.name == name) {
      out = i.prim;
      return true;
    }
  }
  return false;
}

std::size_t prim_arity(Prim p) { return info(p).arity; }

Prim prim_inverse(Prim p) { return info(p).inverse; }

struct Comb::Node {
  Kind kind;
  Prim prim = Prim::Id;
  std::vector<BaseType> params;
  std::vector<Comb> children;
  double angle = 0.0;
  BaseType source;
  BaseType target;
  std::size_t size = 1;
  bool classical = true;
};

Comb Comb::prim(Prim p, std::vector<BaseType> params) {
  if (params.size() != prim_arity(p)) {
    fail(ErrorKind::ArityError, std::string(prim_name(p)) + " expects " +
                                    std::to_string(prim_arity(p)) + " type parameters");
  }
  auto [src, tgt] = prim_signature<BaseType>(p, params, ConcreteAlg{});
  return Comb(std::make_shared<const Node>(
      Node{Kind::Prim, p, std::move(params), {}, 0.0, std::move(src), std::move(tgt)}));
}

Comb Comb::seq(Comb first, Comb second) {
  if (!(first.target() == second.source())) {
    fail(ErrorKind::TypeMismatch, "cannot sequence " + first.target().to_string() +
                                      " into " + second.source().to_string());
  }
  BaseType src = first.source();
  BaseType tgt = second.target();
  const std::size_t size = 1 + first.size() + second.size();
  const bool classical = first.classical() && second.classical();
  return Comb(std::make_shared<const Node>(Node{Kind::Seq, Prim::Id, {}, {std::move(first), std::move(second)},
                                                0.0, std::move(src), std::move(tgt), size, classical}));
}

Comb Comb::sum(Comb left, Comb right) {
  BaseType src = BaseType::sum(left.source(), right.source());
  BaseType tgt = BaseType::sum(left.target(), right.target());
  const std::size_t size = 1 + left.size() + right.size();
  const bool classical = left.classical() && right.classical();
  return Comb(std::make_shared<const Node>(Node{Kind::Sum, Prim::Id, {}, {std::move(left), std::move(right)},
                                                0.0, std::move(src), std::move(tgt), size, classical}));
}

Comb Comb::prod(Comb left, Comb right) {
  BaseType src = BaseType::prod(left.source(), right.source());
  BaseType tgt = BaseType::prod(left.target(), right.target());
  const std::size_t size = 1 + left.size() + right.size();
  const bool classical = left.classical() && right.classical();
  return Comb(std::make_shared<const Node>(Node{Kind::Prod, Prim::Id, {}, {std::move(left), std::move(right)},
                                                0.0, std::move(src), std::move(tgt), size, classical}));
}

Comb Comb::phase(double angle) {
  if (!std::isfinite(angle)) fail(ErrorKind::BadPhase, "phase angle must be finite");
  return Comb(std::make_shared<const Node>(
      Node{Kind::Phase, Prim::Id, {}, {}, angle, BaseType::one(), BaseType::one(), 1, false}));
}

Comb Comb::phase_value(std::complex<double> phi) {
  if (!(std::abs(std::abs(phi) - 1.0) <= 1e-12)) {
    fail(ErrorKind::BadPhase, "phase payload is not of unit modulus");
  }
  return phase(std::arg(phi));
}

Comb Comb::hadamard() {
  static const Comb h(std::make_shared<const Node>(
      Node{Kind::Hadamard, Prim::Id, {}, {}, 0.0, BaseType::qbit(), BaseType::qbit(), 1, false}));
  return h;
}

Comb::Kind Comb::kind() const { return node_->kind; }
Prim Comb::prim() const { return node_->prim; }
std::span<const BaseType> Comb::params() const { return node_->params; }
const Comb& Comb::left() const { return node_->children.at(0); }
const Comb& Comb::right() const { return node_->children.at(1); }
double Comb::angle() const { return node_->angle; }
std::complex<double> Comb::phase_factor() const { return std::polar(1.0, node_->angle); }
const BaseType& Comb::source() const { return node_->source; }
const BaseType& Comb::target() const { return node_->target; }
std::size_t Comb::size() const { return node_->size; }
bool Comb::classical() const { return node_->classical; }

bool operator==(const Comb& a, const Comb& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case Comb::Kind::Prim:
      return x.prim == y.prim && x.params == y.params;
    case Comb::Kind::Phase:
      return x.angle == y.angle;
    case Comb::Kind::Hadamard:
      return true;
    default:
      return x.children[0] == y.children[0] && x.children[1] == y.children[1];
  }
}

Comb invert(const Comb& c) {
  switch (c.kind()) {
    case Comb::Kind::Prim: {
      const Prim inv = prim_inverse(c.prim());
      std::vector<BaseType> params(c.params().begin(), c.params().end());
      if (c.prim() == Prim::SwapPlus || c.prim() == Prim::SwapTimes) {
        std::swap(params[0], params[1]);
      }
      return Comb::prim(inv, std::move(params));
    }
    case Comb::Kind::Seq:
      return Comb::seq(invert(c.right()), invert(c.left()));
    case Comb::Kind::Sum:
      return Comb::sum(invert(c.left()), invert(c.right()));
    case Comb::Kind::Prod:
      return Comb::prod(invert(c.left()), invert(c.right()));
    case Comb::Kind::Phase:
      return Comb::phase(-c.angle());
    case Comb::Kind::Hadamard:
      return c;
  }
  return c;
}

Comb id(const BaseType& b) { return Comb::prim(Prim::Id, {b}); }
Comb swap_plus(const BaseType& a, const BaseType& b) { return Comb::prim(Prim::SwapPlus, {a, b}); }
Comb unit_plus(const BaseType& b) { return Comb::prim(Prim::UnitPlus, {b}); }
Comb uniti_plus(const BaseType& b) { return Comb::prim(Prim::UnitiPlus, {b}); }
Comb assoc_plus(const BaseType& a, const BaseType& b, const BaseType& c) {
  return Comb::prim(Prim::AssocPlus, {a, b, c});
}
Comb associ_plus(const BaseType& a, const BaseType& b, const BaseType& c) {
  return Comb::prim(Prim::AssociPlus, {a, b, c});
}
Comb swap_times(const BaseType& a, const BaseType& b) { return Comb::prim(Prim::SwapTimes, {a, b}); }
Comb unit_times(const BaseType& b) { return Comb::prim(Prim::UnitTimes, {b}); }
Comb uniti_times(const BaseType& b) { return Comb::prim(Prim::UnitiTimes, {b}); }
Comb assoc_times(const BaseType& a, const BaseType& b, const BaseType& c) {
  return Comb::prim(Prim::AssocTimes, {a, b, c});
}
Comb associ_times(const BaseType& a, const BaseType& b, const BaseType& c) {
  return Comb::prim(Prim::AssociTimes, {a, b, c});
}
Comb distrib(const BaseType& a, const BaseType& b, const BaseType& c) {
  return Comb::prim(Prim::Distrib, {a, b, c});
}
Comb distribi(const BaseType& a, const BaseType& b, const BaseType& c) {
  return Comb::prim(Prim::Distribi, {a, b, c});
}
Comb distribo(const BaseType& b) { return Comb::prim(Prim::Distribo, {b}); }
Comb distriboi(const BaseType& b) { return Comb::prim(Prim::Distriboi, {b}); }

Comb seq(std::initializer_list<Comb> cs) {
  auto it = cs.begin();
  Comb acc = *it++;
  for (; it != cs.end(); ++it) acc = Comb::seq(std::move(acc), *it);
  return acc;
}

Comb midswap_plus(const BaseType& a, const BaseType& b, const BaseType& c, const BaseType& d) {
  return seq({assoc_plus(a, b, c + d), Comb::sum(id(a), associ_plus(b, c, d)),
              Comb::sum(id(a), Comb::sum(swap_plus(b, c), id(d))), Comb::sum(id(a), assoc_plus(c, b, d)),
              associ_plus(a, c, b + d)});
}

Comb midswap_times(const BaseType& a, const BaseType& b, const BaseType& c, const BaseType& d) {
  return seq({assoc_times(a, b, c * d), Comb::prod(id(a), associ_times(b, c, d)),
              Comb::prod(id(a), Comb::prod(swap_times(b, c), id(d))), Comb::prod(id(a), assoc_times(c, b, d)),
              associ_times(a, c, b * d)});
}

namespace {

int precedence(Comb::Kind k) {
  switch (k) {
    case Comb::Kind::Seq:
      return 1;
    case Comb::Kind::Sum:
      return 2;
    case Comb::Kind::Prod:
      return 3;
    default:
      return 4;
  }
}

void render(const Comb& c, std::string& out) {
  switch (c.kind()) {
    case Comb::Kind::Prim: {
      out += prim_name(c.prim());
      out += '[';
      bool first = true;
      for (const auto& t : c.params()) {
        if (!first) out += ", ";
        first = false;
        out += t.to_string();
      }
      out += ']';
      return;
    }
    case Comb::Kind::Phase: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", c.angle());
      out += "phase(";
      out += buf;
      out += ')';
      return;
    }
    case Comb::Kind::Hadamard:
      out += "hadamard";
      return;
    default: {
      const int p = precedence(c.kind());
      const bool lp = precedence(c.left().kind()) < p;
      const bool rp = precedence(c.right().kind()) <= p;
      if (lp) out += '(';
      render(c.left(), out);
      if (lp) out += ')';
      out += c.kind() == Comb::Kind::Seq ? " ; " : c.kind() == Comb::Kind::Sum ? " + " : " * ";
      if (rp) out += '(';
      render(c.right(), out);
      if (rp) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Comb& c) {
  std::string out;
  render(c, out);
  return out;
}

}  // namespace yuppie
