#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yuppie/base_type.hpp"

namespace yuppie {

// The fifteen structural primitives of Pi.
enum class Prim {
  Id,
  SwapPlus,
  UnitPlus,
  UnitiPlus,
  AssocPlus,
  AssociPlus,
  SwapTimes,
  UnitTimes,
  UnitiTimes,
  AssocTimes,
  AssociTimes,
  Distrib,
  Distribi,
  Distribo,
  Distriboi,
};

inline constexpr std::size_t kPrimCount = 15;

/// Concrete-syntax token, e.g. "swap+", "uniti*".
std::string_view prim_name(Prim p);
/// Inverse of prim_name; returns false when `name` is not a primitive.
bool prim_from_name(std::string_view name, Prim& out);
/// Number of base-type parameters the primitive is instantiated at.
std::size_t prim_arity(Prim p);
/// Partner primitive under inversion (swap+ and swap* are their own).
Prim prim_inverse(Prim p);

/// Source and target of a primitive instantiated at `params`.
///
/// Generic over the type algebra so the checker for concrete types and the
/// unifier for type expressions share one table. `Alg` provides zero(),
/// one(), sum(a, b) and prod(a, b).
template <class T, class Alg>
std::pair<T, T> prim_signature(Prim p, std::span<const T> t, const Alg& alg) {
  switch (p) {
    case Prim::Id:
      return {t[0], t[0]};
    case Prim::SwapPlus:
      return {alg.sum(t[0], t[1]), alg.sum(t[1], t[0])};
    case Prim::UnitPlus:
      return {alg.sum(t[0], alg.zero()), t[0]};
    case Prim::UnitiPlus:
      return {t[0], alg.sum(t[0], alg.zero())};
    case Prim::AssocPlus:
      return {alg.sum(alg.sum(t[0], t[1]), t[2]), alg.sum(t[0], alg.sum(t[1], t[2]))};
    case Prim::AssociPlus:
      return {alg.sum(t[0], alg.sum(t[1], t[2])), alg.sum(alg.sum(t[0], t[1]), t[2])};
    case Prim::SwapTimes:
      return {alg.prod(t[0], t[1]), alg.prod(t[1], t[0])};
    case Prim::UnitTimes:
      return {alg.prod(t[0], alg.one()), t[0]};
    case Prim::UnitiTimes:
      return {t[0], alg.prod(t[0], alg.one())};
    case Prim::AssocTimes:
      return {alg.prod(alg.prod(t[0], t[1]), t[2]), alg.prod(t[0], alg.prod(t[1], t[2]))};
    case Prim::AssociTimes:
      return {alg.prod(t[0], alg.prod(t[1], t[2])), alg.prod(alg.prod(t[0], t[1]), t[2])};
    case Prim::Distrib:
      return {alg.prod(t[0], alg.sum(t[1], t[2])),
              alg.sum(alg.prod(t[0], t[1]), alg.prod(t[0], t[2]))};
    case Prim::Distribi:
      return {alg.sum(alg.prod(t[0], t[1]), alg.prod(t[0], t[2])),
              alg.prod(t[0], alg.sum(t[1], t[2]))};
    case Prim::Distribo:
      return {alg.prod(t[0], alg.zero()), alg.zero()};
    case Prim::Distriboi:
      return {alg.zero(), alg.prod(t[0], alg.zero())};
  }
  return {t[0], t[0]};
}

struct CombType {
  BaseType source;
  BaseType target;

  friend bool operator==(const CombType&, const CombType&) = default;
};

// A well-typed UPi combinator.
//
// Every node carries its source and target; the smart constructors reject
// ill-typed compositions with ErrorKind::TypeMismatch, so a Comb value is
// well-typed by construction. Nodes are immutable and shared.
class Comb {
 public:
  enum class Kind { Prim, Seq, Sum, Prod, Phase, Hadamard };

  static Comb prim(Prim p, std::vector<BaseType> params);
  static Comb seq(Comb first, Comb second);
  static Comb sum(Comb left, Comb right);
  static Comb prod(Comb left, Comb right);
  /// phase e^{i*angle} : 1 <-> 1. Rejects non-finite angles (BadPhase).
  static Comb phase(double angle);
  /// Phase given as a complex number; must satisfy ||phi| - 1| <= 1e-12.
  static Comb phase_value(std::complex<double> phi);
  static Comb hadamard();

  Kind kind() const;
  Prim prim() const;
  std::span<const BaseType> params() const;
  // Children of Seq / Sum / Prod nodes. For Seq, left() runs first.
  const Comb& left() const;
  const Comb& right() const;
  double angle() const;
  std::complex<double> phase_factor() const;

  const BaseType& source() const;
  const BaseType& target() const;
  CombType type() const { return {source(), target()}; }

  /// Node count.
  std::size_t size() const;
  /// True when no Phase or Hadamard occurs (the Pi fragment).
  bool classical() const;

  friend bool operator==(const Comb& a, const Comb& b);

 private:
  struct Node;
  explicit Comb(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The inversion meta-combinator: Seq reverses, Sum/Prod invert pointwise,
/// primitives map to their partner, phases conjugate.
Comb invert(const Comb& c);

// Primitive builders. Parameter order follows the typing table, e.g.
// distrib(a, b, c) : a * (b + c) <-> a * b + a * c.
Comb id(const BaseType& b);
Comb swap_plus(const BaseType& a, const BaseType& b);
Comb unit_plus(const BaseType& b);
Comb uniti_plus(const BaseType& b);
Comb assoc_plus(const BaseType& a, const BaseType& b, const BaseType& c);
Comb associ_plus(const BaseType& a, const BaseType& b, const BaseType& c);
Comb swap_times(const BaseType& a, const BaseType& b);
Comb unit_times(const BaseType& b);
Comb uniti_times(const BaseType& b);
Comb assoc_times(const BaseType& a, const BaseType& b, const BaseType& c);
Comb associ_times(const BaseType& a, const BaseType& b, const BaseType& c);
Comb distrib(const BaseType& a, const BaseType& b, const BaseType& c);
Comb distribi(const BaseType& a, const BaseType& b, const BaseType& c);
Comb distribo(const BaseType& b);
Comb distriboi(const BaseType& b);

/// (a + b) + (c + d) <-> (a + c) + (b + d), and likewise for products.
Comb midswap_plus(const BaseType& a, const BaseType& b, const BaseType& c, const BaseType& d);
Comb midswap_times(const BaseType& a, const BaseType& b, const BaseType& c, const BaseType& d);

/// Left-nested sequence c0 ; c1 ; ... ; cn.
Comb seq(std::initializer_list<Comb> cs);

/// Concrete syntax with every primitive's type parameters spelled out, so the
/// text elaborates back to the identical combinator.
std::string to_string(const Comb& c);

}  // namespace yuppie
