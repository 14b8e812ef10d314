#include "yuppie/arrow_hide.hpp"

#include "yuppie/error.hpp"

namespace yuppie {

ArrowChi lift_chi(const ArrowA& v) {
  if (v.target.kind() != BaseType::Kind::Prod) {
    fail(ErrorKind::NotLiftable, "lift needs an arrow into a product, got target " + v.target.to_string());
  }
  if (!v.target.right().inhabited()) {
    fail(ErrorKind::GarbageUninhabited, "garbage type " + v.target.right().to_string() + " is not inhabited");
  }
  return ArrowChi{v.source, v.target.left(), v.target.right(), v};
}

ArrowChi arr_chi(const ArrowA& v) { return lift_chi(compose_a(v, arr_a(uniti_times(v.target)))); }

ArrowChi pure_chi(const Comb& u) { return arr_chi(arr_a(u)); }

ArrowChi id_chi(const BaseType& b) { return pure_chi(id(b)); }

ArrowChi compose_chi(const ArrowChi& c1, const ArrowChi& c2) {
  if (!(c1.target == c2.source)) {
    fail(ErrorKind::TypeMismatch,
         "cannot compose " + c1.target.to_string() + " into " + c2.source.to_string());
  }
  ArrowA v = compose_a(c1.inner, prod_a(c2.inner, id_a(c1.garbage)));
  return lift_chi(compose_a(v, arr_a(assoc_times(c2.target, c2.garbage, c1.garbage))));
}

ArrowChi prod_chi(const ArrowChi& c1, const ArrowChi& c2) {
  return lift_chi(compose_a(prod_a(c1.inner, c2.inner),
                            arr_a(midswap_times(c1.target, c1.garbage, c2.target, c2.garbage))));
}

ArrowChi first_chi(const ArrowChi& c, const BaseType& b) { return prod_chi(c, id_chi(b)); }
ArrowChi second_chi(const BaseType& b, const ArrowChi& c) { return prod_chi(id_chi(b), c); }

ArrowChi left_chi(const ArrowChi& c, const BaseType& b) {
  const BaseType& tb = c.target;
  const BaseType& g = c.garbage;
  ArrowA v = sum_a(c.inner, arr_a(uniti_times(b)));
  v = compose_a(v, sum_a(id_a(tb * g), prod_a(id_a(b), inhab_a(g))));
  v = compose_a(v, arr_a(Comb::sum(swap_times(tb, g), swap_times(b, g))));
  v = compose_a(v, arr_a(distribi(g, tb, b)));
  v = compose_a(v, arr_a(swap_times(g, tb + b)));
  return lift_chi(v);
}

ArrowChi right_chi(const BaseType& b, const ArrowChi& c) {
  return compose_chi(compose_chi(pure_chi(swap_plus(b, c.source)), left_chi(c, b)),
                     pure_chi(swap_plus(c.target, b)));
}

ArrowChi sum_chi(const ArrowChi& c1, const ArrowChi& c2) {
  return compose_chi(left_chi(c1, c2.source), right_chi(c1.target, c2));
}

namespace {

// Isomorphism b <-> 0 for an uninhabited b.
Comb zero_iso(const BaseType& b) {
  const BaseType z = BaseType::zero();
  switch (b.kind()) {
    case BaseType::Kind::Zero:
      return id(z);
    case BaseType::Kind::Sum:
      return Comb::seq(Comb::sum(zero_iso(b.left()), zero_iso(b.right())), unit_plus(z));
    case BaseType::Kind::Prod:
      if (!b.right().inhabited()) {
        return Comb::seq(Comb::prod(id(b.left()), zero_iso(b.right())), distribo(b.left()));
      }
      return seq({swap_times(b.left(), b.right()), Comb::prod(id(b.right()), zero_iso(b.left())),
                  distribo(b.right())});
    case BaseType::Kind::One:
      break;
  }
  fail(ErrorKind::NotInhabited, "type " + b.to_string() + " is inhabited");
}

}  // namespace

ArrowChi discard_chi(const BaseType& b) {
  const BaseType one = BaseType::one();
  if (b.inhabited()) {
    return lift_chi(compose_a(arr_a(uniti_times(b)), arr_a(swap_times(b, one))));
  }
  ArrowChi from_zero = lift_chi(compose_a(alloc_a(one), arr_a(uniti_times(one))));
  if (b.kind() == BaseType::Kind::Zero) return from_zero;
  return compose_chi(pure_chi(zero_iso(b)), from_zero);
}

ArrowChi fst_chi(const BaseType& a, const BaseType& b) {
  if (b.inhabited()) return lift_chi(id_a(a * b));
  return compose_chi(prod_chi(id_chi(a), discard_chi(b)), pure_chi(unit_times(a)));
}

ArrowChi snd_chi(const BaseType& a, const BaseType& b) {
  if (a.inhabited()) return lift_chi(arr_a(swap_times(a, b)));
  return compose_chi(pure_chi(swap_times(a, b)), fst_chi(b, a));
}

ArrowChi merge_chi(const BaseType& b) {
  const BaseType one = BaseType::one();
  ArrowChi tag = sum_chi(pure_chi(uniti_times(b)), pure_chi(uniti_times(b)));
  return compose_chi(compose_chi(tag, pure_chi(distribi(b, one, one))), fst_chi(b, one + one));
}

ArrowChi measure_chi(const BaseType& b) { return compose_chi(arr_chi(clone_a(b)), fst_chi(b, b)); }

std::string to_string(const ArrowChi& c) { return "lift(" + to_string(c.inner) + ")"; }

}  // namespace yuppie
