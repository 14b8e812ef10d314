#include "yuppie/arrow_alloc.hpp"

#include "yuppie/error.hpp"

namespace yuppie {

ArrowA lift_a(const Comb& u) {
  if (u.source().kind() != BaseType::Kind::Sum) {
    fail(ErrorKind::NotLiftable, "lift needs a combinator out of a sum, got source " + u.source().to_string());
  }
  return ArrowA{u.source().left(), u.target(), u.source().right(), u};
}

ArrowA arr_a(const Comb& u) { return lift_a(Comb::seq(unit_plus(u.source()), u)); }

ArrowA id_a(const BaseType& b) { return arr_a(id(b)); }

ArrowA compose_a(const ArrowA& c1, const ArrowA& c2) {
  if (!(c1.target == c2.source)) {
    fail(ErrorKind::TypeMismatch,
         "cannot compose " + c1.target.to_string() + " into " + c2.source.to_string());
  }
  return lift_a(seq({associ_plus(c1.source, c1.heap, c2.heap), Comb::sum(c1.body, id(c2.heap)), c2.body}));
}

ArrowA prod_a(const ArrowA& c1, const ArrowA& c2) {
  const BaseType& a = c1.source;
  const BaseType& h1 = c1.heap;
  const BaseType& a2 = c2.source;
  const BaseType& h2 = c2.heap;
  return lift_a(seq({associ_plus(a * a2, a * h2, (h1 * a2) + (h1 * h2)),
                     Comb::sum(distribi(a, a2, h2), distribi(h1, a2, h2)),
                     Comb::sum(swap_times(a, a2 + h2), swap_times(h1, a2 + h2)),
                     distribi(a2 + h2, a, h1), swap_times(a2 + h2, a + h1),
                     Comb::prod(c1.body, c2.body)}));
}

ArrowA sum_a(const ArrowA& c1, const ArrowA& c2) {
  return lift_a(Comb::seq(midswap_plus(c1.source, c2.source, c1.heap, c2.heap), Comb::sum(c1.body, c2.body)));
}

ArrowA first_a(const ArrowA& c, const BaseType& b) { return prod_a(c, id_a(b)); }
ArrowA second_a(const BaseType& b, const ArrowA& c) { return prod_a(id_a(b), c); }
ArrowA left_a(const ArrowA& c, const BaseType& b) { return sum_a(c, id_a(b)); }
ArrowA right_a(const BaseType& b, const ArrowA& c) { return sum_a(id_a(b), c); }

ArrowA alloc_a(const BaseType& b) {
  return lift_a(Comb::seq(swap_plus(BaseType::zero(), b), unit_plus(b)));
}

ArrowA inl_a(const BaseType& a, const BaseType& b) { return lift_a(id(a + b)); }

ArrowA inr_a(const BaseType& a, const BaseType& b) { return lift_a(swap_plus(b, a)); }

ArrowA clone_a(const BaseType& b) {
  switch (b.kind()) {
    case BaseType::Kind::Zero:
      return arr_a(distriboi(b));
    case BaseType::Kind::One:
      return arr_a(uniti_times(b));
    case BaseType::Kind::Prod: {
      const BaseType& l = b.left();
      const BaseType& r = b.right();
      return compose_a(prod_a(clone_a(l), clone_a(r)), arr_a(midswap_times(l, l, r, r)));
    }
    case BaseType::Kind::Sum: {
      const BaseType& l = b.left();
      const BaseType& r = b.right();
      ArrowA tag = sum_a(prod_a(inl_a(l, r), id_a(l)), prod_a(inr_a(l, r), id_a(r)));
      return compose_a(compose_a(sum_a(clone_a(l), clone_a(r)), tag), arr_a(distribi(b, l, r)));
    }
  }
  fail(ErrorKind::IllTyped, "unknown type");
}

ArrowA inhab_a(const BaseType& b) {
  switch (b.kind()) {
    case BaseType::Kind::One:
      return id_a(b);
    case BaseType::Kind::Prod:
      if (b.inhabited()) {
        return compose_a(arr_a(uniti_times(BaseType::one())), prod_a(inhab_a(b.left()), inhab_a(b.right())));
      }
      break;
    case BaseType::Kind::Sum:
      if (b.left().inhabited()) return compose_a(inhab_a(b.left()), inl_a(b.left(), b.right()));
      if (b.right().inhabited()) return compose_a(inhab_a(b.right()), inr_a(b.left(), b.right()));
      break;
    case BaseType::Kind::Zero:
      break;
  }
  fail(ErrorKind::NotInhabited, "type " + b.to_string() + " is not inhabited");
}

std::string to_string(const ArrowA& a) { return "lift(" + to_string(a.body) + ")"; }

}  // namespace yuppie
