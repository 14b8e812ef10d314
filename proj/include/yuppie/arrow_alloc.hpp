#pragma once

#include <string>

#include "yuppie/comb.hpp"

namespace yuppie {

// A UPi combinator with a hidden heap, kept in lift normal form:
// body : source + heap <-> target.
struct ArrowA {
  BaseType source;
  BaseType target;
  BaseType heap;
  Comb body;
};

/// Reads the heap off the right summand of u's source. NotLiftable if the
/// source is not a sum.
ArrowA lift_a(const Comb& u);
/// Heap 0.
ArrowA arr_a(const Comb& u);
ArrowA id_a(const BaseType& b);

/// c1 >>> c2. TypeMismatch unless c1.target == c2.source.
ArrowA compose_a(const ArrowA& c1, const ArrowA& c2);
/// c1 *** c2, heap (A x H2) + ((H1 x A') + (H1 x H2)).
ArrowA prod_a(const ArrowA& c1, const ArrowA& c2);
/// c1 +++ c2, heap H1 + H2.
ArrowA sum_a(const ArrowA& c1, const ArrowA& c2);

ArrowA first_a(const ArrowA& c, const BaseType& b);
ArrowA second_a(const BaseType& b, const ArrowA& c);
ArrowA left_a(const ArrowA& c, const BaseType& b);
ArrowA right_a(const BaseType& b, const ArrowA& c);

/// 0 >-> b.
ArrowA alloc_a(const BaseType& b);
/// a >-> a + b and b >-> a + b.
ArrowA inl_a(const BaseType& a, const BaseType& b);
ArrowA inr_a(const BaseType& a, const BaseType& b);
/// b >-> b x b, by structural recursion on b.
ArrowA clone_a(const BaseType& b);
/// Canonical 1 >-> b, left-biased on sums. NotInhabited if b is not.
ArrowA inhab_a(const BaseType& b);

std::string to_string(const ArrowA& a);

}  // namespace yuppie
