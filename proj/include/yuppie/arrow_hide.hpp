#pragma once

#include <string>

#include "yuppie/arrow_alloc.hpp"

namespace yuppie {

// A UPi_a arrow producing inhabited garbage: inner : source >-> target x garbage.
struct ArrowChi {
  BaseType source;
  BaseType target;
  BaseType garbage;
  ArrowA inner;
};

/// NotLiftable unless v's target is a product; GarbageUninhabited unless its
/// right factor is inhabited.
ArrowChi lift_chi(const ArrowA& v);
/// Garbage 1.
ArrowChi arr_chi(const ArrowA& v);
ArrowChi pure_chi(const Comb& u);
ArrowChi id_chi(const BaseType& b);

/// Garbage G2 x G1. TypeMismatch unless c1.target == c2.source.
ArrowChi compose_chi(const ArrowChi& c1, const ArrowChi& c2);
ArrowChi prod_chi(const ArrowChi& c1, const ArrowChi& c2);
ArrowChi first_chi(const ArrowChi& c, const BaseType& b);
ArrowChi second_chi(const BaseType& b, const ArrowChi& c);
/// A + b >-> B + b, keeping c's garbage; the b branch emits the canonical
/// inhabitant of that garbage.
ArrowChi left_chi(const ArrowChi& c, const BaseType& b);
ArrowChi right_chi(const BaseType& b, const ArrowChi& c);
ArrowChi sum_chi(const ArrowChi& c1, const ArrowChi& c2);

/// b ~> 1.
ArrowChi discard_chi(const BaseType& b);
/// a x b ~> a and a x b ~> b.
ArrowChi fst_chi(const BaseType& a, const BaseType& b);
ArrowChi snd_chi(const BaseType& a, const BaseType& b);
/// b + b ~> b.
ArrowChi merge_chi(const BaseType& b);
/// b ~> b, computational-basis measurement.
ArrowChi measure_chi(const BaseType& b);

std::string to_string(const ArrowChi& c);

}  // namespace yuppie
