#include "yuppie/gen.hpp"

#include <numbers>

#include "yuppie/error.hpp"

namespace yuppie {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool coin(Rng& rng, std::size_t num, std::size_t den) { return pick(rng, den) < num; }

BaseType::Kind kind(const BaseType& t) { return t.kind(); }

bool is_sum(const BaseType& t) { return kind(t) == BaseType::Kind::Sum; }
bool is_prod(const BaseType& t) { return kind(t) == BaseType::Kind::Prod; }

}  // namespace

BaseType gen_type(Rng& rng, std::size_t max_dim, std::size_t max_leaves) {
  for (;;) {
    const std::size_t leaves = 1 + pick(rng, max_leaves);
    auto build = [&](auto&& self, std::size_t n) -> BaseType {
      if (n == 1) return coin(rng, 1, 5) ? BaseType::zero() : BaseType::one();
      const std::size_t l = 1 + pick(rng, n - 1);
      BaseType a = self(self, l);
      BaseType b = self(self, n - l);
      return coin(rng, 1, 2) ? a + b : a * b;
    };
    BaseType t = build(build, leaves);
    if (t.dim() <= max_dim) return t;
  }
}

namespace {

std::vector<Comb> applicable_prims(Rng& rng, const BaseType& s) {
  std::vector<Comb> out{id(s), uniti_plus(s), uniti_times(s)};
  if (s.kind() == BaseType::Kind::Zero) out.push_back(distriboi(coin(rng, 1, 2) ? BaseType::one() : BaseType::qbit()));
  if (s == BaseType::qbit()) out.push_back(Comb::hadamard());
  if (s.kind() == BaseType::Kind::One) {
    const double angles[] = {std::numbers::pi, std::numbers::pi / 2, std::numbers::pi / 4, -std::numbers::pi / 3, 1.0};
    out.push_back(Comb::phase(angles[pick(rng, 5)]));
  }
  if (is_sum(s)) {
    const BaseType& a = s.left();
    const BaseType& b = s.right();
    out.push_back(swap_plus(a, b));
    if (b.kind() == BaseType::Kind::Zero) out.push_back(unit_plus(a));
    if (is_sum(a)) out.push_back(assoc_plus(a.left(), a.right(), b));
    if (is_sum(b)) out.push_back(associ_plus(a, b.left(), b.right()));
    if (is_prod(a) && is_prod(b) && a.left() == b.left()) out.push_back(distribi(a.left(), a.right(), b.right()));
  }
  if (is_prod(s)) {
    const BaseType& a = s.left();
    const BaseType& b = s.right();
    out.push_back(swap_times(a, b));
    if (b.kind() == BaseType::Kind::One) out.push_back(unit_times(a));
    if (is_prod(a)) out.push_back(assoc_times(a.left(), a.right(), b));
    if (is_prod(b)) out.push_back(associ_times(a, b.left(), b.right()));
    if (is_sum(b)) out.push_back(distrib(a, b.left(), b.right()));
    if (b.kind() == BaseType::Kind::Zero) out.push_back(distribo(a));
  }
  return out;
}

}  // namespace

Comb gen_comb_from(Rng& rng, const BaseType& s, std::size_t depth) {
  if (depth == 0 || coin(rng, 1, 4)) {
    auto prims = applicable_prims(rng, s);
    // Prefer the structural moves over id and the unit introductions.
    if (prims.size() > 3 && coin(rng, 3, 4)) return prims[3 + pick(rng, prims.size() - 3)];
    return prims[pick(rng, prims.size())];
  }
  std::vector<int> moves{0, 1};
  if (is_sum(s)) moves.push_back(2);
  if (is_prod(s)) moves.push_back(3);
  switch (moves[pick(rng, moves.size())]) {
    case 0: {
      Comb a = gen_comb_from(rng, s, depth - 1);
      return Comb::seq(a, gen_comb_from(rng, a.target(), depth - 1));
    }
    case 1: {
      Comb a = gen_comb_from(rng, s, depth - 1);
      return Comb::seq(a, invert(a));
    }
    case 2:
      return Comb::sum(gen_comb_from(rng, s.left(), depth - 1), gen_comb_from(rng, s.right(), depth - 1));
    default:
      return Comb::prod(gen_comb_from(rng, s.left(), depth - 1), gen_comb_from(rng, s.right(), depth - 1));
  }
}

Comb gen_comb(std::size_t type_budget, std::size_t depth, std::uint64_t seed) {
  Rng rng(seed);
  return gen_comb_from(rng, gen_type(rng, type_budget), depth);
}

ArrowA gen_arrow_a_from(Rng& rng, const BaseType& s, std::size_t depth, std::size_t max_dim) {
  const std::size_t d = s.dim();
  std::vector<int> moves{0};
  if (d < max_dim) moves.insert(moves.end(), {1, 2, 3});
  if (d * d <= max_dim) moves.push_back(4);
  if (s.kind() == BaseType::Kind::One) moves.push_back(5);
  if (s.kind() == BaseType::Kind::Zero) moves.push_back(6);
  if (depth > 0) {
    moves.push_back(7);
    if (is_sum(s)) moves.push_back(8);
    if (is_prod(s)) moves.push_back(9);
  }
  auto small = [&](std::size_t room) { return gen_type(rng, room, 3); };
  const std::size_t sub = depth == 0 ? 0 : depth - 1;
  switch (moves[pick(rng, moves.size())]) {
    case 1: {
      const BaseType h = small(max_dim - d);
      return lift_a(gen_comb_from(rng, s + h, sub));
    }
    case 2:
      return inl_a(s, small(max_dim - d));
    case 3:
      return inr_a(small(max_dim - d), s);
    case 4:
      return clone_a(s);
    case 5: {
      BaseType b = small(max_dim);
      while (!b.inhabited()) b = small(max_dim);
      return inhab_a(b);
    }
    case 6:
      return alloc_a(small(max_dim));
    case 7: {
      ArrowA a = gen_arrow_a_from(rng, s, sub, max_dim);
      return compose_a(a, gen_arrow_a_from(rng, a.target, sub, max_dim));
    }
    case 8: {
      ArrowA l = gen_arrow_a_from(rng, s.left(), sub, max_dim);
      const std::size_t room = l.target.dim() < max_dim ? max_dim - l.target.dim() : 0;
      ArrowA r = room >= s.right().dim() ? gen_arrow_a_from(rng, s.right(), sub, room) : id_a(s.right());
      if (l.target.dim() + r.target.dim() > max_dim) return sum_a(id_a(s.left()), id_a(s.right()));
      return sum_a(l, r);
    }
    case 9: {
      const std::size_t dr = std::max<std::size_t>(1, s.right().dim());
      ArrowA l = gen_arrow_a_from(rng, s.left(), sub, std::max(s.left().dim(), max_dim / dr));
      const std::size_t dl = std::max<std::size_t>(1, l.target.dim());
      ArrowA r = gen_arrow_a_from(rng, s.right(), sub, std::max(s.right().dim(), max_dim / dl));
      if (l.target.dim() * r.target.dim() > max_dim) return prod_a(id_a(s.left()), id_a(s.right()));
      return prod_a(l, r);
    }
    default:
      return arr_a(gen_comb_from(rng, s, sub));
  }
}

ArrowA gen_arrow_a(std::size_t type_budget, std::size_t depth, std::uint64_t seed) {
  Rng rng(seed);
  return gen_arrow_a_from(rng, gen_type(rng, type_budget), depth, type_budget);
}

ArrowChi gen_arrow_chi_from(Rng& rng, const BaseType& s, std::size_t depth, std::size_t max_dim) {
  std::vector<int> moves{0, 1, 2, 3};
  if (is_prod(s)) moves.insert(moves.end(), {4, 5});
  if (is_sum(s) && s.left() == s.right()) moves.push_back(6);
  if (depth > 0) {
    moves.push_back(7);
    if (is_sum(s)) moves.push_back(8);
    if (is_prod(s)) moves.push_back(9);
  }
  const std::size_t sub = depth == 0 ? 0 : depth - 1;
  switch (moves[pick(rng, moves.size())]) {
    case 1:
      return discard_chi(s);
    case 2:
      return measure_chi(s);
    case 3: {
      // lift of an allocation arrow into target x garbage with inhabited garbage
      ArrowA v = gen_arrow_a_from(rng, s, sub, max_dim);
      if (!is_prod(v.target) || !v.target.right().inhabited()) return arr_chi(v);
      return lift_chi(v);
    }
    case 4:
      return fst_chi(s.left(), s.right());
    case 5:
      return snd_chi(s.left(), s.right());
    case 6:
      return merge_chi(s.left());
    case 7: {
      ArrowChi a = gen_arrow_chi_from(rng, s, sub, max_dim);
      return compose_chi(a, gen_arrow_chi_from(rng, a.target, sub, max_dim));
    }
    case 8: {
      ArrowChi l = gen_arrow_chi_from(rng, s.left(), sub, max_dim);
      ArrowChi r = gen_arrow_chi_from(rng, s.right(), sub, max_dim);
      if (l.target.dim() + r.target.dim() > max_dim) return id_chi(s);
      return sum_chi(l, r);
    }
    case 9: {
      ArrowChi l = gen_arrow_chi_from(rng, s.left(), sub, max_dim);
      ArrowChi r = gen_arrow_chi_from(rng, s.right(), sub, max_dim);
      if (l.target.dim() * r.target.dim() > max_dim) return id_chi(s);
      return prod_chi(l, r);
    }
    default:
      return arr_chi(gen_arrow_a_from(rng, s, sub, max_dim));
  }
}

ArrowChi gen_arrow_chi(std::size_t type_budget, std::size_t depth, std::uint64_t seed) {
  Rng rng(seed);
  return gen_arrow_chi_from(rng, gen_type(rng, type_budget), depth, type_budget);
}

std::vector<BaseType> all_types(std::size_t leaves) {
  if (leaves == 0) return {};
  if (leaves == 1) return {BaseType::zero(), BaseType::one()};
  std::vector<BaseType> out;
  for (std::size_t l = 1; l < leaves; ++l) {
    const auto left = all_types(l);
    const auto right = all_types(leaves - l);
    for (const auto& a : left)
      for (const auto& b : right) {
        out.push_back(a + b);
        out.push_back(a * b);
      }
  }
  return out;
}

std::vector<BaseType> all_types_up_to(std::size_t max_leaves, std::size_t max_dim) {
  std::vector<BaseType> out;
  for (std::size_t n = 1; n <= max_leaves; ++n)
    for (const auto& t : all_types(n))
      if (t.dim() <= max_dim) out.push_back(t);
  return out;
}

std::vector<ArrowA> classical_states(const BaseType& b) {
  switch (b.kind()) {
    case BaseType::Kind::Zero:
      return {};
    case BaseType::Kind::One:
      return {id_a(b)};
    case BaseType::Kind::Sum: {
      std::vector<ArrowA> out;
      for (const auto& s : classical_states(b.left())) out.push_back(compose_a(s, inl_a(b.left(), b.right())));
      for (const auto& s : classical_states(b.right())) out.push_back(compose_a(s, inr_a(b.left(), b.right())));
      return out;
    }
    case BaseType::Kind::Prod: {
      std::vector<ArrowA> out;
      const auto ls = classical_states(b.left());
      const auto rs = classical_states(b.right());
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(compose_a(arr_a(uniti_times(BaseType::one())), prod_a(l, r)));
      return out;
    }
  }
  return {};
}

}  // namespace yuppie
