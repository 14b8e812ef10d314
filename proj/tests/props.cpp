#include "props.hpp"

#include <cmath>
#include <exception>
#include <functional>

#include "oracles.hpp"
#include "yuppie/channel.hpp"
#include "yuppie/classical.hpp"
#include "yuppie/gen.hpp"
#include "yuppie/syntax.hpp"

namespace props {

using namespace yuppie;

void Report::check(bool pass, const std::string& what) {
  ++cases;
  if (pass) return;
  if (failures++ == 0) first_failure = what;
}

namespace {

const BaseType one = BaseType::one();

// Runs `body`, counting a thrown error as a failed case.
void guarded(Report& r, const std::string& what, const std::function<bool()>& body) {
  bool pass = false;
  std::string msg = what;
  try {
    pass = body();
  } catch (const std::exception& e) {
    msg += ": threw " + std::string(e.what());
  }
  r.check(pass, msg);
}

// dims 2..4
BaseType heap_of_dim2(Rng& rng) {
  BaseType t = gen_type(rng, 4);
  while (t.dim() < 2) t = gen_type(rng, 4);
  return t;
}

ArrowChi meas(const BaseType& b) { return measure_chi(b); }

}  // namespace

std::vector<BaseType> types_dim3() { return all_types_up_to(3, 3); }

std::vector<BaseType> types_dim6() {
  std::vector<BaseType> out = all_types_up_to(4, 6);
  for (const auto& t : all_types(5))
    if (t.dim() == 5 || t.dim() == 6) out.push_back(t);
  return out;
}

Report p1_inversion(std::size_t n, std::uint64_t seed) {
  Report r;
  for (std::size_t i = 0; i < n; ++i) {
    const Comb c = gen_comb(8, 6, seed + i);
    guarded(r, to_string(c), [&] {
      return oracle::dist(eval_unitary(invert(c)), eval_unitary(c).adjoint()) <= 1e-9 && invert(invert(c)) == c;
    });
  }
  return r;
}

Report p2_heap_mediators(std::size_t n, std::uint64_t seed) {
  Report r;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(seed + i);
    const BaseType s = gen_type(rng, 4);
    // half the cases lift a random body with an explicit heap
    const ArrowA a = i % 2 ? gen_arrow_a_from(rng, s, 3, 8) : lift_a(gen_comb_from(rng, s + heap_of_dim2(rng), 4));
    // h : H' <-> H, the inverse of a random H <-> H'; retried until it moves something
    Comb h = invert(gen_comb_from(rng, a.heap, 4));
    for (int k = 0; k < 8 && a.heap.dim() > 1 && eval_unitary(h).isIdentity(); ++k)
      h = invert(gen_comb_from(rng, a.heap, 4));
    const ArrowA pre = lift_a(Comb::seq(Comb::sum(id(a.source), h), a.body));
    guarded(r, to_string(a) + " with " + to_string(h), [&] {
      return pre.heap == h.source() && iso_equal(a, pre) && iso_equal(a, lift_a(a.body));
    });
  }
  return r;
}

Report p3_garbage_mediators(std::size_t n, std::uint64_t seed) {
  Report r;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(seed + i);
    const BaseType s = i % 2 ? gen_type(rng, 3) : heap_of_dim2(rng);
    ArrowChi c = gen_arrow_chi_from(rng, s, 2, 6);
    // measuring afterwards hides a copy of the output
    if (i % 2 == 0 && c.target.dim() > 1) c = compose_chi(c, measure_chi(c.target));
    const ArrowA h = gen_arrow_a_from(rng, c.garbage, 2, 8);
    guarded(r, to_string(c) + " with " + to_string(h), [&] {
      const ArrowChi post = lift_chi(compose_a(c.inner, prod_a(id_a(c.target), h)));
      return post.garbage == h.target && chan_equal(c, post);
    });
  }
  return r;
}

Report p4_measure_injections() {
  Report r;
  const auto ts = types_dim3();
  for (const auto& b : ts)
    for (const auto& b2 : ts) {
      const std::string what = b.to_string() + ", " + b2.to_string();
      guarded(r, "inl at " + what, [&] {
        return chan_equal(compose_chi(meas(b), arr_chi(inl_a(b, b2))), compose_chi(arr_chi(inl_a(b, b2)), meas(b + b2)));
      });
      guarded(r, "inr at " + what, [&] {
        return chan_equal(compose_chi(meas(b2), arr_chi(inr_a(b, b2))), compose_chi(arr_chi(inr_a(b, b2)), meas(b + b2)));
      });
    }
  return r;
}

Report p5_classical_states() {
  Report r;
  for (const auto& b : types_dim6()) {
    const auto states = classical_states(b);
    if (states.size() != b.dim()) r.check(false, "state count at " + b.to_string());
    for (std::size_t i = 0; i < states.size(); ++i) {
      const ArrowChi s = arr_chi(states[i]);
      guarded(r, "state " + std::to_string(i) + " of " + b.to_string(), [&] {
        // each classical state is a distinct basis vector
        const bool basis = oracle::dist(iso_of(states[i]).matrix, oracle::ket(b.dim(), i)) == 0.0;
        return basis && chan_equal(compose_chi(s, meas(b)), s);
      });
    }
  }
  return r;
}

Report p6_measure_products() {
  Report r;
  const auto ts = types_dim3();
  for (const auto& b : ts)
    for (const auto& b2 : ts)
      guarded(r, b.to_string() + " * " + b2.to_string(),
              [&] { return chan_equal(meas(b * b2), prod_chi(meas(b), meas(b2))); });
  return r;
}

Report p7_measure_projections() {
  Report r;
  const auto ts = types_dim3();
  for (const auto& b : ts)
    for (const auto& b2 : ts) {
      const std::string what = b.to_string() + " * " + b2.to_string();
      guarded(r, "fst at " + what, [&] {
        return chan_equal(compose_chi(meas(b * b2), fst_chi(b, b2)), compose_chi(fst_chi(b, b2), meas(b)));
      });
      guarded(r, "snd at " + what, [&] {
        return chan_equal(compose_chi(meas(b * b2), snd_chi(b, b2)), compose_chi(snd_chi(b, b2), meas(b2)));
      });
    }
  return r;
}

Report p8_clone_associative() {
  Report r;
  for (const auto& b : types_dim6()) {
    guarded(r, b.to_string(), [&] {
      const ArrowA lhs = compose_a(compose_a(clone_a(b), prod_a(clone_a(b), id_a(b))), arr_a(assoc_times(b, b, b)));
      const ArrowA rhs = compose_a(clone_a(b), prod_a(id_a(b), clone_a(b)));
      return iso_equal(lhs, rhs);
    });
  }
  return r;
}

Report p9_measure_idempotent() {
  Report r;
  for (const auto& b : types_dim6())
    guarded(r, b.to_string(), [&] { return chan_equal(compose_chi(meas(b), meas(b)), meas(b)); });
  return r;
}

Report p10_arrow_laws(std::size_t n, std::uint64_t seed) {
  Report r;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(seed + i);
    const BaseType s = gen_type(rng, 3);
    const BaseType c = gen_type(rng, 2);
    const ArrowA f = gen_arrow_a_from(rng, s, 2, 6);
    const ArrowA g = gen_arrow_a_from(rng, f.target, 2, 6);
    const ArrowA h = gen_arrow_a_from(rng, g.target, 1, 8);
    const Comb u = gen_comb_from(rng, s, 3);
    const Comb v = gen_comb_from(rng, u.target(), 3);
    const Comb w = gen_comb_from(rng, c, 3);
    const std::string what = to_string(f);

    // allocation arrows, isometry equality
    guarded(r, "A identity " + what, [&] {
      return iso_equal(compose_a(id_a(f.source), f), f) && iso_equal(compose_a(f, id_a(f.target)), f);
    });
    guarded(r, "A associativity " + what,
            [&] { return iso_equal(compose_a(compose_a(f, g), h), compose_a(f, compose_a(g, h))); });
    guarded(r, "A arr homomorphism " + what, [&] {
      return iso_equal(arr_a(Comb::seq(u, v)), compose_a(arr_a(u), arr_a(v))) &&
             iso_equal(arr_a(Comb::prod(u, w)), prod_a(arr_a(u), arr_a(w))) &&
             iso_equal(arr_a(Comb::sum(u, w)), sum_a(arr_a(u), arr_a(w)));
    });
    guarded(r, "A first naturality " + what, [&] {
      return iso_equal(compose_a(first_a(f, c), arr_a(Comb::prod(id(f.target), w))),
                       compose_a(arr_a(Comb::prod(id(f.source), w)), first_a(f, w.target()))) &&
             iso_equal(compose_a(f, arr_a(uniti_times(f.target))),
                       compose_a(arr_a(uniti_times(f.source)), first_a(f, one)));
    });
    guarded(r, "A left naturality " + what, [&] {
      return iso_equal(compose_a(left_a(f, c), arr_a(Comb::sum(id(f.target), w))),
                       compose_a(arr_a(Comb::sum(id(f.source), w)), left_a(f, w.target()))) &&
             iso_equal(compose_a(f, inl_a(f.target, c)), compose_a(inl_a(f.source, c), left_a(f, c)));
    });

    // hiding arrows, Choi equality
    const ArrowChi fc = gen_arrow_chi_from(rng, s, 2, 6);
    const ArrowChi gc = gen_arrow_chi_from(rng, fc.target, 1, 6);
    const ArrowChi hc = gen_arrow_chi_from(rng, gc.target, 1, 6);
    const ArrowChi pf = pure_chi(u);
    const std::string whatc = to_string(fc);
    guarded(r, "chi identity " + whatc, [&] {
      return chan_equal(compose_chi(id_chi(fc.source), fc), fc) && chan_equal(compose_chi(fc, id_chi(fc.target)), fc);
    });
    guarded(r, "chi associativity " + whatc,
            [&] { return chan_equal(compose_chi(compose_chi(fc, gc), hc), compose_chi(fc, compose_chi(gc, hc))); });
    guarded(r, "chi arr homomorphism " + whatc, [&] {
      return chan_equal(arr_chi(compose_a(f, g)), compose_chi(arr_chi(f), arr_chi(g))) &&
             chan_equal(pure_chi(Comb::prod(u, w)), prod_chi(pure_chi(u), pure_chi(w))) &&
             chan_equal(pure_chi(Comb::sum(u, w)), sum_chi(pure_chi(u), pure_chi(w)));
    });
    guarded(r, "chi first naturality " + whatc, [&] {
      const ArrowChi wc = pure_chi(w);
      return chan_equal(compose_chi(first_chi(fc, c), second_chi(fc.target, wc)),
                        compose_chi(second_chi(fc.source, wc), first_chi(fc, w.target()))) &&
             chan_equal(compose_chi(pf, pure_chi(uniti_times(pf.target))),
                        compose_chi(pure_chi(uniti_times(pf.source)), first_chi(pf, one)));
    });
    guarded(r, "chi left naturality " + whatc, [&] {
      const ArrowChi inl = arr_chi(inl_a(fc.source, c));
      return chan_equal(compose_chi(fc, arr_chi(inl_a(fc.target, c))), compose_chi(inl, left_chi(fc, c))) &&
             chan_equal(compose_chi(pf, arr_chi(inl_a(pf.target, c))),
                        compose_chi(arr_chi(inl_a(pf.source, c)), left_chi(pf, c)));
    });
  }
  return r;
}

Report p11_toffoli_fullness() {
  Report r;
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= m;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> img(n);
        for (std::size_t i = 0, c = code; i < n; ++i, c /= m) img[i] = c % m;
        const FinFunction f{n, m, img};
        guarded(r, std::to_string(n) + " -> " + std::to_string(m) + " #" + std::to_string(code),
                [&] { return recompose(factor_finfun(f), n, m) == f; });
      }
    }
  return r;
}

Report p12_gate_goldens() {
  using oracle::C;
  Report r;
  const C i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  struct Case {
    const char* name;
    CMatrix want;
  };
  // three-qubit permutations from their action on bit triples (a, b, c), a major
  auto triple = [](const std::function<std::size_t(std::size_t, std::size_t, std::size_t)>& f) {
    return oracle::perm(8, [&](std::size_t j) { return f(j >> 2, (j >> 1) & 1, j & 1); });
  };
  const std::vector<Case> cases = {
      {"px", oracle::from_rows({{0, 1}, {1, 0}})},
      {"py", oracle::from_rows({{0, -i}, {i, 0}})},
      {"pz", oracle::from_rows({{1, 0}, {0, -1}})},
      {"s", oracle::from_rows({{1, 0}, {0, i}})},
      {"t", oracle::from_rows({{1, 0}, {0, C(s, s)}})},
      {"cnot", oracle::perm(4, [](std::size_t j) { return (j & 2) | ((j & 1) ^ (j >> 1)); })},
      {"toffoli", triple([](std::size_t a, std::size_t b, std::size_t c) { return a * 4 + b * 2 + (c ^ (a & b)); })},
      {"fredkin", triple([](std::size_t a, std::size_t b, std::size_t c) {
         return a ? a * 4 + c * 2 + b : b * 2 + c;
       })},
  };
  for (const auto& k : cases) {
    guarded(r, k.name, [&] {
      const Comb c = parse_comb(k.name);
      const CMatrix u = eval_unitary(c);
      if (c.classical()) {
        // exact integer permutation
        const FinBijection f = eval_bij(c);
        return u == k.want && oracle::perm(f.size, [&](std::size_t j) { return f.image[j]; }) == k.want;
      }
      return oracle::dist(u, k.want) <= 1e-12;
    });
  }
  return r;
}

}  // namespace props
