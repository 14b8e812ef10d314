#include <gtest/gtest.h>

#include <set>

#include "props.hpp"
#include "yuppie/channel.hpp"
#include "yuppie/gen.hpp"
#include "yuppie/syntax.hpp"

using namespace yuppie;

namespace {

void expect_ok(const props::Report& r) {
  EXPECT_TRUE(r.ok()) << r.failures << "/" << r.cases << " failed; first: " << r.first_failure;
}

void count_comb(const Comb& c, std::set<std::string>& seen) {
  switch (c.kind()) {
    case Comb::Kind::Prim:
      seen.insert(std::string(prim_name(c.prim())));
      return;
    case Comb::Kind::Phase:
      seen.insert("phase");
      return;
    case Comb::Kind::Hadamard:
      seen.insert("hadamard");
      return;
    case Comb::Kind::Seq:
      seen.insert(";");
      break;
    case Comb::Kind::Sum:
      seen.insert("+");
      break;
    case Comb::Kind::Prod:
      seen.insert("*");
      break;
  }
  count_comb(c.left(), seen);
  count_comb(c.right(), seen);
}

bool has_zero(const BaseType& t) {
  if (t.kind() == BaseType::Kind::Zero) return true;
  if (t.is_sum() || t.is_prod()) return has_zero(t.left()) || has_zero(t.right());
  return false;
}

}  // namespace

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_comb(8, 4, 42), gen_comb(8, 4, 42));
  EXPECT_EQ(to_string(gen_arrow_a(8, 3, 42)), to_string(gen_arrow_a(8, 3, 42)));
  EXPECT_EQ(to_string(gen_arrow_chi(6, 3, 42)), to_string(gen_arrow_chi(6, 3, 42)));
}

TEST(Generators, SeedZeroDepthOneIsSmall) {
  const Comb c = gen_comb(8, 1, 0);
  EXPECT_LE(c.source().dim(), 8u);
  EXPECT_LE(c.size(), 3u);
}

TEST(Generators, WellTypedAndBounded) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Comb c = gen_comb(8, 6, seed);
    EXPECT_LE(c.source().dim(), 8u);
    // re-check through the elaborator from the printed form
    EXPECT_EQ(typecheck(to_term(c)), (CombType{c.source(), c.target()}));
    const ArrowA a = gen_arrow_a(8, 4, seed);
    EXPECT_EQ(a.body.source(), a.source + a.heap);
    EXPECT_LE(a.target.dim(), 8u);
    const ArrowChi x = gen_arrow_chi(8, 4, seed);
    EXPECT_EQ(x.inner.target, x.target * x.garbage);
  }
}

TEST(Generators, CoverEveryConstructor) {
  std::set<std::string> seen;
  std::size_t zero_types = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Comb c = gen_comb(8, 6, seed);
    count_comb(c, seen);
    if (has_zero(c.source())) ++zero_types;
  }
  std::set<std::string> want{"phase", "hadamard", ";", "+", "*"};
  for (std::size_t p = 0; p < kPrimCount; ++p) want.insert(std::string(prim_name(static_cast<Prim>(p))));
  for (const auto& w : want) EXPECT_TRUE(seen.count(w)) << "never generated: " << w;
  EXPECT_GT(zero_types, 0u);
}

TEST(Generators, ArrowCoverage) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::string a = to_string(gen_arrow_a(8, 4, seed));
    const std::string x = to_string(gen_arrow_chi(6, 3, seed));
    seen.insert(a.substr(0, a.find('(')));
    seen.insert(x.substr(0, x.find('(')));
  }
  EXPECT_TRUE(seen.count("lift"));
}

TEST(Props, P1Inversion) { expect_ok(props::p1_inversion(500, 1000)); }
TEST(Props, P2HeapMediators) { expect_ok(props::p2_heap_mediators(500, 2000)); }
TEST(Props, P3GarbageMediators) { expect_ok(props::p3_garbage_mediators(500, 3000)); }
TEST(Props, P4MeasureInjections) { expect_ok(props::p4_measure_injections()); }
TEST(Props, P5ClassicalStates) { expect_ok(props::p5_classical_states()); }
TEST(Props, P6MeasureProducts) { expect_ok(props::p6_measure_products()); }
TEST(Props, P7MeasureProjections) { expect_ok(props::p7_measure_projections()); }
TEST(Props, P8CloneAssociative) { expect_ok(props::p8_clone_associative()); }
TEST(Props, P9MeasureIdempotent) { expect_ok(props::p9_measure_idempotent()); }
TEST(Props, P10ArrowLaws) { expect_ok(props::p10_arrow_laws(150, 4000)); }
TEST(Props, P11ToffoliFullness) { expect_ok(props::p11_toffoli_fullness()); }
TEST(Props, P12GateGoldens) { expect_ok(props::p12_gate_goldens()); }

TEST(Props, MediatorOnOutputIsDetected) {
  const BaseType q = BaseType::qbit();
  const ArrowChi m = measure_chi(q);
  const ArrowChi wrong = lift_chi(compose_a(m.inner, prod_a(arr_a(parse_comb("px")), id_a(m.garbage))));
  EXPECT_FALSE(chan_equal(m, wrong));
  const ArrowA c = clone_a(q);
  const ArrowA shifted = lift_a(Comb::seq(Comb::sum(Comb::hadamard(), id(c.heap)), c.body));
  EXPECT_FALSE(iso_equal(c, shifted));
}
