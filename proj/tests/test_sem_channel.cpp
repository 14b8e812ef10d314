#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "yuppie/channel.hpp"
#include "yuppie/error.hpp"
#include "yuppie/gen.hpp"
#include "yuppie/syntax.hpp"

using namespace yuppie;

namespace {

const BaseType one = BaseType::one();
const BaseType zero = BaseType::zero();
const BaseType q = BaseType::qbit();

CMatrix random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = oracle::C(g(rng), g(rng));
  CMatrix r = a * a.adjoint();
  return r / r.trace().real();
}

}  // namespace

TEST(SemChannel, IsoGoldens) {
  EXPECT_LE(oracle::dist(iso_of(arr_a(Comb::hadamard())).matrix, oracle::hadamard()), 1e-12);
  EXPECT_EQ(iso_of(inl_a(one, one)).matrix, oracle::from_rows({{1}, {0}}));
  EXPECT_EQ(iso_of(clone_a(q)).matrix, oracle::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
}

TEST(SemChannel, ChannelGoldens) {
  const CMatrix plus = CMatrix::Constant(2, 2, 0.5);
  EXPECT_LE(oracle::dist(apply_channel(channel_of(measure_chi(q)), plus), oracle::from_rows({{0.5, 0}, {0, 0.5}})),
            1e-12);
  const Comb u = parse_comb("(hadamard * id) ; cnot");
  const CMatrix um = eval_unitary(u);
  std::mt19937_64 rng(3);
  const CMatrix rho = random_state(4, rng);
  EXPECT_LE(oracle::dist(apply_channel(channel_of(pure_chi(u)), rho), um * rho * um.adjoint()), 1e-12);
  const Channel d = channel_of(discard_chi(q));
  ASSERT_EQ(d.kraus().size(), 2u);
  EXPECT_EQ(d.kraus()[0], oracle::from_rows({{1, 0}}));
  EXPECT_EQ(d.kraus()[1], oracle::from_rows({{0, 1}}));
}

TEST(SemChannel, StinespringOracle) {
  std::mt19937_64 rng(11);
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng g(seed);
    const BaseType s = gen_type(g, 3);
    if (s.dim() == 0) continue;
    const ArrowA v = gen_arrow_a_from(g, s, 3, 8);
    if (!v.target.is_prod() || !v.target.right().inhabited()) continue;
    ++checked;
    const ArrowChi c = lift_chi(v);
    const std::size_t out = c.target.dim(), gd = c.garbage.dim();
    const CMatrix rho = random_state(s.dim(), rng);
    const CMatrix want = oracle::stinespring(iso_of(v).matrix, out, gd, rho);
    EXPECT_LE(oracle::dist(apply_channel(channel_of(c), rho), want), 1e-9) << to_string(c);
  }
  EXPECT_GT(checked, 10u);
}

TEST(SemChannel, ChoiMatchesDefinition) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ArrowChi c = gen_arrow_chi(4, 2, seed);
    const Channel ch = channel_of(c);
    const auto& ks = ch.kraus();
    const CMatrix want = oracle::choi(ch.in_dim(), ch.out_dim(), [&](const CMatrix& e) {
      CMatrix out = CMatrix::Zero(ch.out_dim(), ch.out_dim());
      for (const auto& k : ks) out += k * e * k.adjoint();
      return out;
    });
    EXPECT_LE(oracle::dist(ch.choi(), want), 1e-12);
    EXPECT_GE(min_eigenvalue(ch.choi()), -1e-9);
  }
}

TEST(SemChannel, Equalities) {
  const ArrowChi m = measure_chi(q);
  EXPECT_TRUE(chan_equal(compose_chi(m, m), m));
  EXPECT_TRUE(iso_equal(inl_a(q, q), compose_a(arr_a(uniti_plus(q)), right_a(q, alloc_a(q)))));
  EXPECT_FALSE(chan_equal(pure_chi(parse_comb("px")), m));
  EXPECT_THROW(chan_equal(m, measure_chi(q * q)), Error);
  EXPECT_THROW(iso_equal(inl_a(q, q), clone_a(q)), Error);
}

TEST(SemChannel, OutputsAreStates) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ArrowChi c = gen_arrow_chi(6, 3, seed);
    if (c.source.dim() == 0) continue;
    const CMatrix out = apply_channel(channel_of(c), random_state(c.source.dim(), rng));
    EXPECT_TRUE(is_density_matrix(out)) << to_string(c);
  }
}

TEST(SemChannel, BadState) {
  const Channel m = channel_of(measure_chi(q));
  auto kind = [&](const CMatrix& r) {
    try {
      apply_channel(m, r);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind(CMatrix::Identity(3, 3) / 3.0), ErrorKind::BadState);
  EXPECT_EQ(kind(oracle::from_rows({{1.5, 0}, {0, -0.5}})), ErrorKind::BadState);
  EXPECT_EQ(kind(oracle::from_rows({{1, 0}, {0, 1}})), ErrorKind::BadState);
  EXPECT_EQ(kind(oracle::from_rows({{0.5, 0.5}, {0, 0.5}})), ErrorKind::BadState);
}

TEST(SemChannel, StatsRecorded) {
  const auto before = channel_stats().count;
  channel_of(measure_chi(q));
  EXPECT_EQ(channel_stats().count, before + 1);
}
