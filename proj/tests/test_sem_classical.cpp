#include <gtest/gtest.h>

#include "yuppie/classical.hpp"
#include "yuppie/error.hpp"
#include "yuppie/gen.hpp"
#include "yuppie/syntax.hpp"

using namespace yuppie;

namespace {

const BaseType q = BaseType::qbit();

std::vector<FinFunction> all_functions(std::size_t n, std::size_t m) {
  std::vector<FinFunction> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  if (m == 0 && n > 0) return out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> img(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = c % m;
      c /= m;
    }
    out.push_back(FinFunction{n, m, img});
  }
  return out;
}

}  // namespace

TEST(SemClassical, ToffoliSwapsSixSeven) {
  const FinBijection f = eval_bij(parse_comb("toffoli"));
  std::vector<std::size_t> want(8);
  for (std::size_t i = 0; i < 8; ++i) want[i] = i;
  std::swap(want[6], want[7]);
  EXPECT_EQ(f.image, want);
}

TEST(SemClassical, SwapTimesTwoTwo) {
  EXPECT_EQ(eval_bij(swap_times(q, q)).image, (std::vector<std::size_t>{0, 2, 1, 3}));
}

TEST(SemClassical, HadamardNotClassical) {
  try {
    eval_bij(Comb::hadamard());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClassical);
  }
  EXPECT_THROW(eval_bij(Comb::phase(0.0)), Error);
}

TEST(SemClassical, BijectionAlgebra) {
  const FinBijection f = make_bijection({2, 0, 1});
  EXPECT_EQ(compose(f, inverse(f)), make_bijection({0, 1, 2}));
  EXPECT_THROW(make_bijection({0, 0}), Error);
  EXPECT_THROW(make_function(0, {0}), Error);
}

TEST(SemClassical, ClassicalCombsAreBijections) {
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Comb c = gen_comb(8, 4, seed);
    if (!c.classical()) continue;
    ++seen;
    const FinBijection f = eval_bij(c);
    EXPECT_EQ(compose(f, eval_bij(invert(c))).image, make_bijection([&] {
                std::vector<std::size_t> v(f.size);
                for (std::size_t i = 0; i < f.size; ++i) v[i] = i;
                return v;
              }()).image);
  }
  EXPECT_GT(seen, 50u);
}

TEST(SemClassical, ConstantFunctionFactor) {
  const FinFunction f = make_function(1, {0, 0});
  const Factorization fac = factor_finfun(f);
  EXPECT_EQ(fac.heap_size, 0u);
  EXPECT_EQ(fac.garbage_size, 2u);
  // g restricted to the domain, projected to the output, is f
  for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ(fac.g.image[x] / fac.garbage_size, f.image[x]);
  EXPECT_EQ(recompose(fac, 2, 1), f);
}

TEST(SemClassical, IdentityFactor) {
  const FinFunction f = make_function(2, {0, 1});
  EXPECT_EQ(recompose(factor_finfun(f), 2, 2), f);
}

TEST(SemClassical, AllTwoToThree) {
  const auto fs = all_functions(2, 3);
  ASSERT_EQ(fs.size(), 9u);
  for (const auto& f : fs) {
    const Factorization fac = factor_finfun(f);
    // n + heap = m * garbage
    EXPECT_EQ(f.domain + fac.heap_size, f.codomain * fac.garbage_size);
    EXPECT_EQ(recompose(fac, f.domain, f.codomain), f);
  }
}

TEST(SemClassical, ExhaustiveUpToFour) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m)
      for (const auto& f : all_functions(n, m)) {
        ++count;
        const Factorization fac = factor_finfun(f);
        ASSERT_EQ(fac.g.size, f.domain + fac.heap_size);
        ASSERT_EQ(recompose(fac, f.domain, f.codomain), f);
      }
  // sum over n, m <= 4 of m^n, with 0^0 = 1
  std::size_t want = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    std::size_t p = 1;
    for (std::size_t n = 0; n <= 4; ++n, p *= m) want += p;
  }
  EXPECT_EQ(count, want);
}
