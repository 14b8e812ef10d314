#pragma once

#include <cstddef>
#include <vector>

#include "yuppie/comb.hpp"

namespace yuppie {

struct FinBijection {
  std::size_t size = 0;
  std::vector<std::size_t> image;

  friend bool operator==(const FinBijection&, const FinBijection&) = default;
};

struct FinFunction {
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::vector<std::size_t> image;

  friend bool operator==(const FinFunction&, const FinFunction&) = default;
};

/// Validates that `image` is a permutation of 0..n-1.
FinBijection make_bijection(std::vector<std::size_t> image);
/// Validates every entry is below `codomain`; EmptyCodomain when a nonempty
/// domain maps into the empty set.
FinFunction make_function(std::size_t codomain, std::vector<std::size_t> image);

FinBijection inverse(const FinBijection& f);
/// g after f.
FinBijection compose(const FinBijection& f, const FinBijection& g);

/// Permutation of a classical combinator. NotClassical if `c` has a phase or
/// hadamard.
FinBijection eval_bij(const Comb& c);

// f = proj . g . inj, where inj embeds the domain as the first block of
// domain + heap, and proj reads the codomain factor of codomain x garbage.
struct Factorization {
  std::size_t heap_size = 0;
  std::size_t garbage_size = 0;
  FinBijection g;
};

Factorization factor_finfun(const FinFunction& f);
/// Rebuilds the function x -> g(x) div garbage_size.
FinFunction recompose(const Factorization& fac, std::size_t domain, std::size_t codomain);

}  // namespace yuppie
