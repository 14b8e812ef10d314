#include "yuppie/classical.hpp"

#include "yuppie/error.hpp"
#include "yuppie/unitary.hpp"

namespace yuppie {

FinBijection make_bijection(std::vector<std::size_t> image) {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t v : image) {
    if (v >= image.size() || seen[v]) fail(ErrorKind::IllTyped, "image is not a permutation");
    seen[v] = true;
  }
  return FinBijection{image.size(), std::move(image)};
}

FinFunction make_function(std::size_t codomain, std::vector<std::size_t> image) {
  if (codomain == 0 && !image.empty()) {
    fail(ErrorKind::EmptyCodomain, "no function from a nonempty set into the empty set");
  }
  for (std::size_t v : image) {
    if (v >= codomain) fail(ErrorKind::IllTyped, "function value outside the codomain");
  }
  return FinFunction{image.size(), codomain, std::move(image)};
}

FinBijection inverse(const FinBijection& f) {
  FinBijection out{f.size, std::vector<std::size_t>(f.size)};
  for (std::size_t i = 0; i < f.size; ++i) out.image[f.image[i]] = i;
  return out;
}

FinBijection compose(const FinBijection& f, const FinBijection& g) {
  if (f.size != g.size) fail(ErrorKind::TypeMismatch, "bijections of different sizes");
  FinBijection out{f.size, std::vector<std::size_t>(f.size)};
  for (std::size_t i = 0; i < f.size; ++i) out.image[i] = g.image[f.image[i]];
  return out;
}

namespace {

std::vector<std::size_t> perm(const Comb& c) {
  switch (c.kind()) {
    case Comb::Kind::Prim:
      return index_map(c.prim(), c.params());
    case Comb::Kind::Seq: {
      auto a = perm(c.left());
      const auto b = perm(c.right());
      for (auto& v : a) v = b[v];
      return a;
    }
    case Comb::Kind::Sum: {
      auto a = perm(c.left());
      const auto b = perm(c.right());
      const std::size_t off = a.size();
      for (auto v : b) a.push_back(off + v);
      return a;
    }
    case Comb::Kind::Prod: {
      const auto a = perm(c.left());
      const auto b = perm(c.right());
      std::vector<std::size_t> out;
      out.reserve(a.size() * b.size());
      for (auto x : a)
        for (auto y : b) out.push_back(x * b.size() + y);
      return out;
    }
    default:
      fail(ErrorKind::NotClassical, "phase and hadamard have no classical semantics");
  }
}

}  // namespace

FinBijection eval_bij(const Comb& c) {
  if (!c.classical()) fail(ErrorKind::NotClassical, "combinator uses phase or hadamard");
  auto image = perm(c);
  return FinBijection{image.size(), std::move(image)};
}

Factorization factor_finfun(const FinFunction& f) {
  const std::size_t n = f.domain, m = f.codomain;
  if (n > 0 && m == 0) fail(ErrorKind::EmptyCodomain, "no function from a nonempty set into the empty set");
  Factorization out{n * m - n, n, FinBijection{n * m, std::vector<std::size_t>(n * m)}};
  // Source index s of domain + heap, read as a pair (x, y) of domain x codomain:
  // the domain block is y = 0, the heap lists the pairs with y >= 1 in order.
  for (std::size_t s = 0; s < n * m; ++s) {
    std::size_t x, y;
    if (s < n) {
      x = s;
      y = 0;
    } else {
      x = (s - n) / (m - 1);
      y = 1 + (s - n) % (m - 1);
    }
    out.g.image[s] = ((y + f.image[x]) % m) * n + x;
  }
  return out;
}

FinFunction recompose(const Factorization& fac, std::size_t domain, std::size_t codomain) {
  FinFunction out{domain, codomain, std::vector<std::size_t>(domain)};
  for (std::size_t x = 0; x < domain; ++x) out.image[x] = fac.g.image[x] / fac.garbage_size;
  return out;
}

}  // namespace yuppie
