#include "yuppie/unitary.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <variant>

#include "yuppie/error.hpp"

namespace yuppie {

double tolerance() {
  static const double tol = [] {
    if (const char* s = std::getenv("YUPPIE_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(s, &end);
      if (end != s && v > 0 && std::isfinite(v)) return v;
    }
    return 1e-9;
  }();
  return tol;
}

std::vector<std::size_t> index_map(Prim p, std::span<const BaseType> t) {
  if (t.size() != prim_arity(p)) fail(ErrorKind::ArityError, "wrong number of type parameters");
  std::vector<std::size_t> m;
  auto identity = [&](std::size_t n) {
    m.resize(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
  };
  switch (p) {
    case Prim::Id:
    case Prim::UnitPlus:
    case Prim::UnitiPlus:
    case Prim::UnitTimes:
    case Prim::UnitiTimes:
      identity(t[0].dim());
      break;
    case Prim::AssocPlus:
    case Prim::AssociPlus:
      identity(t[0].dim() + t[1].dim() + t[2].dim());
      break;
    case Prim::AssocTimes:
    case Prim::AssociTimes:
      identity(t[0].dim() * t[1].dim() * t[2].dim());
      break;
    case Prim::SwapPlus: {
      const std::size_t da = t[0].dim(), db = t[1].dim();
      m.resize(da + db);
      for (std::size_t j = 0; j < da + db; ++j) m[j] = j < da ? db + j : j - da;
      break;
    }
    case Prim::SwapTimes: {
      const std::size_t da = t[0].dim(), db = t[1].dim();
      m.resize(da * db);
      for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y) m[x * db + y] = y * da + x;
      break;
    }
    case Prim::Distrib:
    case Prim::Distribi: {
      const std::size_t da = t[0].dim(), db = t[1].dim(), dc = t[2].dim();
      m.resize(da * (db + dc));
      for (std::size_t x = 0; x < da; ++x) {
        for (std::size_t k = 0; k < db + dc; ++k) {
          const std::size_t to = k < db ? x * db + k : da * db + x * dc + (k - db);
          if (p == Prim::Distrib) {
            m[x * (db + dc) + k] = to;
          } else {
            m[to] = x * (db + dc) + k;
          }
        }
      }
      break;
    }
    case Prim::Distribo:
    case Prim::Distriboi:
      break;
  }
  return m;
}

namespace {

// Generalized permutation: column j is coef[j] * e_{image[j]}.
struct Monomial {
  std::vector<std::size_t> image;
  std::vector<Complex> coef;
};

using Denotation = std::variant<Monomial, CMatrix>;

CMatrix to_dense(const Denotation& d) {
  if (const auto* m = std::get_if<CMatrix>(&d)) return *m;
  const auto& mono = std::get<Monomial>(d);
  const auto n = static_cast<Eigen::Index>(mono.image.size());
  CMatrix out = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) out(static_cast<Eigen::Index>(mono.image[j]), j) = mono.coef[j];
  return out;
}

Denotation eval(const Comb& c) {
  switch (c.kind()) {
    case Comb::Kind::Prim: {
      Monomial m{index_map(c.prim(), c.params()), {}};
      m.coef.assign(m.image.size(), Complex(1.0, 0.0));
      return m;
    }
    case Comb::Kind::Phase:
      return Monomial{{0}, {c.phase_factor()}};
    case Comb::Kind::Hadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      CMatrix h(2, 2);
      h << r, r, r, -r;
      return h;
    }
    case Comb::Kind::Seq: {
      Denotation a = eval(c.left());
      Denotation b = eval(c.right());
      if (std::holds_alternative<Monomial>(a) && std::holds_alternative<Monomial>(b)) {
        const auto& ma = std::get<Monomial>(a);
        const auto& mb = std::get<Monomial>(b);
        Monomial out{std::vector<std::size_t>(ma.image.size()), std::vector<Complex>(ma.image.size())};
        for (std::size_t j = 0; j < ma.image.size(); ++j) {
          out.image[j] = mb.image[ma.image[j]];
          out.coef[j] = mb.coef[ma.image[j]] * ma.coef[j];
        }
        return out;
      }
      return CMatrix(to_dense(b) * to_dense(a));
    }
    case Comb::Kind::Sum: {
      Denotation a = eval(c.left());
      Denotation b = eval(c.right());
      if (std::holds_alternative<Monomial>(a) && std::holds_alternative<Monomial>(b)) {
        auto out = std::get<Monomial>(a);
        const auto& mb = std::get<Monomial>(b);
        const std::size_t off = out.image.size();
        for (std::size_t j = 0; j < mb.image.size(); ++j) {
          out.image.push_back(off + mb.image[j]);
          out.coef.push_back(mb.coef[j]);
        }
        return out;
      }
      return direct_sum(to_dense(a), to_dense(b));
    }
    case Comb::Kind::Prod: {
      Denotation a = eval(c.left());
      Denotation b = eval(c.right());
      if (std::holds_alternative<Monomial>(a) && std::holds_alternative<Monomial>(b)) {
        const auto& ma = std::get<Monomial>(a);
        const auto& mb = std::get<Monomial>(b);
        const std::size_t nb = mb.image.size();
        Monomial out;
        out.image.reserve(ma.image.size() * nb);
        for (std::size_t i = 0; i < ma.image.size(); ++i) {
          for (std::size_t j = 0; j < nb; ++j) {
            out.image.push_back(ma.image[i] * nb + mb.image[j]);
            out.coef.push_back(ma.coef[i] * mb.coef[j]);
          }
        }
        return out;
      }
      return kron(to_dense(a), to_dense(b));
    }
  }
  fail(ErrorKind::IllTyped, "unknown combinator");
}

}  // namespace

CMatrix eval_unitary(const Comb& c) {
  CMatrix u = to_dense(eval(c));
  if (static_cast<std::size_t>(u.rows()) != c.target().dim() ||
      static_cast<std::size_t>(u.cols()) != c.source().dim()) {
    fail(ErrorKind::IllTyped, "denotation does not match the combinator's type");
  }
  return u;
}

CMatrix permutation_matrix(const std::vector<std::size_t>& image, std::size_t rows) {
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(image.size()));
  for (std::size_t j = 0; j < image.size(); ++j) {
    out(static_cast<Eigen::Index>(image[j]), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) { return max_abs_diff(a, b) <= tol; }

bool is_isometry(const CMatrix& v, double tol) {
  return approx_equal(v.adjoint() * v, CMatrix::Identity(v.cols(), v.cols()), tol);
}

bool is_unitary(const CMatrix& u, double tol) {
  return u.rows() == u.cols() && is_isometry(u, tol) &&
         approx_equal(u * u.adjoint(), CMatrix::Identity(u.rows(), u.rows()), tol);
}

}  // namespace yuppie
