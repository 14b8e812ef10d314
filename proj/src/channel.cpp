#include "yuppie/channel.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "yuppie/error.hpp"

namespace yuppie {

namespace {

std::mutex stats_mutex;
ChannelStats stats;

void record(const Channel& c) {
  const double tp = c.trace_preservation_error();
  const double ev = std::min(0.0, min_eigenvalue(c.choi()));
  std::lock_guard<std::mutex> lock(stats_mutex);
  ++stats.count;
  stats.max_trace_error = std::max(stats.max_trace_error, tp);
  stats.min_choi_eigenvalue = std::min(stats.min_choi_eigenvalue, ev);
}

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

CMatrix choi_matrix(std::size_t in_dim, std::size_t out_dim, const std::vector<CMatrix>& kraus) {
  // Column-major storage makes K's data the vector with entry i*out + o = K(o, i).
  const Eigen::Index n = idx(in_dim * out_dim);
  CMatrix stacked(n, idx(kraus.size()));
  for (std::size_t g = 0; g < kraus.size(); ++g) {
    stacked.col(idx(g)) = Eigen::Map<const Eigen::VectorXcd>(kraus[g].data(), n);
  }
  return stacked * stacked.adjoint();
}

Channel::Channel(std::size_t in_dim, std::size_t out_dim, std::vector<CMatrix> kraus)
    : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)) {
  for (const auto& k : kraus_) {
    if (k.rows() != idx(out_dim) || k.cols() != idx(in_dim)) {
      fail(ErrorKind::IllTyped, "Kraus operator has the wrong shape");
    }
  }
  choi_ = choi_matrix(in_dim_, out_dim_, kraus_);
  record(*this);
}

double Channel::trace_preservation_error() const {
  CMatrix sum = CMatrix::Zero(idx(in_dim_), idx(in_dim_));
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return max_abs_diff(sum, CMatrix::Identity(idx(in_dim_), idx(in_dim_)));
}

Isometry iso_of(const ArrowA& a) {
  return Isometry{eval_unitary(a.body).leftCols(idx(a.source.dim()))};
}

Channel channel_of(const ArrowChi& c) {
  const CMatrix v = iso_of(c.inner).matrix;
  const std::size_t db = c.target.dim();
  const std::size_t dg = c.garbage.dim();
  std::vector<CMatrix> kraus;
  kraus.reserve(dg);
  for (std::size_t g = 0; g < dg; ++g) {
    CMatrix k(idx(db), v.cols());
    for (std::size_t b = 0; b < db; ++b) k.row(idx(b)) = v.row(idx(b * dg + g));
    kraus.push_back(std::move(k));
  }
  return Channel(c.source.dim(), db, std::move(kraus));
}

bool iso_equal(const ArrowA& a1, const ArrowA& a2, double tol) {
  if (!(a1.source == a2.source) || !(a1.target == a2.target)) {
    fail(ErrorKind::TypeMismatch, "arrows of different types");
  }
  return approx_equal(iso_of(a1).matrix, iso_of(a2).matrix, tol);
}

bool chan_equal(const ArrowChi& c1, const ArrowChi& c2, double tol) {
  if (!(c1.source == c2.source) || !(c1.target == c2.target)) {
    fail(ErrorKind::TypeMismatch, "arrows of different types");
  }
  return chan_equal(channel_of(c1), channel_of(c2), tol);
}

bool chan_equal(const Channel& c1, const Channel& c2, double tol) {
  if (c1.in_dim() != c2.in_dim() || c1.out_dim() != c2.out_dim()) {
    fail(ErrorKind::TypeMismatch, "channels of different dimensions");
  }
  return approx_equal(c1.choi(), c2.choi(), tol);
}

double min_eigenvalue(const CMatrix& h) {
  if (h.size() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_density_matrix(const CMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) return false;
  if (!approx_equal(rho, rho.adjoint(), tol)) return false;
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol) return false;
  return min_eigenvalue(rho) >= -tol;
}

CMatrix apply_channel(const Channel& c, const CMatrix& rho, double tol) {
  if (rho.rows() != idx(c.in_dim()) || rho.cols() != idx(c.in_dim())) {
    fail(ErrorKind::BadState, "state must be " + std::to_string(c.in_dim()) + "x" +
                                  std::to_string(c.in_dim()));
  }
  if (!is_density_matrix(rho, tol)) {
    fail(ErrorKind::BadState, "state is not a density matrix (Hermitian, PSD, unit trace)");
  }
  CMatrix out = CMatrix::Zero(idx(c.out_dim()), idx(c.out_dim()));
  for (const auto& k : c.kraus()) out += k * rho * k.adjoint();
  return out;
}

ChannelStats channel_stats() {
  std::lock_guard<std::mutex> lock(stats_mutex);
  return stats;
}

void reset_channel_stats() {
  std::lock_guard<std::mutex> lock(stats_mutex);
  stats = ChannelStats{};
}

}  // namespace yuppie
