#pragma once

#include <cstddef>
#include <vector>

#include "yuppie/arrow_hide.hpp"
#include "yuppie/unitary.hpp"

namespace yuppie {

struct Isometry {
  CMatrix matrix;  // dim target x dim source
};

// A CPTP map given by Kraus operators (each out_dim x in_dim). The Choi
// matrix, sum_ij |i><j| (x) Phi(|i><j|), is computed on construction.
class Channel {
 public:
  Channel(std::size_t in_dim, std::size_t out_dim, std::vector<CMatrix> kraus);

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }
  const CMatrix& choi() const { return choi_; }

  /// max |sum K^dag K - I|.
  double trace_preservation_error() const;

 private:
  std::size_t in_dim_;
  std::size_t out_dim_;
  std::vector<CMatrix> kraus_;
  CMatrix choi_;
};

CMatrix choi_matrix(std::size_t in_dim, std::size_t out_dim, const std::vector<CMatrix>& kraus);

/// The first dim(source) columns of the body's unitary.
Isometry iso_of(const ArrowA& a);
/// Kraus operators (I (x) <g|) V for each garbage basis vector g.
Channel channel_of(const ArrowChi& c);

/// TypeMismatch if the arrow types differ.
bool iso_equal(const ArrowA& a1, const ArrowA& a2, double tol = tolerance());
bool chan_equal(const ArrowChi& c1, const ArrowChi& c2, double tol = tolerance());
bool chan_equal(const Channel& c1, const Channel& c2, double tol = tolerance());

/// BadState unless rho is an in_dim density matrix.
CMatrix apply_channel(const Channel& c, const CMatrix& rho, double tol = tolerance());

bool is_density_matrix(const CMatrix& rho, double tol = tolerance());
/// Smallest eigenvalue of a Hermitian matrix (+inf when empty).
double min_eigenvalue(const CMatrix& h);

// Process-wide record of every Channel constructed.
struct ChannelStats {
  std::size_t count = 0;
  double max_trace_error = 0.0;
  double min_choi_eigenvalue = 0.0;
};
ChannelStats channel_stats();
void reset_channel_stats();

}  // namespace yuppie
