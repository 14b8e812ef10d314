#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "yuppie/comb.hpp"

namespace yuppie {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Equality tolerance: 1e-9 unless YUPPIE_TOL is set to a positive number.
double tolerance();

/// Basis permutation of a structural primitive: source index j goes to
/// target index map[j]. Sums list the left summand first, products are
/// left-factor major.
std::vector<std::size_t> index_map(Prim p, std::span<const BaseType> params);

/// dim(target) x dim(source) unitary denoted by `c`.
CMatrix eval_unitary(const Comb& c);

/// Column j has its single 1 in row image[j].
CMatrix permutation_matrix(const std::vector<std::size_t>& image, std::size_t rows);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/// Max-entry distance; infinity when the shapes differ.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = tolerance());
bool is_isometry(const CMatrix& v, double tol = tolerance());
bool is_unitary(const CMatrix& u, double tol = tolerance());

}  // namespace yuppie
