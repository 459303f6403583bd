#pragma once

#include <Eigen/Dense>

#include <vector>

#include "clifun/multivector.hpp"

// Slow reference implementations used to check the spectral code.
namespace clifun::oracle {

// Scaling and squaring: s = ceil(log2 max(1, |A|_1)) + 3, Taylor series of
// A / 2^s until a term drops below tol * 1e-2, then s squarings.
MV taylor_exp(const MV& A, double tol = 1e-16);

// L[m][k] = coefficient of blade m in A e_k (n <= 8).
Eigen::MatrixXd regular_representation(const MV& A);

// Same scaling and squaring on a square matrix.
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& M, double tol = 1e-16);

// Monic, ascending; null-space search over vectorized powers I, M, M^2, ...
std::vector<double> matrix_minimal_polynomial(const Eigen::MatrixXd& M,
                                              double rank_tol = 1e-9);

}  // namespace clifun::oracle
