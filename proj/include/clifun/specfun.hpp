#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifun/charpoly.hpp"
#include "clifun/functions.hpp"
#include "clifun/polyroots.hpp"

namespace clifun {

// Monic minimal polynomial, ascending coefficients (coeffs.back() == 1).
struct MinimalPoly {
  std::vector<double> coeffs;
  // Smallest singular value (relative) of the first dependent power list.
  double dependence_measure = 0.0;
  // Smallest singular value (relative) of the last independent power list.
  double independence_measure = 1.0;
  bool rank_ambiguous = false;
  std::string warning;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

struct MinimalPolyOptions {
  // Relative singular value below which the power list counts as dependent.
  double rank_tol = 1e-9;
  // Singular values within this factor of rank_tol flag the rank as ambiguous.
  double ambiguity_band = 100.0;
};

// Appends coefficient vectors of 1, A, A^2, ... until they become linearly
// dependent; the dependence weights give the monic polynomial.
MinimalPoly minimal_polynomial(const MV& A, const MinimalPolyOptions& opts = {});

struct Diagonalizability {
  bool diagonalizable;
  MinimalPoly minimal;
  RootSet minimal_roots;  // clustered
  // Largest |remainder| of chi / mu, relative to the coefficient scale.
  double divisibility_residual;
};

Diagonalizability is_diagonalizable(const MV& A,
                                    const MinimalPolyOptions& opts = {});

struct RegularizationConfig {
  // Strictly decreasing, positive.
  std::vector<double> eps_sequence{1e-3, 5e-4, 2.5e-4};
  // Polynomial order of the extrapolation in eps; at most eps_sequence.size() - 1.
  int extrapolation_order = 2;
  // Fixed perturbation blade; empty selects the first blade in grade-lex order
  // that does not commute with A.
  std::optional<Blade> blade;
  // Allowed gap between the full-order and one-order-lower extrapolants,
  // relative to 1 + |result|_inf.
  double agreement_tol = 1e-4;

  void validate() const;
};

enum class Method { automatic, coordinate, basis_free };

enum class EvalPath {
  distinct,     // simple characteristic roots, per-root sum
  projector,    // repeated roots, square-free minimal polynomial
  regularized,  // defective: eps-perturbation and extrapolation
};

std::string to_string(EvalPath p);

struct SpectralOptions {
  Method method = Method::automatic;
  double imag_tol = 1e-10;
  // < 0 selects 1e-6 * (1 + max |root|).
  double cluster_tol = -1.0;
  // Return complex output instead of raising on a nonzero imaginary part.
  bool complex_ok = false;
  RegularizationConfig regularization;
  MinimalPolyOptions minimal;
};

struct SpectralResult {
  MV value;           // real part
  CMV complex_value;  // before realification
  double imag_residual = 0.0;
  EvalPath path = EvalPath::distinct;
  CharPoly charpoly;
  RootSet roots;  // clustered characteristic roots
  std::optional<MinimalPoly> minimal;
  std::vector<std::string> notes;
};

struct Realified {
  MV value;
  double residual;  // max |Im|
};

// Drops the imaginary part; raises RealificationError when
// max |Im| >= imag_tol * (1 + |Re Z|_inf).
Realified realify(const CMV& Z, double imag_tol);

// Per-root weight 1 / chi'(lambda).
cplx spectral_weight(const CharPoly& chi, cplx lambda);

// Throws DegenerateSpectrumError unless the characteristic roots are simple.
MV exp_coordinate(const MV& A, const SpectralOptions& opts = {});
MV exp_basis_free(const MV& A, const SpectralOptions& opts = {});

// f(A) through the spectrum, dispatching between the distinct-root sum, the
// projector form and eps-regularization.
SpectralResult apply_function(const MV& A, const ScalarFunction& f,
                              const SpectralOptions& opts = {});

// Defective case: evaluates f at A + eps e_k for each eps and extrapolates to
// eps -> 0. Diagonalizable input is delegated to the direct paths.
SpectralResult regularized_apply(const MV& A, const ScalarFunction& f,
                                 const SpectralOptions& opts = {});

struct SpectralIdentities {
  CMV weighted_sum;   // sum_i beta(l_i) B(l_i), expected 0
  CMV eigen_sum;      // sum_i l_i (1/d + beta(l_i) B(l_i)), expected A
};

SpectralIdentities spectral_identity_check(const MV& A);

// Building blocks exposed for tests and diagnostics.

// C(1)(e_J^dagger A^k) = d <e_J^dagger A^k>_0 for every blade J and
// k = 1..kmax; result[k-1][mask].
std::vector<std::vector<double>> dagger_trace_table(const MV& A, int kmax);

}  // namespace clifun
