#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "clifun/specfun.hpp"

namespace clifun {

namespace {

double relative_smallest_singular_value(const Eigen::MatrixXd& M) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0.0;
  return s(s.size() - 1) / s(0);
}

}  // namespace

MinimalPoly minimal_polynomial(const MV& A, const MinimalPolyOptions& opts) {
  const Signature& sig = A.signature();
  const Eigen::Index rows = static_cast<Eigen::Index>(sig.size());
  const int max_degree = sig.d();

  MinimalPoly mu;
  std::vector<double> norms{1.0};
  Eigen::MatrixXd columns(rows, 1);
  columns.setZero();
  columns(0, 0) = 1.0;

  MV power = MV::scalar(sig, 1.0);
  for (int m = 1; m <= max_degree; ++m) {
    power = A * power;
    const Eigen::Map<const Eigen::VectorXd> v(power.coefficients().data(), rows);
    const double norm = v.norm();
    if (norm == 0.0) {
      // A^m = 0.
      mu.coeffs.assign(m + 1, 0.0);
      mu.coeffs[m] = 1.0;
      mu.dependence_measure = 0.0;
      return mu;
    }
    columns.conservativeResize(Eigen::NoChange, m + 1);
    columns.col(m) = v / norm;
    norms.push_back(norm);

    const double measure = relative_smallest_singular_value(columns);
    const bool dependent = measure < opts.rank_tol;
    if (!dependent && m < max_degree) {
      mu.independence_measure = measure;
      continue;
    }

    mu.dependence_measure = measure;
    if (!dependent)
      mu.warning = "power list still independent at degree d; using degree d";

    // Solve sum_{k<m} c_k col_k = -col_m, then undo the column scaling.
    const Eigen::VectorXd c =
        columns.leftCols(m).colPivHouseholderQr().solve(-columns.col(m));
    mu.coeffs.resize(m + 1);
    for (int k = 0; k < m; ++k) mu.coeffs[k] = c(k) * norms[m] / norms[k];
    mu.coeffs[m] = 1.0;

    const double lo = opts.rank_tol / opts.ambiguity_band;
    const double hi = opts.rank_tol * opts.ambiguity_band;
    if ((dependent && measure > lo) || mu.independence_measure < hi) {
      mu.rank_ambiguous = true;
      if (mu.warning.empty())
        mu.warning = "numerical rank ambiguous: singular values " +
                     std::to_string(mu.independence_measure) + " and " +
                     std::to_string(measure) + " straddle the tolerance band";
    }
    return mu;
  }
  return mu;  // unreachable: max_degree >= 2
}

Diagonalizability is_diagonalizable(const MV& A, const MinimalPolyOptions& opts) {
  Diagonalizability out{false, minimal_polynomial(A, opts), {}, 0.0};
  RootSet rs = find_polynomial_roots(out.minimal.coeffs);
  out.minimal_roots = cluster_roots(std::move(rs));
  out.diagonalizable =
      std::all_of(out.minimal_roots.clusters.begin(),
                  out.minimal_roots.clusters.end(),
                  [](const RootCluster& c) { return c.multiplicity == 1; });

  // chi is -monic; divide the monic form by mu.
  const CharPoly chi = faddeev_leverrier(A);
  std::vector<double> monic = chi.ascending();
  double scale = 1.0;
  for (double& v : monic) {
    v = -v;
    scale = std::max(scale, std::abs(v));
  }
  const auto division = divide_polynomials(monic, out.minimal.coeffs);
  double residual = 0.0;
  for (double r : division.remainder) residual = std::max(residual, std::abs(r));
  out.divisibility_residual = residual / scale;
  return out;
}

}  // namespace clifun
