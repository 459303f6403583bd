#include "clifun/oracle.hpp"

#include <cmath>

namespace clifun::oracle {

namespace {

int squarings(double norm1) {
  return static_cast<int>(std::ceil(std::log2(std::max(1.0, norm1)))) + 3;
}

}  // namespace

MV taylor_exp(const MV& A, double tol) {
  const int s = squarings(norm_1(A));
  const MV X = A * std::ldexp(1.0, -s);
  MV sum = MV::scalar(A.signature(), 1.0);
  MV term = sum;
  for (int k = 1; k < 200; ++k) {
    term = term * X;
    term *= 1.0 / k;
    sum += term;
    if (norm_1(term) < tol * 1e-2) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

Eigen::MatrixXd regular_representation(const MV& A) {
  const Signature& sig = A.signature();
  if (sig.n() > 8)
    throw UnsupportedDimensionError("regular representation needs n <= 8");
  const Eigen::Index size = static_cast<Eigen::Index>(sig.size());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(size, size);
  for (std::uint32_t k = 0; k < sig.size(); ++k) {
    const MV col = A * MV::basis(sig, Blade{k});
    for (std::uint32_t m = 0; m < sig.size(); ++m) L(m, k) = col[m];
  }
  return L;
}

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& M, double tol) {
  const int s = squarings(M.cwiseAbs().colwise().sum().maxCoeff());
  const Eigen::MatrixXd X = M * std::ldexp(1.0, -s);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(M.rows(), M.cols());
  Eigen::MatrixXd term = sum;
  for (int k = 1; k < 200; ++k) {
    term = (term * X) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().sum() < tol * 1e-2) break;
  }
  for (int i = 0; i < s; ++i) sum = (sum * sum).eval();
  return sum;
}

std::vector<double> matrix_minimal_polynomial(const Eigen::MatrixXd& M,
                                              double rank_tol) {
  const Eigen::Index n = M.rows();
  const Eigen::Index len = n * n;
  Eigen::MatrixXd columns(len, 1);
  std::vector<double> norms{std::sqrt(static_cast<double>(n))};
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  columns.col(0) = Eigen::Map<const Eigen::VectorXd>(P.data(), len) / norms[0];
  for (Eigen::Index m = 1; m <= n; ++m) {
    P = (M * P).eval();
    const double norm = P.norm();
    if (norm == 0.0) {
      std::vector<double> mu(m + 1, 0.0);
      mu[m] = 1.0;
      return mu;
    }
    columns.conservativeResize(Eigen::NoChange, m + 1);
    columns.col(m) = Eigen::Map<const Eigen::VectorXd>(P.data(), len) / norm;
    norms.push_back(norm);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) / sv(0) >= rank_tol && m < n) continue;
    const Eigen::VectorXd c =
        columns.leftCols(m).colPivHouseholderQr().solve(-columns.col(m));
    std::vector<double> mu(m + 1);
    for (Eigen::Index k = 0; k < m; ++k) mu[k] = c(k) * norms[m] / norms[k];
    mu[m] = 1.0;
    return mu;
  }
  return {};
}

}  // namespace clifun::oracle
