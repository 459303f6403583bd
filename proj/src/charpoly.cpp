#include "clifun/charpoly.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace clifun {

std::vector<double> CharPoly::ascending() const {
  return {c.rbegin(), c.rend()};
}

cplx CharPoly::operator()(cplx lambda) const {
  cplx r = 0.0;
  for (double ck : c) r = r * lambda + ck;
  return r;
}

cplx CharPoly::derivative(cplx lambda) const {
  const int d = degree();
  cplx r = 0.0;
  for (int k = 0; k < d; ++k) r = r * lambda + static_cast<double>(d - k) * c[k];
  return r;
}

namespace {

using i128 = __int128;

// Sparse-free checked product for the integer path; returns false on overflow.
bool checked_product(const Signature& sig, const std::vector<i128>& a,
                     const std::vector<i128>& b, std::vector<i128>& out) {
  const std::size_t size = sig.size();
  out.assign(size, 0);
  for (std::uint32_t i = 0; i < size; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < size; ++j) {
      if (b[j] == 0) continue;
      i128 prod;
      if (__builtin_mul_overflow(a[i], b[j], &prod)) return false;
      if (blade_product(sig, {i}, {j}).sign < 0) prod = -prod;
      if (__builtin_add_overflow(out[i ^ j], prod, &out[i ^ j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<i128>> integer_coefficients(const MV& A) {
  constexpr double limit = 9007199254740992.0;  // 2^53
  std::vector<i128> out(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    const double v = A.coefficients()[i];
    if (!(std::abs(v) < limit) || v != std::trunc(v)) return std::nullopt;
    out[i] = static_cast<i128>(v);
  }
  return out;
}

std::optional<FaddeevLeVerrierResult> integer_faddeev_leverrier(const MV& A) {
  auto a = integer_coefficients(A);
  if (!a) return std::nullopt;
  const Signature& sig = A.signature();
  const int d = sig.d();

  std::vector<i128> Ak = *a;  // A_(k)
  std::vector<i128> shifted;  // A_(k) - C(k)
  std::vector<i128> C(d + 1);
  C[0] = -1;
  for (int k = 1; k <= d; ++k) {
    if (k > 1 && !checked_product(sig, *a, shifted, Ak)) return std::nullopt;
    i128 num;
    if (__builtin_mul_overflow(Ak[0], static_cast<i128>(d), &num))
      return std::nullopt;
    if (num % k != 0) return std::nullopt;
    C[k] = num / k;
    if (k < d) {
      shifted = Ak;
      if (__builtin_sub_overflow(shifted[0], C[k], &shifted[0]))
        return std::nullopt;
    }
  }

  FaddeevLeVerrierResult r{CharPoly{{}, true}, MV(sig)};
  r.poly.c.resize(d + 1);
  for (int k = 0; k <= d; ++k) r.poly.c[k] = static_cast<double>(C[k]);
  // For d == 1 the adjugate would be 1; d >= 2 always holds here.
  for (std::size_t i = 0; i < sig.size(); ++i)
    r.adjugate[static_cast<std::uint32_t>(i)] = static_cast<double>(shifted[i]);
  return r;
}

FaddeevLeVerrierResult float_faddeev_leverrier(const MV& A) {
  const Signature& sig = A.signature();
  const int d = sig.d();
  FaddeevLeVerrierResult r{CharPoly{std::vector<double>(d + 1), false}, MV(sig)};
  r.poly.c[0] = -1.0;
  MV Ak = A;
  MV shifted(sig);
  for (int k = 1; k <= d; ++k) {
    if (k > 1) Ak = A * shifted;
    r.poly.c[k] = static_cast<double>(d) / k * scalar_part(Ak);
    if (k < d) shifted = Ak - r.poly.c[k];
  }
  r.adjugate = shifted;
  return r;
}

CharPoly from_primed(std::vector<double> primed) {
  CharPoly p{std::move(primed), false};
  for (double& v : p.c) v = -v;
  return p;
}

// Determinant form used for n = 3, 4 (and on H for n = 5, 6).
MV det_form_34(const MV& X) {
  const MV XX = X * X;
  const MV Xb = grade_negation(X);
  const MV t1 = XX * grade_negation(XX);
  const MV t2 = X * grade_negation(Xb * grade_negation(Xb * Xb));
  return (t1 + 2.0 * t2) / 3.0;
}

}  // namespace

FaddeevLeVerrierResult faddeev_leverrier_full(const MV& A) {
  if (auto exact = integer_faddeev_leverrier(A)) return *std::move(exact);
  return float_faddeev_leverrier(A);
}

CharPoly faddeev_leverrier(const MV& A) {
  return faddeev_leverrier_full(A).poly;
}

CharPoly helmstetter_recursion(const MV& A) {
  const Signature& sig = A.signature();
  const int d = sig.d();
  std::vector<double> primed(d + 1);
  primed[0] = 1.0;
  MV B = MV::scalar(sig, 1.0);
  for (int k = 1; k <= d; ++k) {
    const MV AB = A * B;
    primed[k] = -trace(AB) / k;
    B = AB + primed[k];
  }
  return from_primed(std::move(primed));
}

std::vector<double> complete_bell_sequence(std::span<const double> x) {
  const std::size_t k = x.size();
  std::vector<double> B(k + 1);
  B[0] = 1.0;
  for (std::size_t m = 1; m <= k; ++m) {
    // B_m = sum_{j=0}^{m-1} binom(m-1, j) B_{m-1-j} x_{j+1}
    double binom = 1.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      sum += binom * B[m - 1 - j] * x[j];
      binom = binom * static_cast<double>(m - 1 - j) / static_cast<double>(j + 1);
    }
    B[m] = sum;
  }
  return B;
}

double complete_bell(std::span<const double> x) {
  return complete_bell_sequence(x).back();
}

std::vector<double> power_sums(const MV& A) {
  const int d = A.signature().d();
  std::vector<double> S(d + 1, 0.0);
  MV Ak = A;
  double factorial = 1.0;  // (k-1)!
  for (int k = 1; k <= d; ++k) {
    if (k > 1) {
      Ak = Ak * A;
      factorial *= (k - 1);
    }
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    S[k] = sign * d * factorial * scalar_part(Ak);
  }
  return S;
}

CharPoly bell_method(const MV& A) {
  const int d = A.signature().d();
  const auto S = power_sums(A);
  const auto B = complete_bell_sequence(std::span(S).subspan(1));
  CharPoly p{std::vector<double>(d + 1), false};
  p.c[0] = -1.0;
  double factorial = 1.0;
  for (int k = 1; k <= d; ++k) {
    factorial *= k;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    p.c[k] = sign / factorial * B[k];
  }
  return p;
}

double det_closed_form(const MV& A) {
  const Signature& sig = A.signature();
  const int n = sig.n();
  if (n > 6)
    throw UnsupportedDimensionError(
        "closed-form determinant is available only for n <= 6");
  MV D(sig);
  if (n <= 2)
    D = A * grade_negation(A);
  else if (n <= 4)
    D = det_form_34(A);
  else
    D = det_form_34(A * reversion(A));

  const double scale = std::max(1.0, std::pow(norm_1(A), sig.d()));
  if (norm_inf(nonscalar_part(D)) > 1e-8 * scale)
    throw ConsistencyError("closed-form determinant left a nonscalar residue");
  return scalar_part(D);
}

namespace {

// min_k |A^k|_1^(1/k) over k = 1, 2, 4, ..., 32. The coefficient 1-norm is
// submultiplicative, so every term bounds the spectral radius.
double spectral_radius_bound(const MV& A) {
  const double a = norm_1(A);
  if (a == 0.0) return 0.0;
  MV B = A / a;               // A^k / |A^k|_1
  double log_norm = std::log(a);  // log |A^k|_1
  double best = a;
  for (int k = 2; k <= 32; k *= 2) {
    B = B * B;
    const double nb = norm_1(B);
    if (nb == 0.0) return 0.0;
    log_norm = 2.0 * log_norm + std::log(nb);
    B = B / nb;
    best = std::min(best, std::exp(log_norm / k));
  }
  return best;
}

}  // namespace

CharPoly charpoly_by_interpolation(const MV& A) {
  const Signature& sig = A.signature();
  if (sig.n() > 6)
    throw UnsupportedDimensionError(
        "determinant interpolation is available only for n <= 6");
  const int d = sig.d();
  const int nodes = d + 1;
  const double r = 1.0 + spectral_radius_bound(A);

  // Work in x = lambda / r on [-1, 1].
  Eigen::MatrixXd V(nodes, nodes);
  Eigen::VectorXd values(nodes);
  for (int s = 0; s < nodes; ++s) {
    const double x = std::cos(std::numbers::pi * (2 * s + 1) / (2.0 * nodes));
    double xp = 1.0;
    for (int k = 0; k < nodes; ++k) {
      V(s, k) = xp;
      xp *= x;
    }
    values(s) = -det_closed_form(r * x - A);
  }
  const Eigen::VectorXd a = V.colPivHouseholderQr().solve(values);

  CharPoly p{std::vector<double>(d + 1), false};
  double rk = 1.0;
  for (int k = 0; k <= d; ++k) {
    p.c[d - k] = a(k) / rk;
    rk *= r;
  }
  return p;
}

double trace(const MV& A) { return A.signature().d() * scalar_part(A); }

double determinant(const MV& A) { return -faddeev_leverrier(A).c.back(); }

double default_det_tolerance(const MV& A) {
  return 1e-10 * std::max(1.0, std::pow(norm_inf(A), A.signature().d()));
}

MV inverse(const MV& A, std::optional<double> det_tolerance) {
  const auto fl = faddeev_leverrier_full(A);
  const double Cd = fl.poly.c.back();
  const double tol = det_tolerance.value_or(default_det_tolerance(A));
  if (std::abs(Cd) <= tol)
    throw SingularMultivectorError("multivector is singular (|Det| = " +
                                   std::to_string(std::abs(Cd)) + ")");
  return fl.adjugate / Cd;
}

ResolventCheck resolvent_trace_check(const MV& A, double lambda) {
  const CharPoly chi = faddeev_leverrier(A);
  const double chi_val = chi(lambda).real();
  double scale = 0.0;
  for (double ck : chi.c) scale = scale * std::abs(lambda) + std::abs(ck);
  if (std::abs(chi_val) <= 1e-12 * scale)
    throw DomainError("sample point is (nearly) a characteristic root");
  const MV shifted = lambda - A;
  const double lhs = trace(inverse(shifted, 0.0));
  const double rhs = chi.derivative(lambda).real() / chi_val;
  return {lhs, rhs};
}

}  // namespace clifun
