#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clifun/multivector.hpp"

namespace clifun {

// chi_A(lambda) = sum_{k=0}^{d} C(d-k) lambda^k, stored as c[k] = C(k), with
// the leading coefficient C(0) = -1.
struct CharPoly {
  std::vector<double> c;
  // True when the coefficients came out of exact integer arithmetic.
  bool exact = false;

  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  // Coefficients of lambda^0 .. lambda^d.
  std::vector<double> ascending() const;
  cplx operator()(cplx lambda) const;
  // chi'(lambda); its reciprocal is the per-root spectral weight beta.
  cplx derivative(cplx lambda) const;
};

struct FaddeevLeVerrierResult {
  CharPoly poly;
  // A_(d-1) - C(d-1); A times this equals C(d).
  MV adjugate;
};

// A_(1) = A, C(k) = (d/k) <A_(k)>_0, A_(k+1) = A (A_(k) - C(k)).
// Integer-valued input runs in 128-bit integers and falls back to doubles on
// overflow or inexact division.
FaddeevLeVerrierResult faddeev_leverrier_full(const MV& A);
CharPoly faddeev_leverrier(const MV& A);

// B_0 = 1, C'(k) = -Tr(A B_{k-1}) / k, B_k = A B_{k-1} + C'(k); returned with
// the sign flip C(k) = -C'(k).
CharPoly helmstetter_recursion(const MV& A);

// Complete Bell polynomial B_k(x_1..x_k), k = x.size().
double complete_bell(std::span<const double> x);
// B_0 .. B_k of the prefixes of x.
std::vector<double> complete_bell_sequence(std::span<const double> x);

// S(k) = (-1)^(k-1) d (k-1)! <A^k>_0 for k = 1..d (index 0 unused).
std::vector<double> power_sums(const MV& A);

// C(k) = (-1)^(k+1) / k! B_k(S(1)..S(k)).
CharPoly bell_method(const MV& A);

// Determinant from the closed forms for n <= 6:
//   n <= 2: A Abar
//   n <= 4: (A A overline(A A) + 2 A overline(Abar overline(Abar Abar))) / 3
//   n <= 6: the n <= 4 form applied to H = A reverse(A).
double det_closed_form(const MV& A);

// -Det(lambda - A) sampled at d + 1 Chebyshev nodes and interpolated.
CharPoly charpoly_by_interpolation(const MV& A);

double trace(const MV& A);
double determinant(const MV& A);

// 1e-10 * max(1, |A|_inf^d).
double default_det_tolerance(const MV& A);

MV inverse(const MV& A, std::optional<double> det_tolerance = std::nullopt);

struct ResolventCheck {
  double lhs;  // Tr((lambda - A)^-1)
  double rhs;  // chi'(lambda) / chi(lambda)
};

ResolventCheck resolvent_trace_check(const MV& A, double lambda);

}  // namespace clifun
