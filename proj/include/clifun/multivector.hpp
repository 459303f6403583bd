#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "clifun/errors.hpp"
#include "clifun/signature.hpp"

namespace clifun {

using cplx = std::complex<double>;

namespace detail {
template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename T>
T conj_if_complex(const T& v) {
  if constexpr (is_complex<T>::value)
    return std::conj(v);
  else
    return v;
}
}  // namespace detail

// Dense element of Cl(p,q): one coefficient per basis blade, indexed by mask.
// T is double for real multivectors, std::complex<double> for the complex
// intermediates of the spectral formulas.
template <typename T>
class Multivector {
 public:
  using value_type = T;

  explicit Multivector(Signature sig) : sig_(sig), c_(sig.size(), T{}) {}

  Multivector(Signature sig, std::vector<T> coeffs)
      : sig_(sig), c_(std::move(coeffs)) {
    if (c_.size() != sig_.size())
      throw InvalidArgument("coefficient vector length does not match 2^n");
  }

  static Multivector scalar(Signature sig, T value) {
    Multivector m(sig);
    m.c_[0] = value;
    return m;
  }

  static Multivector basis(Signature sig, Blade b, T value = T{1}) {
    Multivector m(sig);
    m.c_.at(b.mask) = value;
    return m;
  }

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return c_.size(); }
  std::span<const T> coefficients() const noexcept { return c_; }

  const T& operator[](std::uint32_t mask) const { return c_[mask]; }
  T& operator[](std::uint32_t mask) { return c_[mask]; }
  const T& operator[](Blade b) const { return c_[b.mask]; }
  T& operator[](Blade b) { return c_[b.mask]; }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Multivector& operator*=(T s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Multivector& operator/=(T s) {
    for (auto& v : c_) v /= s;
    return *this;
  }
  Multivector& operator+=(T s) {
    c_[0] += s;
    return *this;
  }
  Multivector& operator-=(T s) {
    c_[0] -= s;
    return *this;
  }

  friend bool operator==(const Multivector&, const Multivector&) = default;

  void check_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw InvalidArgument("signature mismatch");
  }

 private:
  Signature sig_;
  std::vector<T> c_;
};

using MV = Multivector<double>;
using CMV = Multivector<cplx>;

template <typename T>
Multivector<T> operator+(Multivector<T> a, const Multivector<T>& b) {
  return a += b;
}
template <typename T>
Multivector<T> operator-(Multivector<T> a, const Multivector<T>& b) {
  return a -= b;
}
template <typename T>
Multivector<T> operator-(Multivector<T> a) {
  return a *= T{-1};
}
template <typename T>
Multivector<T> operator*(Multivector<T> a, std::type_identity_t<T> s) {
  return a *= s;
}
template <typename T>
Multivector<T> operator*(std::type_identity_t<T> s, Multivector<T> a) {
  return a *= s;
}
template <typename T>
Multivector<T> operator/(Multivector<T> a, std::type_identity_t<T> s) {
  return a /= s;
}
template <typename T>
Multivector<T> operator+(Multivector<T> a, std::type_identity_t<T> s) {
  return a += s;
}
template <typename T>
Multivector<T> operator-(Multivector<T> a, std::type_identity_t<T> s) {
  return a -= s;
}
template <typename T>
Multivector<T> operator+(std::type_identity_t<T> s, Multivector<T> a) {
  return a += s;
}
template <typename T>
Multivector<T> operator-(std::type_identity_t<T> s, const Multivector<T>& a) {
  return -a + s;
}

// Geometric product: C[a^b] += sign(a,b) A[a] B[b].
template <typename T>
Multivector<T> geometric_product(const Multivector<T>& A,
                                 const Multivector<T>& B) {
  A.check_same(B);
  const Signature& sig = A.signature();
  const std::size_t size = sig.size();
  Multivector<T> C(sig);
  const auto table = sign_table(sig);

  std::vector<std::uint32_t> nzb;
  nzb.reserve(size);
  for (std::uint32_t b = 0; b < size; ++b)
    if (B[b] != T{}) nzb.push_back(b);

  for (std::uint32_t a = 0; a < size; ++a) {
    const T av = A[a];
    if (av == T{}) continue;
    if (!table.empty()) {
      const std::int8_t* row = table.data() + a * size;
      for (std::uint32_t b : nzb) {
        if (row[b] > 0)
          C[a ^ b] += av * B[b];
        else
          C[a ^ b] -= av * B[b];
      }
    } else {
      for (std::uint32_t b : nzb) {
        if (blade_product(sig, {a}, {b}).sign > 0)
          C[a ^ b] += av * B[b];
        else
          C[a ^ b] -= av * B[b];
      }
    }
  }
  return C;
}

template <typename T>
Multivector<T> operator*(const Multivector<T>& a, const Multivector<T>& b) {
  return geometric_product(a, b);
}

namespace detail {
template <typename T, typename SignFn>
Multivector<T> apply_grade_signs(Multivector<T> A, SignFn sign) {
  for (std::uint32_t m = 0; m < A.size(); ++m)
    if (sign(std::popcount(m)) < 0) A[m] = -A[m];
  return A;
}
}  // namespace detail

template <typename T>
Multivector<T> reversion(Multivector<T> A) {
  return detail::apply_grade_signs(std::move(A), reversion_sign);
}

template <typename T>
Multivector<T> grade_involution(Multivector<T> A) {
  return detail::apply_grade_signs(std::move(A), involution_sign);
}

template <typename T>
Multivector<T> clifford_conjugation(Multivector<T> A) {
  return detail::apply_grade_signs(std::move(A), conjugation_sign);
}

// A^dagger = sum_J conj(a_J) e_J^{-1}.
template <typename T>
Multivector<T> hermitian_conjugate(Multivector<T> A) {
  const Signature sig = A.signature();
  for (std::uint32_t m = 0; m < A.size(); ++m) {
    A[m] = detail::conj_if_complex(A[m]);
    if (dagger_sign(sig, {m}) < 0) A[m] = -A[m];
  }
  return A;
}

// Overline: negates every grade except the scalar, 2<A>_0 - A.
template <typename T>
Multivector<T> grade_negation(Multivector<T> A) {
  for (std::uint32_t m = 1; m < A.size(); ++m) A[m] = -A[m];
  return A;
}

template <typename T>
Multivector<T> grade_projection(const Multivector<T>& A, int grade) {
  if (grade < 0 || grade > A.signature().n())
    throw InvalidArgument("grade " + std::to_string(grade) + " out of range");
  Multivector<T> R(A.signature());
  for (std::uint32_t m = 0; m < A.size(); ++m)
    if (std::popcount(m) == grade) R[m] = A[m];
  return R;
}

template <typename T>
T scalar_part(const Multivector<T>& A) {
  return A[0u];
}

// <A>_{-0}: everything but the scalar.
template <typename T>
Multivector<T> nonscalar_part(Multivector<T> A) {
  A[0u] = T{};
  return A;
}

template <typename T>
Multivector<T> power(const Multivector<T>& A, unsigned k) {
  Multivector<T> result = Multivector<T>::scalar(A.signature(), T{1});
  Multivector<T> base = A;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

template <typename T>
Multivector<T> commutator(const Multivector<T>& A, const Multivector<T>& B) {
  return A * B - B * A;
}

template <typename T>
double norm_inf(const Multivector<T>& A) {
  double r = 0.0;
  for (const auto& v : A.coefficients()) r = std::max(r, std::abs(v));
  return r;
}

template <typename T>
double norm_1(const Multivector<T>& A) {
  double r = 0.0;
  for (const auto& v : A.coefficients()) r += std::abs(v);
  return r;
}

inline CMV to_complex(const MV& A) {
  std::vector<cplx> c(A.coefficients().begin(), A.coefficients().end());
  return CMV(A.signature(), std::move(c));
}

inline MV real_part(const CMV& Z) {
  std::vector<double> c(Z.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Z.coefficients()[i].real();
  return MV(Z.signature(), std::move(c));
}

inline MV imag_part(const CMV& Z) {
  std::vector<double> c(Z.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Z.coefficients()[i].imag();
  return MV(Z.signature(), std::move(c));
}

}  // namespace clifun
