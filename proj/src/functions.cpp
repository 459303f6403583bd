#include "clifun/functions.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace clifun {

namespace {

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(6);
  if (z.imag() == 0.0)
    os << z.real();
  else
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
       << "i";
  return os.str();
}

auto no_guard() {
  return [](cplx, double) -> std::optional<std::string> { return std::nullopt; };
}

auto reject_zero(std::string fname) {
  return [fname](cplx z, double tol) -> std::optional<std::string> {
    if (std::abs(z) <= tol)
      return fname + " is undefined at eigenvalue " + describe(z) +
             " (eigenvalue 0)";
    return std::nullopt;
  };
}

// Hankel asymptotic expansion of J0, valid for Re z > 0 and large |z|.
cplx j0_asymptotic(cplx z) {
  cplx P = 1.0, Q = 0.0;
  cplx term = 1.0;  // a_k(0) / z^k
  const cplx inv8z = 1.0 / (8.0 * z);
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    const double f = (2.0 * k - 1.0) * (2.0 * k - 1.0);
    const cplx next = term * (-f) * inv8z / static_cast<double>(k);
    // Asymptotic series: stop at the smallest term.
    if (std::abs(next) >= prev) break;
    prev = std::abs(next);
    term = next;
    // Terms alternate between Q (odd k) and P (even k) with sign (-1)^floor(k/2).
    if (k % 2 == 1)
      Q += (k % 4 == 1 ? 1.0 : -1.0) * term;
    else
      P += (k % 4 == 2 ? -1.0 : 1.0) * term;
  }
  const cplx chi = z - std::numbers::pi / 4.0;
  return std::sqrt(2.0 / (std::numbers::pi * z)) *
         (P * std::cos(chi) - Q * std::sin(chi));
}

}  // namespace

cplx bessel_j0(cplx z) {
  if (std::abs(z) <= 12.0) {
    const cplx q = -0.25 * z * z;
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
      term *= q / static_cast<double>(k * k);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  // J0 is even.
  return j0_asymptotic(z.real() < 0.0 ? -z : z);
}

namespace functions {

ScalarFunction exp() {
  return {"exp", [](cplx z) { return std::exp(z); }, no_guard()};
}

ScalarFunction log() {
  return {"log", [](cplx z) { return std::log(z); }, reject_zero("log")};
}

ScalarFunction sinh() {
  return {"sinh", [](cplx z) { return std::sinh(z); }, no_guard()};
}

ScalarFunction cosh() {
  return {"cosh", [](cplx z) { return std::cosh(z); }, no_guard()};
}

ScalarFunction sin() {
  return {"sin", [](cplx z) { return std::sin(z); }, no_guard()};
}

ScalarFunction cos() {
  return {"cos", [](cplx z) { return std::cos(z); }, no_guard()};
}

ScalarFunction asinh() {
  return {"asinh", [](cplx z) { return std::asinh(z); },
          [](cplx z, double tol) -> std::optional<std::string> {
            if (std::abs(z.real()) <= tol && std::abs(z.imag()) >= 1.0 - tol)
              return "asinh: eigenvalue " + describe(z) +
                     " lies on a branch cut";
            return std::nullopt;
          }};
}

ScalarFunction sqrt() {
  return {"sqrt", [](cplx z) { return std::sqrt(z); }, no_guard()};
}

ScalarFunction pow(double r) {
  char name[40];
  std::snprintf(name, sizeof name, "pow:%.17g", r);
  ScalarFunction f{name,
                   [r](cplx z) { return z == cplx(0.0) ? cplx(0.0) : std::pow(z, r); },
                   no_guard()};
  if (r <= 0.0) f.guard = reject_zero(f.name);
  return f;
}

ScalarFunction bessel_j0() {
  return {"besselj0", [](cplx z) { return clifun::bessel_j0(z); }, no_guard()};
}

ScalarFunction identity() {
  return {"identity", [](cplx z) { return z; }, no_guard()};
}

ScalarFunction constant(double value) {
  return {"constant", [value](cplx) { return cplx(value); }, no_guard()};
}

std::optional<ScalarFunction> by_name(const std::string& name) {
  if (name == "exp") return exp();
  if (name == "log") return log();
  if (name == "sinh") return sinh();
  if (name == "cosh") return cosh();
  if (name == "sin") return sin();
  if (name == "cos") return cos();
  if (name == "asinh") return asinh();
  if (name == "sqrt") return sqrt();
  if (name == "besselj0") return bessel_j0();
  if (name.rfind("pow:", 0) == 0) {
    const std::string arg = name.substr(4);
    double r = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), r);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || arg.empty())
      return std::nullopt;
    return pow(r);
  }
  return std::nullopt;
}

}  // namespace functions
}  // namespace clifun
