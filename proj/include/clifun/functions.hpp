#pragma once

#include <functional>
#include <optional>
#include <string>

#include "clifun/multivector.hpp"

namespace clifun {

// A scalar function lifted to multivectors through their spectrum.
struct ScalarFunction {
  std::string name;
  std::function<cplx(cplx)> evaluate;
  // Returns a diagnostic when the eigenvalue is outside the domain. `tol` is
  // the eigenvalue clustering tolerance of the caller.
  std::function<std::optional<std::string>(cplx eigenvalue, double tol)> guard;
};

// J0 on the complex plane: power series for |z| <= 12, Hankel asymptotics
// beyond.
cplx bessel_j0(cplx z);

namespace functions {

ScalarFunction exp();
// Principal branch; an eigenvalue at zero is a domain error.
ScalarFunction log();
ScalarFunction sinh();
ScalarFunction cosh();
ScalarFunction sin();
ScalarFunction cos();
// Eigenvalues on the branch cuts (imaginary axis, |Im| >= 1) are rejected.
ScalarFunction asinh();
ScalarFunction sqrt();
// z^r on the principal branch; an eigenvalue at zero is rejected for r <= 0.
ScalarFunction pow(double r);
ScalarFunction bessel_j0();
ScalarFunction identity();
ScalarFunction constant(double value);

// Looks up exp, log, sinh, cosh, sin, cos, asinh, sqrt, pow:<r>, besselj0.
std::optional<ScalarFunction> by_name(const std::string& name);

}  // namespace functions
}  // namespace clifun
