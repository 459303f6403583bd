#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clifun/charpoly.hpp"

namespace clifun {

struct RootCluster {
  cplx value;
  int multiplicity;
};

struct RootSet {
  // All roots, repeated according to multiplicity.
  std::vector<cplx> roots;
  // Populated by cluster_roots.
  std::vector<RootCluster> clusters;
  // pairing[i] is the index of the conjugate partner of roots[i] (i itself
  // for real roots).
  std::vector<std::size_t> pairing;
};

struct RootOptions {
  int max_iterations = 1000;
  int polish_steps = 3;
  double residual_tol = 1e-10;
  // Imaginary parts below this snap to zero; < 0 selects the default
  // 1e-6 * (1 + max |root|).
  double snap_tol = -1.0;
};

// Roots of sum_k a[k] lambda^k (ascending coefficients, a.back() != 0) by
// Aberth-Ehrlich iteration with Newton polishing.
RootSet find_polynomial_roots(std::span<const double> ascending,
                              const RootOptions& opts = {});

RootSet find_roots(const CharPoly& chi, const RootOptions& opts = {});

// 1e-6 * (1 + max |root|).
double default_cluster_tolerance(std::span<const cplx> roots);

// Single-linkage clustering; cluster values are arithmetic means and the set
// of clusters is closed under conjugation.
RootSet cluster_roots(RootSet rs, double tol);
RootSet cluster_roots(RootSet rs);

// Elementary symmetric polynomials e_0 .. e_d of the roots.
std::vector<cplx> elementary_symmetric(std::span<const cplx> roots);

struct PolynomialDivision {
  std::vector<double> quotient;   // ascending
  std::vector<double> remainder;  // ascending, degree < divisor degree
};

PolynomialDivision divide_polynomials(std::span<const double> numerator,
                                      std::span<const double> divisor);

cplx evaluate_polynomial(std::span<const double> ascending, cplx x);

}  // namespace clifun
