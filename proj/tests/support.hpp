#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clifun/expression.hpp"
#include "clifun/multivector.hpp"

namespace testing {

using clifun::CMV;
using clifun::MV;
using clifun::Signature;
using clifun::cplx;

inline MV parse(int p, int q, const std::string& s) {
  return clifun::parse_multivector(Signature(p, q), s);
}

// Named coefficients (blade name -> value) to a multivector.
inline MV from_terms(Signature sig, const std::map<std::string, double>& terms) {
  MV out(sig);
  for (const auto& [name, v] : terms)
    out += (name == "1" ? MV::scalar(sig, 1.0)
                        : clifun::parse_multivector(sig, name)) * v;
  return out;
}

inline std::vector<Signature> signatures_up_to(int nmax) {
  std::vector<Signature> out;
  for (int n = 1; n <= nmax; ++n)
    for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
  return out;
}

// Coefficients uniform in [-1, 1].
inline MV random_mv(Signature sig, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  MV A(sig);
  for (std::uint32_t m = 0; m < sig.size(); ++m) A[m] = u(rng);
  return A;
}

inline MV random_integer_mv(Signature sig, std::mt19937_64& rng, int lo = -3,
                            int hi = 3) {
  std::uniform_int_distribution<int> u(lo, hi);
  MV A(sig);
  for (std::uint32_t m = 0; m < sig.size(); ++m) A[m] = u(rng);
  return A;
}

template <typename T>
double max_abs_diff(const clifun::Multivector<T>& a, const clifun::Multivector<T>& b) {
  return clifun::norm_inf(a - b);
}

// |a - b|_inf / max(|b|_inf, floor).
inline double rel_diff(const MV& a, const MV& b, double floor = 1e-300) {
  return clifun::norm_inf(a - b) / std::max(clifun::norm_inf(b), floor);
}

// Coefficient comparison scale for degree-d polynomials: C(k) ~ binom(d,k) R^k.
inline double coeff_scale(int d, int k, double R) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (d - k + i) / i;
  return b * std::pow(std::max(1.0, R), k);
}

// Reference elements.

inline MV cl03_generic() { return parse(0, 3, "8 - 6e2 - 9e3 + 5e12 - 5e13 + 6e23 - 4e123"); }

inline MV cl42_generic() { return parse(4, 2, "2 + 3e4 + 3e26 + e1345 - 2e12456 + 3e123456"); }

inline MV cl40_repeated() {
  MV A = parse(4, 0, "-4 - e1 - e2 - e3 - e4");
  A[0b1111u] = -2.0 * std::numbers::sqrt3;
  return A;
}

inline MV cl30_defective() { return parse(3, 0, "-1 + 2e1 + e2 + 2e3 - 2e12 - 2e13 + e23 - e123"); }

// Defective Cl(4,2) element whose minimal polynomial has the double root 1.
inline MV cl42_defective() {
  return parse(4, 2,
               "-1-e3+e6-e12-e13+e15-e24-e25+e26-e34-e35+e36-e45+e56+e123+e124+"
               "e126+e134+e135+e136+e146+e234-e235-e236-e245-e246-e256+e456-"
               "e1236+e1245-e1246+e1256-e1345-e1346-e1356+e1456-e2346-e2356+"
               "e2456+e3456+e12345-e12346+e12356");
}

// Closed forms of exp for the reference elements.

inline MV cl03_generic_exp() {
  const double a = std::sqrt(53.0), b = std::sqrt(353.0);
  const double E12 = std::exp(12.0), E4 = std::exp(4.0);
  const double sa = E12 * std::sin(a), sb = E4 * std::sin(b);
  return from_terms(Signature(0, 3),
                    {{"1", 0.5 * (E12 * std::cos(a) + E4 * std::cos(b))},
                     {"e1", 3 / a * sa - 3 / b * sb},
                     {"e2", -1 / (2 * a) * sa - 11 / (2 * b) * sb},
                     {"e3", -2 / a * sa - 7 / b * sb},
                     {"e12", -2 / a * sa + 7 / b * sb},
                     {"e13", 1 / (2 * a) * sa - 11 / (2 * b) * sb},
                     {"e23", 3 / a * sa + 3 / b * sb},
                     {"e123", 0.5 * (E4 * std::cos(b) - E12 * std::cos(a))}});
}

inline MV cl42_generic_exp() {
  const double s3 = std::sqrt(3.0), s7 = std::sqrt(7.0), s15 = std::sqrt(15.0),
               s21 = std::sqrt(21.0);
  const double e3 = std::exp(3.0), e4 = std::exp(4.0), e6 = std::exp(6.0),
               e9 = std::exp(9.0);
  const double c3 = std::cos(s3), c15 = std::cos(s15), ch21 = std::cosh(s21);
  const double S15 = 14 * s15 * e3 * std::sin(s15);
  const double sin3 = 7 * std::sin(s3), sh = s7 * std::sinh(s21);
  return from_terms(
      Signature(4, 2),
      {{"1", (1 + e6 + 2 * e3 * c15 + 2 * e9 * (c3 + ch21)) / (8 * e4)},
       {"e4", (-175 + 175 * e6 + S15 + 10 * s3 * e9 * (sin3 + 5 * sh)) / (840 * e4)},
       {"e15", -(1 + e6 - 2 * e3 * c15 + 2 * e9 * (c3 - ch21)) / (8 * e4)},
       {"e26", -(1 + e6 + 2 * e3 * c15 - 2 * e9 * (c3 + ch21)) / (8 * e4)},
       {"e34", (35 - 35 * e6 + S15 + 5 * s3 * e9 * (sin3 - sh)) / (210 * e4)},
       {"e145", (-175 + 175 * e6 - S15 + 10 * s3 * e9 * (sin3 - 5 * sh)) / (840 * e4)},
       {"e246", (-175 + 175 * e6 + S15 - 10 * s3 * e9 * (sin3 + 5 * sh)) / (840 * e4)},
       {"e1256", -(1 + e6 - 2 * e3 * c15 + 2 * e9 * (ch21 - c3)) / (8 * e4)},
       {"e1345", (-35 + 35 * e6 + S15 - 5 * s3 * e9 * (sin3 + sh)) / (210 * e4)},
       {"e2346", (-35 + 35 * e6 - S15 + 5 * s3 * e9 * (sin3 - sh)) / (210 * e4)},
       {"e12456", (175 - 175 * e6 + S15 + 10 * s3 * e9 * (sin3 - 5 * sh)) / (840 * e4)},
       {"e123456", (-35 + 35 * e6 + S15 + 5 * s3 * e9 * (sin3 + sh)) / (210 * e4)}});
}

// a + b (e1 + e2 + e3 + e4) + c e1234 in Cl(4,0).
inline MV cl40_form(double a, double b, double c) {
  MV out = MV::scalar(Signature(4, 0), a);
  for (std::uint32_t m : {1u, 2u, 4u, 8u}) out[m] = b;
  out[0b1111u] = c;
  return out;
}

// exp with the e1234 sign that makes A exp(A) = exp(A) A and
// d/dt exp(tA) = A exp(tA) hold.
inline MV cl40_repeated_exp() {
  const double E = std::exp(8.0);
  const double b = (1 - E) / (8 * E);
  return cl40_form((1 + E) / (2 * E), b, 2 * std::numbers::sqrt3 * b);
}

// (1/8) g(8) (-4 - e1 - e2 - e3 - e4 - 2 sqrt3 e1234) for odd g.
inline MV cl40_repeated_odd(double g8) {
  const double k = g8 / 8.0;
  return cl40_form(-4 * k, -k, -2 * std::numbers::sqrt3 * k);
}

inline MV cl40_repeated_j0(double j0_8) {
  const double b = (j0_8 - 1) / 8;
  return cl40_form((1 + j0_8) / 2, b, 2 * std::numbers::sqrt3 * b);
}

inline MV cl30_defective_exp() {
  const double s = std::sin(1.0), c = std::cos(1.0), e = std::exp(-1.0);
  return from_terms(Signature(3, 0), {{"1", e * c},
                                      {"e1", e * (s + 2 * c)},
                                      {"e2", e * (2 * s + c)},
                                      {"e3", e * 2 * (c - s)},
                                      {"e12", -2 * e * (s + c)},
                                      {"e13", e * (s - 2 * c)},
                                      {"e23", e * (c - 2 * s)},
                                      {"e123", -e * s}});
}

// C(1)(e_J^dagger A^k) for k = 1, 2, ...; columns follow the blade list.
inline const std::vector<std::string>& cl03_table_blades() {
  static const std::vector<std::string> b{"e1", "e2", "e3", "e12", "e13", "e23", "e123"};
  return b;
}
inline const std::vector<std::vector<double>>& cl03_table() {
  static const std::vector<std::vector<double>> t{
      {0, -24, -36, 20, -20, 24, -16},
      {192, -224, -416, 32, -128, 384, -856},
      {8208, 5952, 5508, -11572, 7468, 888, -7984}};
  return t;
}

inline const std::vector<std::string>& cl42_table_blades() {
  static const std::vector<std::string> b{"e4",    "e15",   "e26",   "e34",
                                          "e145",  "e246",  "e1256", "e1345",
                                          "e2346", "e12456", "e123456"};
  return b;
}
inline const std::vector<std::vector<double>>& cl42_table() {
  static const std::vector<std::vector<double>> t{
      {24, 0, 24, 0, 0, 0, 0, 8, 0, -16, 24},
      {96, 0, 144, 0, -96, -144, -96, -112, 0, -64, 48},
      {1200, 864, 1008, -288, -672, -1008, -576, -672, 96, -960, 672},
      {9792, 8064, 8256, -1152, -8832, -10368, -8064, -5312, -2688, -7808, 5568},
      {94848, 80640, 82944, -26496, -81792, -91008, -82560, -42752, -24960, -84992, 46848},
      {859008, 787968, 752256, -294912, -826368, -876672, -797184, -397824, -288768,
       -817152, 370176},
      {8221440, 7628544, 7243008, -3059712, -7972608, -8163072, -7531776, -3403264,
       -3028992, -8024320, 3460608}};
  return t;
}

inline std::uint32_t mask_of(Signature sig, const std::string& blade) {
  const MV b = clifun::parse_multivector(sig, blade);
  for (std::uint32_t m = 0; m < sig.size(); ++m)
    if (b[m] != 0.0) return m;
  return 0;
}

}  // namespace testing
