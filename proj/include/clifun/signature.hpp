#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#ifndef CLIFUN_MAX_DIMENSION
#define CLIFUN_MAX_DIMENSION 12
#endif
#ifndef CLIFUN_SIGN_TABLE_MAX_DIMENSION
#define CLIFUN_SIGN_TABLE_MAX_DIMENSION 8
#endif

namespace clifun {

inline constexpr int kMaxDimension = CLIFUN_MAX_DIMENSION;
inline constexpr int kSignTableMaxDimension = CLIFUN_SIGN_TABLE_MAX_DIMENSION;

// Metric of Cl(p,q): generators e_1..e_p square to +1, e_{p+1}..e_n to -1.
class Signature {
 public:
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  // Degree of the characteristic polynomial, 2^ceil(n/2).
  int d() const noexcept { return 1 << ((n() + 1) / 2); }
  // Number of basis blades, 2^n.
  std::size_t size() const noexcept { return std::size_t{1} << n(); }
  // Bits of generators that square to -1.
  std::uint32_t negative_mask() const noexcept {
    return ((std::uint32_t{1} << n()) - 1) & ~((std::uint32_t{1} << p_) - 1);
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

// Basis blade e_J; bit i-1 of the mask is set when e_i is a factor.
struct Blade {
  std::uint32_t mask = 0;

  constexpr int grade() const noexcept { return std::popcount(mask); }
  friend constexpr bool operator==(Blade, Blade) = default;
};

struct BladeProduct {
  int sign;
  Blade result;
};

// Parity of reordering e_a e_b into canonical order, without metric factors.
constexpr int reordering_sign(std::uint32_t a, std::uint32_t b) noexcept {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

inline BladeProduct blade_product(const Signature& sig, Blade a, Blade b) {
  int sign = reordering_sign(a.mask, b.mask);
  if (std::popcount(a.mask & b.mask & sig.negative_mask()) & 1) sign = -sign;
  return {sign, Blade{a.mask ^ b.mask}};
}

// Row-major 2^n x 2^n table of blade product signs, shared and immutable.
// Empty when n exceeds kSignTableMaxDimension.
std::span<const std::int8_t> sign_table(const Signature& sig);

// Sign picked up by each grade under the involutions.
constexpr int reversion_sign(int grade) noexcept {
  return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
}
constexpr int involution_sign(int grade) noexcept {
  return (grade & 1) ? -1 : 1;
}
constexpr int conjugation_sign(int grade) noexcept {
  return ((grade * (grade + 1) / 2) & 1) ? -1 : 1;
}

// sigma_J with e_J^dagger = sigma_J e_J = e_J^{-1}.
inline int dagger_sign(const Signature& sig, Blade b) {
  int s = reversion_sign(b.grade());
  if (std::popcount(b.mask & sig.negative_mask()) & 1) s = -s;
  return s;
}

// Blade masks in presentation order: by grade, then lexicographic in the
// generator indices (1, e1, e2, e3, e12, e13, e23, e123 for n = 3).
std::vector<std::uint32_t> grade_lex_order(int n);

// Inverse of grade_lex_order: position of each mask in presentation order.
std::vector<std::size_t> grade_lex_positions(int n);

// "1", "e12", or "e[1,10]" once n > 9.
std::string blade_name(Blade b, int n);

// Generator indices (1-based, ascending) of a blade.
std::vector<int> blade_indices(Blade b);

struct SignedBlade {
  int sign;
  Blade blade;
};

// Canonicalizes an index list such as {2,1} into (-1, e12). Rejects repeated
// indices and indices outside 1..n.
SignedBlade blade_from_indices(const Signature& sig, std::span<const int> idx);

}  // namespace clifun
