#include <doctest.h>

#include <random>

#include "clifun/multivector.hpp"
#include "support.hpp"

using namespace clifun;
using testing::parse;

TEST_CASE("signature derived quantities") {
  CHECK(Signature(0, 3).d() == 4);
  CHECK(Signature(4, 2).d() == 8);
  CHECK(Signature(1, 0).d() == 2);
  CHECK(Signature(5, 0).d() == 8);
  CHECK(Signature(3, 0).size() == 8u);
  CHECK(Signature(1, 2).negative_mask() == 0b110u);
  CHECK_THROWS_AS(Signature(0, 0), InvalidArgument);
  CHECK_THROWS_AS(Signature(-1, 2), InvalidArgument);
  CHECK_THROWS_AS(Signature(7, 6), InvalidArgument);
  CHECK_NOTHROW(Signature(6, 6));
}

TEST_CASE("blade products") {
  const Signature e2(2, 0), q3(0, 3);
  CHECK(blade_product(e2, {1}, {1}).sign == 1);
  CHECK(blade_product(e2, {1}, {1}).result.mask == 0u);
  CHECK(blade_product(q3, {4}, {4}).sign == -1);
  CHECK(blade_product(e2, {3}, {3}).sign == -1);
  CHECK(blade_product(e2, {2}, {1}).sign == -1);
  CHECK(blade_product(e2, {2}, {1}).result.mask == 3u);

  for (const auto& sig : testing::signatures_up_to(5))
    for (std::uint32_t a = 0; a < sig.size(); ++a)
      for (std::uint32_t b = 0; b < sig.size(); ++b) {
        const auto r = blade_product(sig, {a}, {b});
        REQUIRE((r.sign == 1 || r.sign == -1));
        REQUIRE(r.result.mask == (a ^ b));
      }
}

TEST_CASE("sign table agrees with direct computation") {
  const Signature sig(3, 2);
  const auto table = sign_table(sig);
  REQUIRE(table.size() == sig.size() * sig.size());
  for (std::uint32_t a = 0; a < sig.size(); ++a)
    for (std::uint32_t b = 0; b < sig.size(); ++b)
      CHECK(table[a * sig.size() + b] == blade_product(sig, {a}, {b}).sign);
  CHECK(sign_table(Signature(5, 4)).empty());
}

TEST_CASE("geometric product examples") {
  const MV x = parse(1, 0, "1 + e1"), y = parse(1, 0, "1 - e1");
  CHECK(norm_inf(x * y) == 0.0);

  const Signature H(0, 2);
  const MV e1 = MV::basis(H, {1}), e2 = MV::basis(H, {2}), e12 = MV::basis(H, {3});
  CHECK(e1 * e2 == e12);
  CHECK(e12 * e12 == MV::scalar(H, -1.0));

  CHECK_THROWS_AS(MV(Signature(2, 0)) * MV(Signature(1, 1)), InvalidArgument);
}

TEST_CASE("associativity and anti-automorphisms on random elements") {
  std::mt19937_64 rng(7);
  for (const auto& sig : testing::signatures_up_to(6)) {
    const int trials = sig.n() == 6 ? 40 : 200;
    for (int t = 0; t < trials; ++t) {
      const MV A = testing::random_mv(sig, rng), B = testing::random_mv(sig, rng),
               C = testing::random_mv(sig, rng);
      const double scale = norm_inf(A) * norm_inf(B) * norm_inf(C) * sig.size() * sig.size();
      REQUIRE(norm_inf((A * B) * C - A * (B * C)) < 1e-12 * scale);
      REQUIRE(norm_inf(reversion(A * B) - reversion(B) * reversion(A)) <
              1e-12 * scale);
      REQUIRE(norm_inf(hermitian_conjugate(A * B) -
                       hermitian_conjugate(B) * hermitian_conjugate(A)) <
              1e-12 * scale);
    }
  }
}

TEST_CASE("involutions") {
  const Signature s3(3, 0), q3(0, 3);
  CHECK(reversion(MV::basis(s3, {3})) == MV::basis(s3, {3}, -1.0));
  CHECK(grade_involution(MV::basis(s3, {7})) == MV::basis(s3, {7}, -1.0));
  CHECK(clifford_conjugation(MV::basis(s3, {7})) == MV::basis(s3, {7}));
  CHECK(hermitian_conjugate(MV::basis(q3, {7})) == MV::basis(q3, {7}));
  CHECK(hermitian_conjugate(MV::basis(q3, {2})) == MV::basis(q3, {2}, -1.0));
  CHECK(hermitian_conjugate(MV::scalar(q3, 2.5)) == MV::scalar(q3, 2.5));

  std::mt19937_64 rng(11);
  for (const auto& sig : testing::signatures_up_to(5)) {
    const MV A = testing::random_mv(sig, rng);
    CHECK(reversion(reversion(A)) == A);
    CHECK(grade_involution(grade_involution(A)) == A);
    CHECK(hermitian_conjugate(hermitian_conjugate(A)) == A);
    CHECK(grade_negation(grade_negation(A)) == A);
    CHECK(clifford_conjugation(A) == reversion(grade_involution(A)));
    for (std::uint32_t m = 0; m < sig.size(); ++m) {
      const MV e = MV::basis(sig, {m});
      REQUIRE(scalar_part(hermitian_conjugate(e) * e) == 1.0);
    }
  }

  const CMV Z = CMV::basis(Signature(0, 1), {1}, cplx(1.0, 2.0));
  CHECK(hermitian_conjugate(Z)[1u] == cplx(-1.0, 2.0));
}

TEST_CASE("grade negation and projections") {
  const MV A = parse(0, 2, "2 + 3e1 - e2 + 4e12");
  CHECK(grade_negation(A) == parse(0, 2, "2 - 3e1 + e2 - 4e12"));
  CHECK(grade_negation(MV::scalar(Signature(0, 2), 5.0)) == MV::scalar(Signature(0, 2), 5.0));

  const MV B = parse(2, 0, "3 + 2e1 + e12");
  CHECK(scalar_part(B) == 3.0);
  CHECK(nonscalar_part(B) == parse(2, 0, "2e1 + e12"));
  CHECK(grade_projection(B, 1) == parse(2, 0, "2e1"));
  CHECK(grade_projection(B, 2) == parse(2, 0, "e12"));
  CHECK_THROWS_AS(grade_projection(B, 3), InvalidArgument);
  CHECK_THROWS_AS(grade_projection(B, -1), InvalidArgument);
  CHECK(nonscalar_part(B) == (B - grade_negation(B)) * 0.5);

  std::mt19937_64 rng(3);
  const MV R = testing::random_mv(Signature(2, 2), rng);
  CHECK(norm_inf(MV::scalar(R.signature(), scalar_part(R)) + nonscalar_part(R) - R) == 0.0);
}

TEST_CASE("powers") {
  CHECK(power(MV::basis(Signature(1, 0), {1}), 2) == MV::scalar(Signature(1, 0), 1.0));
  const MV A = testing::cl03_generic();
  CHECK(power(A, 0) == MV::scalar(A.signature(), 1.0));
  const MV A2 = A * A;
  CHECK(power(A, 2) == A2);
  CHECK(norm_inf(A * A2 - A2 * A) == 0.0);
  CHECK(power(A, 3) == A * A2);
  // metric signs of the squares: -1 except e123^2 = +1
  CHECK(scalar_part(A2) == 64 - 36 - 81 - 25 - 25 - 36 + 16);
}

TEST_CASE("presentation order and names") {
  const auto order = grade_lex_order(3);
  CHECK(order == std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5, 6, 7});
  const auto pos = grade_lex_positions(3);
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(pos[order[i]] == i);
  CHECK(blade_name({0}, 3) == "1");
  CHECK(blade_name({5}, 3) == "e13");
  CHECK(blade_name({(1u << 9) | 1u}, 10) == "e[1,10]");
  CHECK(blade_indices({0b1011}) == std::vector<int>{1, 2, 4});

  const Signature sig(3, 0);
  const std::vector<int> idx{2, 1};
  const auto sb = blade_from_indices(sig, idx);
  CHECK(sb.sign == -1);
  CHECK(sb.blade.mask == 3u);
  const std::vector<int> dup{1, 1}, out{4};
  CHECK_THROWS_AS(blade_from_indices(sig, dup), InvalidArgument);
  CHECK_THROWS_AS(blade_from_indices(sig, out), InvalidArgument);
}

TEST_CASE("complex embedding") {
  const MV A = testing::cl30_defective();
  const CMV Z = to_complex(A);
  CHECK(real_part(Z) == A);
  CHECK(norm_inf(imag_part(Z)) == 0.0);
  CHECK(real_part(Z * Z) == A * A);
  CHECK_THROWS_AS(MV(Signature(2, 0), std::vector<double>(3)), InvalidArgument);
}
