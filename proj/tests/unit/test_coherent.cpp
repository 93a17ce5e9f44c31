#include "unit_support.hpp"

#include <cmath>
#include <stdexcept>

#include "fcs/padic_fn.hpp"
#include "fcs/random.hpp"

using namespace fcs;
using fcs::testing::all_words;
using fcs::testing::Lk;
using fcs::testing::q;
using fcs::testing::w;

namespace {

// X_I from the operator expansion: sum_k L^k (averaged_create)^k applied to
// L^{|I|} A†_I Ω, plus L^{-l} A^l of the same vector for l = 1..|I|.
FockVector x_by_operators(const Word& I, int depth) {
  const unsigned p = I.p();
  const int n = static_cast<int>(I.length());
  FockVector seed = Scalar::lambda_power(n) * FockVector::basis(I, depth);
  FockVector out(p, depth);
  FockVector up = seed;
  for (int k = 0; n + k <= depth; ++k) {
    out += Scalar::lambda_power(k) * up;
    up = averaged_create(up);
  }
  FockVector down = seed;
  for (int l = 1; l <= n; ++l) {
    down = total_annihilate(down);
    out += Scalar::lambda_power(-l) * down;
  }
  return out;
}

// Direct truncated pairing sum_k L^{2k} <Ψ^k, Φ^k> (bilinear) at L^2 = t, summed
// to the given level with the Fock coefficients of both sides.
GaussianRational truncated_pairing(const FockVector& psi, const FockVector& phi, const mpq_class& t) {
  return bilinear_pairing(psi, phi).evaluate_at_square(GaussianRational(t));
}

GaussianRational prefix_indicator(const Word& J, const PAdicPoint& x) {
  return J.length() <= x.resolution() && x.truncation(J.length()) == J ? GaussianRational(1) : GaussianRational();
}

}  // namespace

TEST_CASE("cascade_from_leaves") {
  const auto dc = cascade_from_leaves(2, 1, {{w(2, "0"), q(1)}, {w(2, "1"), q(0)}});
  CHECK(dc.value(w(2, "e")) == q(1));
  const auto zero = cascade_from_leaves(3, 3, {});
  for (const Word& x : all_words(3, 3)) CHECK(zero.value(x) == q(0));
  CHECK_THROWS_AS(cascade_from_leaves(2, 2, {{w(2, "0"), q(1)}}), std::invalid_argument);
}

TEST_CASE("cascade of delta leaves is the prefix indicator") {
  const PAdicPoint x = parse_point(3, "21021");
  for (int D = 0; D <= 5; ++D) {
    const auto dc = cascade_from_leaves(3, D, {{x.truncation(static_cast<std::size_t>(D)), q(1)}});
    CHECK(dc == delta_disk_coefficients(x, D));
    for (const Word& J : all_words(3, D)) CHECK(dc.value(J) == prefix_indicator(J, x));
  }
}

TEST_CASE("DiskCoefficients rejects a cascade violation") {
  LevelArrays levels{{q(1)}, {q(1), q(1)}};
  CHECK_THROWS_AS(DiskCoefficients(2, levels), std::invalid_argument);
  CHECK(cascade_defect(2, levels) == w(2, "e"));
  LevelArrays ragged{{q(1)}, {q(1)}};
  CHECK_THROWS_AS(DiskCoefficients(2, ragged), std::invalid_argument);
  CHECK_FALSE(cascade_defect(2, {{q(2)}, {q(1), q(1)}}).has_value());
}

TEST_CASE("uniform extension keeps the cascade") {
  SeededRng rng(4);
  const auto dc = random_cascade(3, 2, rng);
  const auto ext = dc.extended(2);
  CHECK(ext.depth() == 4);
  CHECK(ext.truncated(2) == dc);
  CHECK(ext.value(w(3, "0121")) == dc.value(w(3, "01")) / q(9));
}

TEST_CASE("build_x examples") {
  // p=2, I=(), D=2
  FockVector e(2, 2);
  e.set(w(2, "e"), Scalar(1));
  for (const Word& x : fcs::testing::words_of_length(2, 1)) e.set(x, Lk(1, q(1, 2)));
  for (const Word& x : fcs::testing::words_of_length(2, 2)) e.set(x, Lk(2, q(1, 4)));
  CHECK(build_x(w(2, "e"), 2) == e);
  // p=2, I=(0,1), D=3
  FockVector x01(2, 3);
  x01.set(w(2, "e"), Scalar(1));
  x01.set(w(2, "0"), Lk(1));
  x01.set(w(2, "01"), Lk(2));
  x01.set(w(2, "010"), Lk(3, q(1, 2)));
  x01.set(w(2, "011"), Lk(3, q(1, 2)));
  CHECK(build_x(w(2, "01"), 3) == x01);
  CHECK_THROWS_AS(build_x(w(2, "0101"), 3), std::invalid_argument);
}

TEST_CASE("build_x matches the operator expansion") {
  for (unsigned p : {2u, 3u}) {
    for (const Word& I : all_words(p, 3)) {
      CHECK(build_x(I, 4) == x_by_operators(I, 4));
    }
  }
}

TEST_CASE("x_disk_coefficients read off the Fock coefficients of build_x") {
  CHECK(x_disk_coefficients(w(2, "0"), 1).value(w(2, "e")) == q(1));
  CHECK(x_disk_coefficients(w(2, "0"), 1).value(w(2, "0")) == q(1));
  CHECK(x_disk_coefficients(w(2, "0"), 1).value(w(2, "1")) == q(0));
  for (unsigned p : {2u, 3u, 5u}) {
    for (const Word& I : all_words(p, 2)) {
      const int D = 3;
      const auto dc = x_disk_coefficients(I, D);
      CHECK_FALSE(cascade_defect(p, dc.levels()).has_value());
      const FockVector oracle = x_by_operators(I, D);
      for (const Word& J : all_words(p, D)) {
        const Scalar c = oracle.coefficient(J).divided_by_lambda_power(static_cast<int>(J.length()));
        CHECK(Scalar(dc.value(J)) == c);
      }
      CHECK(fcs_to_fock(dc) == build_x(I, D));
    }
  }
}

TEST_CASE("delta states") {
  const PAdicPoint x = parse_point(2, "0111");
  FockVector expect(2, 2);
  expect.set(w(2, "e"), Scalar(1));
  expect.set(w(2, "0"), Lk(1));
  expect.set(w(2, "01"), Lk(2));
  CHECK(build_delta(x, 2) == expect);
  CHECK(fcs_to_fock(delta_disk_coefficients(x, 2)) == expect);
  for (int k = 0; k <= 4; ++k) {
    CHECK(level_component(build_delta(x, 4), k) == FockVector::basis(x.truncation(static_cast<std::size_t>(k)), 4));
  }
  CHECK_THROWS_AS(build_delta(x, 5), std::invalid_argument);
}

TEST_CASE("level_component of X_I at |I| is the basis vector") {
  for (const Word& I : all_words(3, 2)) {
    CHECK(level_component(build_x(I, 4), static_cast<int>(I.length())) == FockVector::basis(I, 4));
  }
}

TEST_CASE("fcs_to_fock of zero is zero") { CHECK(fcs_to_fock(DiskCoefficients::zero(2, 3)).is_zero()); }

TEST_CASE("eigen residual lives on the deepest level") {
  SeededRng rng(6);
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int D = 4;
      CHECK(supported_on_level(eigen_residual(fcs_to_fock(random_cascade(p, D, rng))), D));
    }
    for (const Word& I : all_words(p, 2)) CHECK(supported_on_level(eigen_residual(build_x(I, 3)), 3));
    CHECK(supported_on_level(eigen_residual(build_delta(random_point(p, 4, rng), 4)), 4));
  }
  FockVector bad(2, 3);
  bad.set(w(2, "0"), Scalar(1));
  const FockVector r = eigen_residual(bad);
  CHECK_FALSE(r.coefficient(w(2, "e")).is_zero());
  CHECK_FALSE(supported_on_level(r, 3));
}

TEST_CASE("eigen residual oracle: A v - L v from the operators") {
  SeededRng rng(8);
  const FockVector v = fcs_to_fock(random_cascade(2, 3, rng));
  CHECK(eigen_residual(v) == total_annihilate(v) - Scalar::lambda() * v);
}

TEST_CASE("pairing series examples") {
  // distinct words of equal length with common prefix c
  const Word I = w(2, "0110");
  const Word J = w(2, "0101");
  const auto g = pairing_series(x_disk_coefficients(J, 4), XCombination::single(I));
  CHECK(g.polynomial_part() == Scalar(1) + Lk(2) + Lk(4));
  CHECK(g.tail_constant() == q(0));
  const auto self = pairing_series(x_disk_coefficients(I, 4), XCombination::single(I));
  CHECK(self.polynomial_part() == Scalar(1) + Lk(2) + Lk(4) + Lk(6) + Lk(8));
  CHECK(self.tail_constant() == q(1));
  CHECK(self.tail_start() == 4);
  SeededRng rng(10);
  const auto psi = random_cascade(3, 2, rng);
  CHECK(pairing_series(psi, XCombination::single(w(3, "e"))).tail_constant() == psi.value(w(3, "e")));
}

TEST_CASE("pairing series against the truncated Fock sum") {
  // The series value at L^2 = t is the limit of the bilinear truncated sum;
  // add the geometric remainder of the untruncated X side by hand.
  SeededRng rng(12);
  for (unsigned p : {2u, 3u}) {
    const int D = 6;
    const auto dc = random_cascade(p, D, rng);
    const XCombination phi = random_combination(p, 3, 3, rng);
    const auto g = pairing_series(dc, phi);
    const mpq_class t(1, 2);
    const GaussianRational truncated = truncated_pairing(fcs_to_fock(dc), build_combination(phi, D), t);
    // levels above D each contribute S_D (t/p)^k, summed in closed form
    const GaussianRational sd = stabilized_level_pairing(dc, phi, D);
    const mpq_class r = t / p;
    mpq_class rest = 0;
    mpq_class rk = 1;
    for (int k = 0; k <= D; ++k) rk *= r;
    rest = rk / (1 - r);
    const GaussianRational total = truncated + sd * GaussianRational(rest);
    CHECK(g.to_scalar().evaluate_at_square(GaussianRational(t)) == total);
  }
}

TEST_CASE("Gram identity on equal lengths") {
  for (unsigned p : {2u, 3u}) {
    for (const Word& I : all_words(p, 3)) {
      for (const Word& J : all_words(p, 3)) {
        if (I.length() != J.length()) continue;
        const GaussianRational expect = I == J ? GaussianRational::power_of(p, static_cast<long>(I.length())) : q(0);
        CHECK(renormalized_pairing(x_disk_coefficients(I, 3), XCombination::single(J)) == expect);
      }
    }
  }
  CHECK(renormalized_pairing(x_disk_coefficients(w(2, "01"), 2), XCombination::single(w(2, "0"))) == q(2));
}

TEST_CASE("mixed-length pairings match the disk integral") {
  for (unsigned p : {2u, 3u}) {
    for (const Word& I : all_words(p, 2)) {
      for (const Word& J : all_words(p, 2)) {
        const auto th = product(indicator(I, 2), indicator(J, 2));
        const GaussianRational expect =
            GaussianRational::power_of(p, static_cast<long>(I.length() + J.length())) * haar_integral(th);
        CHECK(renormalized_pairing(build_x(I, 3), XCombination::single(J)) == expect);
      }
    }
  }
}

TEST_CASE("pairing with X_I reads p^|I| Psi_I") {
  SeededRng rng(14);
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto dc = random_cascade(p, 3, rng);
      const FockVector v = fcs_to_fock(dc.extended(1));
      for (const Word& I : all_words(p, 3)) {
        const GaussianRational expect = GaussianRational::power_of(p, static_cast<long>(I.length())) * dc.value(I);
        CHECK(renormalized_pairing(dc, XCombination::single(I)) == expect);
        CHECK(renormalized_pairing(v, XCombination::single(I)) == expect);
        const int M = static_cast<int>(I.length());
        CHECK(stabilized_level_pairing(dc, XCombination::single(I), M) == expect);
      }
    }
  }
}

TEST_CASE("delta pairings") {
  const PAdicPoint x = parse_point(2, "01111");
  const auto dc = delta_disk_coefficients(x, 5);
  for (const Word& J : all_words(2, 4)) {
    CHECK(renormalized_pairing(dc, XCombination::single(J)) ==
          GaussianRational::power_of(2, static_cast<long>(J.length())) * prefix_indicator(J, x));
  }
  CHECK(renormalized_pairing(build_delta(x, 5), XCombination::single(w(2, "0"))) == q(2));
}

TEST_CASE("pairing_series preconditions") {
  const auto dc = x_disk_coefficients(w(2, "0"), 1);
  CHECK_THROWS_AS(pairing_series(dc, XCombination::single(w(2, "01"))), std::invalid_argument);
  CHECK_THROWS_AS(pairing_series(dc, XCombination::single(w(3, "0"))), std::invalid_argument);
  // Fock route needs one level past M
  CHECK_THROWS_AS(pairing_series(build_x(w(2, "0"), 1), XCombination::single(w(2, "0"))), std::invalid_argument);
}

TEST_CASE("renormalized_pairing_numeric") {
  const auto dc = x_disk_coefficients(w(2, "01"), 3);
  const XCombination phi = XCombination::single(w(2, "01"));
  const GaussianRational exact = renormalized_pairing(dc, phi);
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const auto value = renormalized_pairing_numeric(dc, phi, 2.0 * (1.0 - eps));
    CHECK(std::abs(value - exact.to_complex()) <= 10 * eps * (std::abs(exact.to_complex()) + 1));
  }
  // L -> 0 leaves the k=0 term
  const auto small = renormalized_pairing_numeric(dc, phi, 1e-12);
  CHECK(std::abs(small - std::complex<double>(1.0)) < 1e-9);
  CHECK_THROWS_AS(renormalized_pairing_numeric(dc, phi, 2.0), std::domain_error);
}

TEST_CASE("refinement identity as exact Fock equality") {
  for (unsigned p : {2u, 3u}) {
    const int D = 4;
    for (const Word& I : all_words(p, D - 1)) {
      FockVector sum(p, D);
      for (const Word& c : I.children()) sum += build_x(c, D);
      CHECK(build_x(I, D) == Scalar(q(1, static_cast<long>(p))) * sum);
    }
  }
}

TEST_CASE("XCombination canonicalization") {
  XCombination v = XCombination::single(w(2, "e"), q(2));
  XCombination expect(2);
  expect.add(w(2, "0"), q(1));
  expect.add(w(2, "1"), q(1));
  CHECK(v.canonicalized(1) == expect);
  CHECK(equivalent(v, expect));
  CHECK_FALSE(equivalent(v, XCombination::single(w(2, "0"), q(2))));
  v.add(w(2, "e"), q(-2));
  CHECK(v.is_zero());
  CHECK(v.max_length() == -1);
}

TEST_CASE("riesz coefficients conjugate the combination") {
  XCombination v(2);
  v.add(w(2, "0"), fcs::testing::gi(1, 2));
  CHECK(riesz_coefficients(v, 2) == combination_disk_coefficients(v.conj(), 2));
  XCombination real(3);
  real.add(w(3, "12"), q(5, 3));
  CHECK(riesz_coefficients(real, 2) == combination_disk_coefficients(real, 2));
}

TEST_CASE("induced coefficients of a combination satisfy the cascade") {
  SeededRng rng(16);
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const XCombination v = random_combination(p, 3, 4, rng);
      const LevelArrays levels = induced_coefficients(build_combination(v, 4), 3);
      CHECK_FALSE(cascade_defect(p, levels).has_value());
      CHECK(DiskCoefficients(p, levels) == combination_disk_coefficients(v, 3));
    }
  }
}

TEST_CASE("norm series") {
  // <X_(), X_()>: level k has p^k entries of p^{-2k}
  const NormSeries n = norm_squared(XCombination::single(w(2, "e")), 5);
  for (int k = 0; k <= n.last_level(); ++k) CHECK(n.level_norms[static_cast<std::size_t>(k)] == rational_power(2, -k));
  CHECK(n.tail_ratio == mpq_class(1, 2));
  const mpq_class t(1);
  CHECK(n.closed_form(t) == mpq_class(2));
  CHECK_FALSE(n.closed_form(mpq_class(2)).has_value());
  const auto g = n.geometric();
  REQUIRE(g.has_value());
  CHECK(g->to_scalar().evaluate_at_square(GaussianRational(t)) == q(2));
  CHECK(norm_squared(FockVector(2, 3)).partial_sum(t, 3) == 0);
  CHECK(norm_squared(build_x(w(2, "e"), 3)).partial_sum(t, 3) == n.partial_sum(t, 3));
}

TEST_CASE("delta norm partial sums diverge at and above the threshold") {
  const PAdicPoint x = parse_point(3, "012012012012");
  const NormSeries n = delta_norm_squared(x, 12);
  for (long t : {3L, 4L}) {
    const auto cert = divergence_certificate(n, mpq_class(t));
    CHECK(cert.nondecreasing);
    CHECK(cert.diverges);
    CHECK(cert.partial_sums.back() >= 13);
  }
  const auto below = divergence_certificate(norm_squared(XCombination::single(Word(3, {})), 12), mpq_class(3, 2));
  CHECK_FALSE(below.diverges);
}
