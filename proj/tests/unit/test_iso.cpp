#include "unit_support.hpp"

#include <stdexcept>

#include "fcs/iso.hpp"
#include "fcs/padic_fn.hpp"
#include "fcs/random.hpp"

using namespace fcs;
using fcs::testing::all_words;
using fcs::testing::q;
using fcs::testing::w;

TEST_CASE("phi of X_I is p^|I| on the disk of I") {
  CHECK(phi(XCombination::single(w(2, "e"))) == TestFunction::constant(2, q(1)));
  for (unsigned p : {2u, 3u}) {
    for (const Word& I : all_words(p, 2)) {
      const TestFunction f = phi(XCombination::single(I), 3);
      CHECK(f.level() == 3);
      for (const Word& d : fcs::testing::words_of_length(p, 3)) {
        const bool inside = I.is_prefix_of(d);
        CHECK(f.value(d) == (inside ? GaussianRational::power_of(p, static_cast<long>(I.length())) : q(0)));
      }
    }
  }
  CHECK_THROWS_AS(phi(XCombination::single(w(2, "01")), 1), std::invalid_argument);
}

TEST_CASE("phi respects the refinement identity") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (const Word& I : all_words(p, 2)) {
      XCombination v(p);
      for (const Word& c : I.children()) v.add(c, q(1, static_cast<long>(p)));
      CHECK(phi(v) == phi(XCombination::single(I)));
    }
  }
}

TEST_CASE("phi inverse") {
  for (const Word& I : all_words(3, 2)) {
    const XCombination back = phi_inverse(indicator(I));
    CHECK(equivalent(back, XCombination::single(I, GaussianRational::power_of(3, -static_cast<long>(I.length())))));
    CHECK(equivalent(phi_inverse(phi(XCombination::single(I), static_cast<int>(I.length()))), XCombination::single(I)));
  }
  CHECK(phi_inverse(TestFunction(2, 2)).is_zero());
  SeededRng rng(1);
  const TestFunction f = random_test_function(3, 2, rng);
  CHECK(phi(phi_inverse(f)) == f);
}

TEST_CASE("phi prime") {
  const PAdicPoint x = parse_point(2, "0110");
  CHECK(phi_prime(delta_disk_coefficients(x, 4)) == gf_delta(x, 4));
  CHECK(phi_prime_inverse(gf_delta(x, 4)) == delta_disk_coefficients(x, 4));
  SeededRng rng(2);
  for (unsigned p : {2u, 3u}) {
    const auto dc = random_cascade(p, 3, rng);
    CHECK(phi_prime_inverse(phi_prime(dc)) == dc);
    for (const Word& I : all_words(p, 3)) {
      const GaussianRational via_test = gf_pair(phi_prime(dc), indicator(I));
      CHECK(via_test == dc.value(I));
      CHECK(via_test == GaussianRational::power_of(p, -static_cast<long>(I.length())) *
                            renormalized_pairing(dc, XCombination::single(I)));
    }
  }
  CHECK(phi_prime(DiskCoefficients::zero(2, 2)) == GeneralizedFunction(DiskCoefficients::zero(2, 2)));
}

TEST_CASE("surjectivity from arbitrary leaves") {
  SeededRng rng(3);
  const unsigned p = 3;
  const int D = 3;
  std::vector<GaussianRational> leaf;
  for (int n = 0; n < 27; ++n) leaf.push_back(rng.small_gaussian());
  const auto dc = cascade_from_leaves(p, leaf, D);
  for (const Word& J : fcs::testing::words_of_length(p, D)) {
    CHECK(GaussianRational(27) * dc.value(J) == renormalized_pairing(dc, XCombination::single(J)));
    CHECK(dc.value(J) == leaf[J.to_padic_integer()]);
  }
  CHECK_FALSE(cascade_defect(p, dc.levels()).has_value());
  CHECK(phi_prime_inverse(p, dc.levels()) == dc);
  LevelArrays broken = dc.levels();
  broken[0][0] += q(1);
  CHECK_THROWS_AS(phi_prime_inverse(p, broken), std::invalid_argument);
}

TEST_CASE("pairing versus integral report") {
  const Report same = verify_corollary4(w(2, "01"), w(2, "01"), 3);
  CHECK(same.passed());
  const Report nested = verify_corollary4(w(2, "01"), w(2, "0"), 3);
  CHECK(nested.passed());
  CHECK(renormalized_pairing(x_disk_coefficients(w(2, "01"), 3), XCombination::single(w(2, "0"))) == q(2));
  CHECK(verify_corollary4(w(3, "01"), w(3, "02"), 3).passed());
}

TEST_CASE("intertwining report") {
  SeededRng rng(4);
  IntertwiningSample s;
  s.states.emplace_back("cascade", random_cascade(2, 3, rng));
  s.states.emplace_back("delta", delta_disk_coefficients(random_point(2, 3, rng), 3));
  for (const Word& I : all_words(2, 2)) {
    s.states.emplace_back("x" + I.to_string(), x_disk_coefficients(I, 3));
    s.tests.emplace_back("X" + I.to_string(), XCombination::single(I));
  }
  s.tests.emplace_back("combo", random_combination(2, 3, 3, rng));
  const Report r = verify_intertwining(s);
  CHECK(r.passed());
  CHECK(r.lines().size() >= s.states.size() * s.tests.size());
}

TEST_CASE("pairing through phi matches evaluate for delta") {
  SeededRng rng(5);
  for (unsigned p : {2u, 3u}) {
    const PAdicPoint x = random_point(p, 4, rng);
    const XCombination v = random_combination(p, 3, 4, rng);
    CHECK(renormalized_pairing(delta_disk_coefficients(x, 4), v) == evaluate(phi(v, 3), x));
  }
}

TEST_CASE("phi is diagonal p^|I| in the X_I and indicator bases") {
  for (unsigned p : {2u, 3u}) {
    for (const Word& I : all_words(p, 3)) {
      const long len = static_cast<long>(I.length());
      CHECK(phi(XCombination::single(I), static_cast<int>(len)) == GaussianRational::power_of(p, len) * indicator(I));
    }
  }
}
