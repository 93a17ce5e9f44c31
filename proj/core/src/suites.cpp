#include "fcs/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "fcs/coherent.hpp"
#include "fcs/fock.hpp"
#include "fcs/iso.hpp"
#include "fcs/padic_fn.hpp"
#include "fcs/random.hpp"

namespace fcs {

namespace {

std::vector<Word> words_up_to(unsigned p, int max_length) {
  std::vector<Word> out;
  for (int k = 0; k <= max_length; ++k) {
    const auto count = checked_power(p, static_cast<std::size_t>(k));
    for (std::uint64_t n = 0; n < count; ++n) out.push_back(Word::from_index(p, static_cast<std::size_t>(k), n));
  }
  return out;
}

struct Counter {
  std::size_t n = 0;
  std::string next() { return case_id(n++); }
};

Report suite_ccr(const SuiteOptions& o) {
  Report r("ccr");
  Counter id;
  const int depth = o.depth;
  for (Digit i = 0; i < o.p; ++i) {
    r.check_true(id.next(), "A_" + std::to_string(i) + " Omega = 0", annihilate(i, vacuum(o.p, depth)).is_zero());
  }
  for (const Word& w : words_up_to(o.p, depth - 1)) {
    const FockVector e = FockVector::basis(w, depth);
    for (Digit i = 0; i < o.p; ++i) {
      for (Digit j = 0; j < o.p; ++j) {
        const FockVector lhs = annihilate(i, create(j, e));
        const bool ok = i == j ? lhs == e : lhs.is_zero();
        r.check_true(id.next(), "A_" + std::to_string(i) + " A+_" + std::to_string(j) + " e_" + w.to_string() + " = delta e",
                     ok);
      }
    }
  }
  SeededRng rng(o.seed);
  for (int trial = 0; trial < 4; ++trial) {
    const FockVector u = fcs_to_fock(random_cascade(o.p, depth - 1, rng)).conj();
    FockVector u_padded(o.p, depth);
    u_padded += u;
    const FockVector v = fcs_to_fock(random_cascade(o.p, depth, rng));
    for (Digit i = 0; i < o.p; ++i) {
      const Scalar lhs = inner_product(create(i, u_padded), v);
      const Scalar rhs = inner_product(u_padded, annihilate(i, v));
      r.check(id.next(), "<A+_" + std::to_string(i) + " u,v>=<u,A_" + std::to_string(i) + " v>", lhs.to_string(),
              rhs.to_string(), lhs == rhs);
    }
  }
  return r;
}

Report suite_cascade(const SuiteOptions& o) {
  Report r("cascade");
  Counter id;
  SeededRng rng(o.seed);
  for (int trial = 0; trial < 10; ++trial) {
    const DiskCoefficients dc = random_cascade(o.p, o.depth, rng);
    r.check_true(id.next(), "cascade holds at every interior word", !cascade_defect(o.p, dc.levels()).has_value());
    const FockVector residual = eigen_residual(fcs_to_fock(dc));
    r.check_true(id.next(), "(A - L) Psi supported on level D", supported_on_level(residual, o.depth),
                 "support=" + std::to_string(residual.support_size()));
  }
  const PAdicPoint x = random_point(o.p, static_cast<std::size_t>(o.depth), rng);
  const DiskCoefficients delta = delta_disk_coefficients(x, o.depth);
  bool prefix_indicator = true;
  for (const Word& w : words_up_to(o.p, o.depth)) {
    const bool expect = w.is_prefix_of(x.truncation(static_cast<std::size_t>(o.depth)));
    prefix_indicator = prefix_indicator && delta.value(w) == GaussianRational(expect ? 1 : 0);
  }
  r.check_true(id.next(), "delta cascade is the prefix indicator of x=" + x.to_string(), prefix_indicator);
  r.check_true(id.next(), "fcs_to_fock(delta cascade) = build_delta", fcs_to_fock(delta) == build_delta(x, o.depth));
  return r;
}

Report suite_xrelat(const SuiteOptions& o) {
  Report r("xrelat");
  Counter id;
  const GaussianRational inv_p(mpq_class(1, o.p));
  for (const Word& I : words_up_to(o.p, o.depth - 1)) {
    FockVector sum(o.p, o.depth);
    for (const Word& child : I.children()) sum += build_x(child, o.depth);
    sum *= Scalar(inv_p);
    r.check_true(id.next(), "X_" + I.to_string() + " = p^-1 sum_j X_" + I.to_string() + "j", build_x(I, o.depth) == sum);
    TestFunction theta_sum(o.p, static_cast<int>(I.length()) + 1);
    for (const Word& child : I.children()) theta_sum += indicator(child);
    r.check_true(id.next(), "sum_i theta(x-" + I.to_string() + "i) = theta(x-" + I.to_string() + ")",
                 theta_sum == indicator(I));
  }
  return r;
}

Report suite_lemma2(const SuiteOptions& o) {
  Report r("lemma2");
  Counter id;
  SeededRng rng(o.seed);
  const auto words = words_up_to(o.p, o.depth);
  for (int trial = 0; trial < 5; ++trial) {
    const DiskCoefficients psi = random_cascade(o.p, o.depth, rng);
    const FockVector psi_fock = fcs_to_fock(psi);
    for (const Word& I : words) {
      const GaussianRational expected =
          GaussianRational::power_of(static_cast<long>(o.p), static_cast<long>(I.length())) * psi.value(I);
      const XCombination x = XCombination::single(I);
      r.check_equal(id.next(), "(Psi,X_" + I.to_string() + ")=p^|I| Psi_I", renormalized_pairing(psi, x), expected);
      if (static_cast<int>(I.length()) < o.depth) {
        r.check_equal(id.next(), "Fock route (Psi,X_" + I.to_string() + ")", renormalized_pairing(psi_fock, x), expected);
      }
    }
  }
  return r;
}

Report suite_corollary4(const SuiteOptions& o) {
  Report r("corollary4");
  const int top = std::min(o.depth, 3);
  const auto words = words_up_to(o.p, top);
  for (const Word& I : words) {
    for (const Word& J : words) r.absorb(verify_corollary4(I, J, o.depth));
  }
  return r;
}

Report suite_example6(const SuiteOptions& o) {
  Report r("example6");
  Counter id;
  SeededRng rng(o.seed);
  for (int trial = 0; trial < 10; ++trial) {
    const PAdicPoint x = random_point(o.p, static_cast<std::size_t>(o.depth), rng);
    const GeneralizedFunction delta = phi_prime(delta_disk_coefficients(x, o.depth));
    r.check_true(id.next(), "phi'(delta_x) = gf_delta(x)", delta == gf_delta(x, o.depth));
    const int level = static_cast<int>(rng.between(0, o.depth));
    const TestFunction f = random_test_function(o.p, level, rng);
    r.check_equal(id.next(), "gf_pair(phi'(delta_" + x.to_string() + "),f)=f(x)", gf_pair(delta, f), evaluate(f, x));
    const Word I = random_word(o.p, static_cast<std::size_t>(level), rng);
    const bool inside = ball_contains(Disk(I), x);
    r.check_equal(id.next(), "(delta_" + x.to_string() + ",X_" + I.to_string() + ")=p^|I|[I prefix x]",
                  renormalized_pairing(delta.coefficients(), XCombination::single(I)),
                  inside ? GaussianRational::power_of(static_cast<long>(o.p), level) : GaussianRational(0));
  }
  return r;
}

Report suite_lemma7(const SuiteOptions& o) {
  Report r("lemma7");
  Counter id;
  SeededRng rng(o.seed);
  for (int trial = 0; trial < 3; ++trial) {
    std::map<Word, GaussianRational> leaves;
    const auto count = checked_power(o.p, static_cast<std::size_t>(o.depth));
    for (std::uint64_t n = 0; n < count; ++n) {
      leaves.emplace(Word::from_index(o.p, static_cast<std::size_t>(o.depth), n), rng.small_gaussian());
    }
    const DiskCoefficients psi = phi_prime_inverse(phi_prime(cascade_from_leaves(o.p, o.depth, leaves)));
    r.check_true(id.next(), "cascade at every interior node", !cascade_defect(o.p, psi.levels()).has_value());
    bool all_leaves = true;
    bool all_pairings = true;
    const GaussianRational scale = GaussianRational::power_of(static_cast<long>(o.p), o.depth);
    for (const auto& [w, v] : leaves) {
      all_leaves = all_leaves && gf_pair(phi_prime(psi), indicator(w)) == v;
      all_pairings = all_pairings && renormalized_pairing(psi, XCombination::single(w)) == scale * v;
    }
    r.check_true(id.next(), "gf_pair(phi'(Psi), theta_w) reproduces every leaf", all_leaves);
    r.check_true(id.next(), "(Psi, X_w) = p^D leaf_w for every leaf", all_pairings);
  }
  return r;
}

Report suite_lemma10(const SuiteOptions& o) {
  Report r("lemma10");
  Counter id;
  SeededRng rng(o.seed);
  const int depth = std::min(o.depth, 4);
  for (int trial = 0; trial < 5; ++trial) {
    const XCombination v = random_combination(o.p, depth, 4, rng);
    const LevelArrays induced = induced_coefficients(build_combination(v, depth + 1), depth);
    auto defect = cascade_defect(o.p, induced);
    r.check_true(id.next(), "induced coefficients satisfy the cascade", !defect.has_value(),
                 defect ? "defect at " + defect->to_string() : "");
    r.check_true(id.next(), "induced coefficients = combination coefficients",
                 induced == combination_disk_coefficients(v, depth).levels());
  }
  return r;
}

Report suite_intertwine(const SuiteOptions& o) {
  SeededRng rng(o.seed);
  const int top = std::min(o.depth, 3);
  IntertwiningSample sample;
  for (int trial = 0; trial < 3; ++trial) sample.states.emplace_back("cascade" + std::to_string(trial), random_cascade(o.p, o.depth, rng));
  for (int trial = 0; trial < 2; ++trial) {
    const PAdicPoint x = random_point(o.p, static_cast<std::size_t>(o.depth), rng);
    sample.states.emplace_back("delta" + x.to_string(), delta_disk_coefficients(x, o.depth));
  }
  for (const Word& I : words_up_to(o.p, std::min(top, 2))) {
    sample.states.emplace_back("X" + I.to_string(), x_disk_coefficients(I, o.depth));
  }
  for (const Word& I : words_up_to(o.p, std::min(top, 2))) sample.tests.emplace_back("X" + I.to_string(), XCombination::single(I));
  for (int trial = 0; trial < 3; ++trial) {
    sample.tests.emplace_back("comb" + std::to_string(trial), random_combination(o.p, top, 3, rng));
  }
  return verify_intertwining(sample);
}

Report suite_threshold(const SuiteOptions& o) {
  Report r("threshold");
  Counter id;
  SeededRng rng(o.seed);
  const mpq_class p(o.p);
  const PAdicPoint x = random_point(o.p, 12, rng);
  for (const mpq_class& t : {p, mpq_class(5 * p / 4)}) {
    std::vector<mpq_class> sums;
    bool certified = true;
    for (int depth = 4; depth <= 12; ++depth) {
      const DivergenceCertificate cert = divergence_certificate(delta_norm_squared(x, depth), t);
      certified = certified && cert.diverges;
      sums.push_back(cert.partial_sums.back());
    }
    const bool monotone = std::is_sorted(sums.begin(), sums.end());
    std::string detail = "partial sums depth 4..12:";
    for (const auto& s : sums) detail += " " + s.get_str();
    r.check_true(id.next(), "|delta_x|^2 partial sums nondecreasing at L^2=" + t.get_str(), monotone, detail);
    r.check_true(id.next(), "|delta_x|^2 divergence certificate at L^2=" + t.get_str(), certified);
    const DiskCoefficients psi = random_cascade(o.p, std::min(o.depth, 6), rng);
    r.check_true(id.next(), "generic FCS norm divergence certificate at L^2=" + t.get_str(),
                 divergence_certificate(norm_squared(psi), t).diverges);
  }
  const mpq_class half = p / 2;
  const NormSeries x_norm = norm_squared(XCombination::single(Word(o.p)), 12);
  const GaussianRational closed = x_norm.geometric()->to_scalar().evaluate_at_square(GaussianRational(half));
  const mpq_class partial_plus_tail = *x_norm.closed_form(half);
  r.check_equal(id.next(), "|X_e|^2 at L^2=p/2: closed form = depth-12 partial sum + tail", closed,
                GaussianRational(partial_plus_tail));
  r.check_true(id.next(), "|X_e|^2 finite below threshold", !divergence_certificate(norm_squared(XCombination::single(Word(o.p))), half).diverges);
  return r;
}

using SuiteFn = std::function<Report(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"ccr", suite_ccr},         {"cascade", suite_cascade},       {"xrelat", suite_xrelat},
      {"lemma2", suite_lemma2},   {"corollary4", suite_corollary4}, {"example6", suite_example6},
      {"lemma7", suite_lemma7},   {"lemma10", suite_lemma10},       {"intertwine", suite_intertwine},
      {"threshold", suite_threshold},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

Report run_suite(std::string_view name, const SuiteOptions& options) {
  if (options.p < 2) throw std::invalid_argument("suite: p must be >= 2");
  if (options.depth < 1) throw std::invalid_argument("suite: depth must be >= 1");
  Report result(std::string{name});
  result.set_header("p", std::to_string(options.p));
  result.set_header("depth", std::to_string(options.depth));
  result.set_header("seed", std::to_string(options.seed));
  if (name == "all") {
    for (const auto& [suite, fn] : registry()) result.absorb(fn(options));
    return result;
  }
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) {
      result.absorb(fn(options));
      return result;
    }
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace fcs
