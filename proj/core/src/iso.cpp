#include "fcs/iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcs {

TestFunction phi(const XCombination& v, int level) {
  if (level < v.max_length()) throw std::invalid_argument("phi: level below the support depth of the combination");
  TestFunction out(v.p(), level);
  for (const auto& [I, c] : v.terms()) {
    out += (c * GaussianRational::power_of(static_cast<long>(v.p()), static_cast<long>(I.length()))) * indicator(I, level);
  }
  return out;
}

TestFunction phi(const XCombination& v) { return phi(v, std::max(v.max_length(), 0)); }

XCombination phi_inverse(const TestFunction& f) {
  XCombination out(f.p());
  const GaussianRational scale = GaussianRational::power_of(static_cast<long>(f.p()), -f.level());
  for (std::size_t n = 0; n < f.values().size(); ++n) {
    if (f.values()[n].is_zero()) continue;
    out.add(Word::from_index(f.p(), static_cast<std::size_t>(f.level()), n), f.values()[n] * scale);
  }
  return out;
}

GeneralizedFunction phi_prime(const DiskCoefficients& dc) { return GeneralizedFunction(dc); }

DiskCoefficients phi_prime_inverse(const GeneralizedFunction& u) { return u.coefficients(); }

DiskCoefficients phi_prime_inverse(unsigned p, const LevelArrays& levels) { return DiskCoefficients(p, levels); }

Report verify_corollary4(const Word& I, const Word& J, int depth) {
  if (I.p() != J.p()) throw std::invalid_argument("verify_corollary4: p mismatch");
  const int top = static_cast<int>(std::max(I.length(), J.length()));
  if (top > depth) throw std::invalid_argument("verify_corollary4: words deeper than depth");
  const unsigned p = I.p();
  Report report("corollary4");
  const std::string id = I.to_string() + "," + J.to_string();

  const GaussianRational fock_side = renormalized_pairing(x_disk_coefficients(I, depth), XCombination::single(J));
  const TestFunction theta_i = indicator(I);
  const TestFunction theta_j = indicator(J);
  const GaussianRational weight =
      GaussianRational::power_of(static_cast<long>(p), static_cast<long>(I.length() + J.length()));
  const GaussianRational integral_side = weight * haar_integral(product(theta_i, theta_j));
  report.check_equal(id + "/integral", "(X_I,X_J)=p^{|I|+|J|}*int(theta_I*theta_J)", fock_side, integral_side);

  const GaussianRational ni = l2_inner(theta_i, theta_i);
  const GaussianRational nj = l2_inner(theta_j, theta_j);
  const GaussianRational normalized = l2_inner((GaussianRational(1) / ni) * theta_i, (GaussianRational(1) / nj) * theta_j);
  report.check_equal(id + "/normalized", "(X_I,X_J)=(theta_I/|theta_I|^2,theta_J/|theta_J|^2)", fock_side, normalized);
  return report;
}

Report verify_intertwining(const IntertwiningSample& sample) {
  Report report("intertwine");
  for (const auto& [state_name, psi] : sample.states) {
    const GeneralizedFunction u = phi_prime(psi);
    for (const auto& [test_name, test] : sample.tests) {
      const int level = std::max(test.max_length(), 0);
      const GaussianRational lhs = gf_pair(u, phi(test, level));
      const GaussianRational rhs = renormalized_pairing(psi, test);
      report.check_equal("pair/" + state_name + "/" + test_name, "gf_pair(phi'(Psi),phi(Phi))=(Psi,Phi)", lhs, rhs);
    }
  }
  for (const auto& [a_name, a] : sample.tests) {
    for (const auto& [b_name, b] : sample.tests) {
      const int level = std::max({a.max_length(), b.max_length(), 0});
      const GaussianRational l2 = l2_inner(phi(a, level), phi(b, level));
      const GaussianRational fock = renormalized_pairing(riesz_coefficients(a, level), b);
      report.check_equal("gram/" + a_name + "/" + b_name, "(phi(Phi),phi(Phi'))_L2=(Phi,Phi')", l2, fock);
    }
  }
  return report;
}

}  // namespace fcs
