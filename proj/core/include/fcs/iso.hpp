#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fcs/coherent.hpp"
#include "fcs/padic_fn.hpp"
#include "fcs/report.hpp"

namespace fcs {

/// φ: sum c_I X_I -> sum c_I p^{|I|} θ_{|I|}(x - I), refined to `level`.
/// Throws std::invalid_argument if level < max |I|.
TestFunction phi(const XCombination& v, int level);
/// φ at the smallest admissible level.
TestFunction phi(const XCombination& v);
/// sum_{|I|=k} f(I) p^{-k} X_I.
XCombination phi_inverse(const TestFunction& f);
/// φ'(Ψ) = Ψ ∘ φ^{-1}; the disk coefficients are shared unchanged.
GeneralizedFunction phi_prime(const DiskCoefficients& dc);
DiskCoefficients phi_prime_inverse(const GeneralizedFunction& u);
/// Surjectivity route: any leaf data at depth D gives a coherent state.
DiskCoefficients phi_prime_inverse(unsigned p, const LevelArrays& levels);

/// (X_I, X_J) against p^{|I|+|J|} ∫ θ_I θ_J dμ and the normalized L² form.
Report verify_corollary4(const Word& I, const Word& J, int depth);

struct IntertwiningSample {
  std::vector<std::pair<std::string, DiskCoefficients>> states;
  std::vector<std::pair<std::string, XCombination>> tests;
};

/// gf_pair(φ'(Ψ), φ(Φ)) == (Ψ, Φ) for every state × test, and the isometry
/// (φ Φ, φ Φ')_{L²} == (riesz(Φ), Φ') on every pair of tests.
Report verify_intertwining(const IntertwiningSample& sample);

}  // namespace fcs
