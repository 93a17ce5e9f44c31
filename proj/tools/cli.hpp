#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "fcs/coherent.hpp"

namespace fcs::cli {

/// Exit codes: 0 pass, 1 verification failure, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args[0] is the program name.
int run(std::span<const std::string_view> args, std::ostream& out, std::ostream& err);
int run(std::span<const std::string_view> args);

/// Left-hand side of a pairing: a functional in X' given by its disk coefficients.
struct StateSpec {
  std::string text;
  DiskCoefficients coefficients;
  /// Set when the spec was an X-combination.
  std::optional<XCombination> combination;
};

/// `X:<word>`, `delta:<digits>`, `gf:<path>`, or `c1*X:w1 + c2*X:w2`.
/// X-combinations become their Riesz coefficients at the given depth.
/// Throws std::invalid_argument on malformed specs.
StateSpec parse_state(std::string_view text, unsigned p, int depth);
/// Only the X-span part of the grammar.
XCombination parse_combination(std::string_view text, unsigned p);

}  // namespace fcs::cli
