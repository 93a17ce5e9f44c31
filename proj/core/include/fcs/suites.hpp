#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fcs/report.hpp"

namespace fcs {

struct SuiteOptions {
  unsigned p = 2;
  int depth = 5;
  std::uint64_t seed = 0;
};

/// ccr, cascade, xrelat, lemma2, corollary4, example6, lemma7, lemma10,
/// intertwine, threshold, all.
const std::vector<std::string>& suite_names();

/// Runs one named invariant suite. Throws std::invalid_argument for an
/// unknown name or options out of range.
Report run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace fcs
