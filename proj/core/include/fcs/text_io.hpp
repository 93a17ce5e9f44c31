#pragma once

#include <iosfwd>
#include <string>

#include "fcs/coherent.hpp"
#include "fcs/fock.hpp"
#include "fcs/padic_fn.hpp"

namespace fcs {

// Line-oriented formats. `#` starts a comment; blank lines are ignored.
// Parse errors throw std::invalid_argument naming the offending line.

/// Header `p=<p> depth=<D> guarantee=<g>`, then `word scalar` lines.
void write_fock(std::ostream& out, const FockVector& v);
FockVector read_fock(std::istream& in);

/// Header `p,D`, then `word value` lines. Length-D words are the leaves
/// (missing leaves are 0); shorter words, when present, must agree with the
/// upward sums or the read fails with a cascade violation.
void write_disk_coefficients(std::ostream& out, const DiskCoefficients& dc);
DiskCoefficients read_disk_coefficients(std::istream& in);
DiskCoefficients load_disk_coefficients(const std::string& path);

/// Header `p,level`, then `word value` lines (missing disks are 0).
void write_test_function(std::ostream& out, const TestFunction& f);
TestFunction read_test_function(std::istream& in);

}  // namespace fcs
