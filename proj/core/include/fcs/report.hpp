#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fcs/gaussian.hpp"

namespace fcs {

/// One verified identity: both sides rendered exactly.
struct CheckLine {
  std::string case_id;
  std::string identity;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Line-per-identity verification report. Rendering sorts by case id, so the
/// output is canonical whatever order the checks ran in.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  void set_header(const std::string& key, const std::string& value);
  const std::vector<std::pair<std::string, std::string>>& header() const { return header_; }

  void check(std::string case_id, std::string identity, std::string lhs, std::string rhs, bool pass);
  void check_equal(std::string case_id, std::string identity, const GaussianRational& lhs, const GaussianRational& rhs);
  void check_true(std::string case_id, std::string identity, bool pass, std::string detail = "");
  /// Appends every line of another report, prefixing its case ids with its suite name.
  void absorb(const Report& other);

  const std::vector<CheckLine>& lines() const { return lines_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  void render(std::ostream& out) const;

 private:
  std::string suite_;
  std::vector<std::pair<std::string, std::string>> header_;
  std::vector<CheckLine> lines_;
};

/// Zero-padded case id so lexical order matches numeric order.
std::string case_id(std::size_t n);

}  // namespace fcs
