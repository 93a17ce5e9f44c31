#include "fcs/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace fcs {

void Report::set_header(const std::string& key, const std::string& value) {
  for (auto& [k, v] : header_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  header_.emplace_back(key, value);
}

void Report::check(std::string id, std::string identity, std::string lhs, std::string rhs, bool pass) {
  lines_.push_back(CheckLine{std::move(id), std::move(identity), std::move(lhs), std::move(rhs), pass});
}

void Report::check_equal(std::string id, std::string identity, const GaussianRational& lhs, const GaussianRational& rhs) {
  check(std::move(id), std::move(identity), lhs.to_string(), rhs.to_string(), lhs == rhs);
}

void Report::check_true(std::string id, std::string identity, bool pass, std::string detail) {
  check(std::move(id), std::move(identity), std::move(detail), pass ? "true" : "false", pass);
}

void Report::absorb(const Report& other) {
  for (const auto& line : other.lines_) {
    CheckLine copy = line;
    copy.case_id = other.suite_ + "/" + copy.case_id;
    lines_.push_back(std::move(copy));
  }
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(lines_.begin(), lines_.end(), [](const CheckLine& l) { return !l.pass; }));
}

void Report::render(std::ostream& out) const {
  out << "# suite=" << suite_;
  for (const auto& [k, v] : header_) out << ' ' << k << '=' << v;
  out << '\n';
  std::vector<const CheckLine*> sorted;
  sorted.reserve(lines_.size());
  for (const auto& l : lines_) sorted.push_back(&l);
  std::stable_sort(sorted.begin(), sorted.end(), [](const CheckLine* a, const CheckLine* b) { return a->case_id < b->case_id; });
  for (const CheckLine* l : sorted) {
    out << (l->pass ? "PASS " : "FAIL ") << l->case_id << ' ' << l->identity << " lhs=" << l->lhs << " rhs=" << l->rhs
        << '\n';
  }
  out << "# " << suite_ << ": " << lines_.size() << " checks, " << failures() << " failures => "
      << (passed() ? "PASS" : "FAIL") << '\n';
}

std::string case_id(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c%06zu", n);
  return buf;
}

}  // namespace fcs
