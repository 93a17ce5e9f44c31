#include "fcs/text_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fcs {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back(Line{n, std::move(t)});
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& why) {
  throw std::invalid_argument("line " + std::to_string(line.number) + ": " + why + " ('" + line.text + "')");
}

std::pair<std::string, std::string> split_entry(const Line& line) {
  const auto space = line.text.find_first_of(" \t");
  if (space == std::string::npos) fail(line, "expected '<word> <value>'");
  return {line.text.substr(0, space), trim(line.text.substr(space + 1))};
}

/// `p,N` header for the disk and test-function formats.
std::pair<unsigned, int> comma_header(const Line& line) {
  const auto comma = line.text.find(',');
  if (comma == std::string::npos) fail(line, "expected header 'p,<n>'");
  long p = 0;
  long n = 0;
  try {
    p = std::stol(line.text.substr(0, comma));
    n = std::stol(line.text.substr(comma + 1));
  } catch (const std::logic_error&) {
    fail(line, "expected header 'p,<n>'");
  }
  if (p < 2 || n < 0) fail(line, "header values out of range");
  return {static_cast<unsigned>(p), static_cast<int>(n)};
}

template <typename Fn>
auto with_line(const Line& line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    fail(line, e.what());
  } catch (const std::out_of_range& e) {
    fail(line, e.what());
  }
}

}  // namespace

void write_fock(std::ostream& out, const FockVector& v) {
  out << "p=" << v.p() << " depth=" << v.depth() << " guarantee=" << v.guarantee() << '\n';
  for (const auto& [w, c] : v.coefficients()) out << w.to_string() << ' ' << c.to_string() << '\n';
}

FockVector read_fock(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw std::invalid_argument("read_fock: missing header");
  std::map<std::string, int> header;
  {
    std::istringstream hs(lines.front().text);
    std::string field;
    while (hs >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) fail(lines.front(), "expected key=value in header");
      header[field.substr(0, eq)] = with_line(lines.front(), [&] { return std::stoi(field.substr(eq + 1)); });
    }
  }
  if (!header.count("p") || !header.count("depth")) fail(lines.front(), "header needs p= and depth=");
  const int depth = header["depth"];
  const int guarantee = header.count("guarantee") ? header["guarantee"] : depth;
  FockVector v = with_line(lines.front(), [&] {
    return FockVector(static_cast<unsigned>(header["p"]), depth, guarantee);
  });
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto [word, value] = split_entry(lines[n]);
    with_line(lines[n], [&] {
      v.add(parse_word(v.p(), word), parse_scalar(value));
      return 0;
    });
  }
  return v;
}

void write_disk_coefficients(std::ostream& out, const DiskCoefficients& dc) {
  out << dc.p() << ',' << dc.depth() << '\n';
  const auto& leaves = dc.level(dc.depth());
  for (std::size_t n = 0; n < leaves.size(); ++n) {
    if (leaves[n].is_zero()) continue;
    out << Word::from_index(dc.p(), static_cast<std::size_t>(dc.depth()), n).to_string() << ' ' << leaves[n].to_string()
        << '\n';
  }
}

DiskCoefficients read_disk_coefficients(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw std::invalid_argument("read_disk_coefficients: missing header");
  const auto [p, depth] = comma_header(lines.front());
  std::map<Word, GaussianRational> leaves;
  std::vector<std::pair<Line, std::pair<Word, GaussianRational>>> interior;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto [word_text, value_text] = split_entry(lines[n]);
    auto entry = with_line(lines[n], [&] { return std::make_pair(parse_word(p, word_text), parse_gaussian(value_text)); });
    const int len = static_cast<int>(entry.first.length());
    if (len > depth) fail(lines[n], "word deeper than D");
    if (len == depth) {
      if (!leaves.emplace(entry.first, entry.second).second) fail(lines[n], "duplicate word");
    } else {
      interior.emplace_back(lines[n], std::move(entry));
    }
  }
  DiskCoefficients dc = cascade_from_leaves(p, depth, leaves);
  for (const auto& [line, entry] : interior) {
    if (!(dc.value(entry.first) == entry.second)) {
      fail(line, "cascade violation: value " + entry.second.to_string() + " but children sum to " +
                     dc.value(entry.first).to_string());
    }
  }
  return dc;
}

DiskCoefficients load_disk_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_disk_coefficients(in);
}

void write_test_function(std::ostream& out, const TestFunction& f) {
  out << f.p() << ',' << f.level() << '\n';
  for (std::size_t n = 0; n < f.values().size(); ++n) {
    if (f.values()[n].is_zero()) continue;
    out << Word::from_index(f.p(), static_cast<std::size_t>(f.level()), n).to_string() << ' ' << f.values()[n].to_string()
        << '\n';
  }
}

TestFunction read_test_function(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw std::invalid_argument("read_test_function: missing header");
  const auto [p, level] = comma_header(lines.front());
  TestFunction f(p, level);
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto [word_text, value_text] = split_entry(lines[n]);
    with_line(lines[n], [&] {
      f.set(parse_word(p, word_text), parse_gaussian(value_text));
      return 0;
    });
  }
  return f;
}

}  // namespace fcs
