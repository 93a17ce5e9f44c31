#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fcs/iso.hpp"
#include "fcs/padic_fn.hpp"
#include "fcs/scalar.hpp"
#include "fcs/suites.hpp"
#include "fcs/text_io.hpp"

namespace fcs::cli {

namespace {

/// A usage or domain error that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

struct CommonOptions {
  unsigned p = 2;
  int depth = 5;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--p", o.p, "Number of generators / p-adic base")->check(CLI::Range(2u, 64u));
  cmd->add_option("--depth", o.depth, "Truncation depth D")->check(CLI::Range(0, 24));
  cmd->add_option("--seed", o.seed, "Seed for pseudo-random cases");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv"}));
  cmd->add_option("--out", o.out_path, "Write output to a file instead of stdout");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open --out path " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

mpq_class parse_lambda2(const std::string& text) {
  try {
    mpq_class q(text, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("--lambda2 expects a rational num/den, got '" + text + "'");
  }
}

std::string render_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

std::vector<Word> words_up_to(unsigned p, int max_len) {
  std::vector<Word> out;
  for (int k = 0; k <= max_len; ++k) {
    const auto count = checked_power(p, static_cast<std::size_t>(k));
    for (std::uint64_t n = 0; n < count; ++n) out.push_back(Word::from_index(p, static_cast<std::size_t>(k), n));
  }
  return out;
}

int cmd_pair(const CommonOptions& o, const std::string& lhs_text, const std::string& rhs_text,
             const std::vector<std::string>& lambda2, std::ostream& fallback) {
  const StateSpec lhs = parse_state(lhs_text, o.p, o.depth);
  const XCombination rhs = parse_combination(rhs_text, o.p);
  if (rhs.max_length() > o.depth) throw UsageError("right-hand side is deeper than --depth");
  const GeometricSeriesValue series = pairing_series(lhs.coefficients, rhs);
  const GaussianRational exact = renormalized_limit(series);
  std::vector<std::pair<mpq_class, GaussianRational>> numeric;
  for (const auto& text : lambda2) {
    const mpq_class t = parse_lambda2(text);
    if (sgn(t) <= 0 || t >= static_cast<long>(o.p)) {
      throw UsageError("--lambda2 " + t.get_str() + " outside (0, p): the series diverges at L >= sqrt(p)");
    }
    numeric.emplace_back(t, series.prelimit_exact(t));
  }
  Output output(o.out_path, fallback);
  std::ostream& out = output.stream();
  if (o.format == "csv") {
    out << "quantity,value\n";
    out << "exact," << exact.to_string() << '\n';
    out << "polynomial_part," << series.polynomial_part().to_string() << '\n';
    out << "tail_constant," << series.tail_constant().to_string() << '\n';
    out << "tail_start," << series.tail_start() << '\n';
    for (const auto& [t, v] : numeric) {
      out << "prelimit@" << t.get_str() << ',' << v.to_string() << '\n';
      out << "prelimit_float@" << t.get_str() << ',' << render_complex(v.to_complex()) << '\n';
    }
    return kExitPass;
  }
  out << exact.to_string() << '\n';
  out << "# series: " << series.to_string() << '\n';
  for (const auto& [t, v] : numeric) {
    out << "# L^2=" << t.get_str() << " (1-L^2/p)<Psi,Phi> = " << v.to_string() << " = " << render_complex(v.to_complex())
        << '\n';
  }
  return kExitPass;
}

int cmd_gram(const CommonOptions& o, int max_len, std::ostream& fallback) {
  if (max_len < 0 || max_len > o.depth) throw UsageError("--max-len must lie in [0, depth]");
  const auto words = words_up_to(o.p, max_len);
  const int fock_depth = std::max(o.depth, max_len + 1);
  const std::size_t n = words.size();
  std::vector<std::vector<GaussianRational>> fock(n, std::vector<GaussianRational>(n));
  std::vector<std::vector<GaussianRational>> l2(n, std::vector<GaussianRational>(n));
  std::vector<TestFunction> images;
  images.reserve(n);
  for (const Word& w : words) images.push_back(phi(XCombination::single(w), max_len));
  bool all_zero = true;
  for (std::size_t a = 0; a < n; ++a) {
    const FockVector psi = build_x(words[a], fock_depth);
    for (std::size_t b = 0; b < n; ++b) {
      fock[a][b] = renormalized_pairing(psi, XCombination::single(words[b]));
      l2[a][b] = l2_inner(images[a], images[b]);
      all_zero = all_zero && fock[a][b] == l2[a][b];
    }
  }
  Output output(o.out_path, fallback);
  std::ostream& out = output.stream();
  auto emit = [&](const std::string& name, auto&& entry) {
    if (o.format == "csv") {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out << name << ',' << words[a].to_string() << ',' << words[b].to_string() << ',' << entry(a, b).to_string() << '\n';
        }
      }
      return;
    }
    out << "# " << name << '\n' << std::setw(8) << "";
    for (const Word& w : words) out << std::setw(8) << w.to_string();
    out << '\n';
    for (std::size_t a = 0; a < n; ++a) {
      out << std::setw(8) << words[a].to_string();
      for (std::size_t b = 0; b < n; ++b) out << std::setw(8) << entry(a, b).to_string();
      out << '\n';
    }
  };
  if (o.format == "csv") out << "matrix,row,col,value\n";
  emit("fock", [&](std::size_t a, std::size_t b) { return fock[a][b]; });
  emit("l2", [&](std::size_t a, std::size_t b) { return l2[a][b]; });
  emit("difference", [&](std::size_t a, std::size_t b) { return fock[a][b] - l2[a][b]; });
  if (o.format != "csv") out << "# difference all-zero: " << (all_zero ? "yes" : "no") << '\n';
  return all_zero ? kExitPass : kExitFailure;
}

std::vector<double> parse_eps_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    double eps = 0.0;
    try {
      std::size_t used = 0;
      eps = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--eps-grid: bad value '" + item + "'");
    }
    if (!(eps > 0.0) || !(eps < 1.0)) {
      throw UsageError("--eps-grid: eps=" + item + " must lie in (0, 1); eps = 0 is the divergence threshold L = sqrt(p)");
    }
    out.push_back(eps);
  }
  if (out.empty()) throw UsageError("--eps-grid is empty");
  return out;
}

int cmd_convergence(const CommonOptions& o, const std::string& lhs_text, const std::string& rhs_text,
                    const std::string& grid, std::ostream& fallback) {
  const std::vector<double> eps = parse_eps_grid(grid);
  const StateSpec lhs = parse_state(lhs_text, o.p, o.depth);
  const XCombination rhs = parse_combination(rhs_text, o.p);
  if (rhs.max_length() > o.depth) throw UsageError("right-hand side is deeper than --depth");
  const GeometricSeriesValue series = pairing_series(lhs.coefficients, rhs);
  const GaussianRational exact = renormalized_limit(series);
  Output output(o.out_path, fallback);
  std::ostream& out = output.stream();
  const bool csv = o.format == "csv";
  out << (csv ? "eps,lambda,prelimit,exact,abs_error\n" : "# eps lambda prelimit exact abs_error\n");
  for (double e : eps) {
    const double t = static_cast<double>(o.p) * (1.0 - e);
    const std::complex<double> value = series.prelimit(t);
    const double error = std::abs(value - exact.to_complex());
    const char sep = csv ? ',' : ' ';
    out << format_double(e) << sep << format_double(std::sqrt(t)) << sep << render_complex(value) << sep
        << exact.to_string() << sep << format_double(error) << '\n';
  }
  return kExitPass;
}

int cmd_verify(const CommonOptions& o, const std::string& suite, std::ostream& fallback) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  const Report report = run_suite(suite, SuiteOptions{o.p, o.depth, o.seed});
  Output output(o.out_path, fallback);
  report.render(output.stream());
  return report.passed() ? kExitPass : kExitFailure;
}

}  // namespace

XCombination parse_combination(std::string_view text, unsigned p) {
  XCombination out(p);
  std::size_t cursor = 0;
  std::size_t terms = 0;
  for (;;) {
    const std::size_t at = text.find("X:", cursor);
    if (at == std::string_view::npos) break;
    std::string coeff = trim(text.substr(cursor, at - cursor));
    bool negative = false;
    if (!coeff.empty() && (coeff.front() == '+' || coeff.front() == '-')) {
      negative = coeff.front() == '-';
      coeff = trim(std::string_view(coeff).substr(1));
    } else if (terms > 0) {
      throw std::invalid_argument("combination: expected '+' or '-' before term " + std::to_string(terms + 1));
    }
    if (!coeff.empty()) {
      if (coeff.back() != '*') throw std::invalid_argument("combination: expected '*' between coefficient and X");
      coeff = trim(std::string_view(coeff).substr(0, coeff.size() - 1));
    }
    GaussianRational c = coeff.empty() ? GaussianRational(1) : parse_gaussian(coeff);
    if (negative) c = -c;
    std::size_t end = at + 2;
    while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '.' || text[end] == 'e')) {
      ++end;
    }
    out.add(parse_word(p, text.substr(at + 2, end - at - 2)), c);
    cursor = end;
    ++terms;
  }
  if (terms == 0) throw std::invalid_argument("expected an X-combination such as 'X:01' or '2*X:0 - X:1', got '" + std::string(text) + "'");
  if (!trim(text.substr(cursor)).empty()) throw std::invalid_argument("trailing text after combination: '" + std::string(text.substr(cursor)) + "'");
  return out;
}

StateSpec parse_state(std::string_view text, unsigned p, int depth) {
  const std::string spec = trim(text);
  if (spec.rfind("delta:", 0) == 0) {
    const PAdicPoint x = parse_point(p, std::string_view(spec).substr(6));
    if (static_cast<int>(x.resolution()) < depth) {
      throw std::invalid_argument("delta:" + x.to_string() + " has resolution " + std::to_string(x.resolution()) +
                                  " below --depth " + std::to_string(depth));
    }
    return {spec, delta_disk_coefficients(x, depth), std::nullopt};
  }
  if (spec.rfind("gf:", 0) == 0) {
    DiskCoefficients dc = load_disk_coefficients(spec.substr(3));
    if (dc.p() != p) throw std::invalid_argument("gf file has p=" + std::to_string(dc.p()) + " but --p is " + std::to_string(p));
    return {spec, std::move(dc), std::nullopt};
  }
  XCombination v = parse_combination(spec, p);
  if (v.max_length() > depth) throw std::invalid_argument("combination deeper than --depth");
  return {spec, riesz_coefficients(v, depth), std::move(v)};
}

int run(std::span<const std::string_view> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free coherent states and generalized functions on the p-adic disk"};
  app.require_subcommand(1);
  CommonOptions common;

  auto* pair = app.add_subcommand("pair", "Renormalized pairing of a state with an X-combination");
  std::string lhs;
  std::string rhs;
  std::vector<std::string> lambda2;
  add_common(pair, common);
  pair->add_option("lhs", lhs, "X:<word>, delta:<digits>, gf:<path> or a combination")->required();
  pair->add_option("rhs", rhs, "X-combination")->required();
  pair->add_option("--lambda2", lambda2, "Rational L^2 values for the pre-limit (num/den)");

  auto* gram = app.add_subcommand("gram", "Fock-side and L2-side Gram matrices of X_I");
  int max_len = 2;
  add_common(gram, common);
  gram->add_option("--max-len", max_len, "Longest word in the basis");

  auto* conv = app.add_subcommand("convergence", "Pre-limit values as L^2 -> p");
  std::string grid = "1e-1,5e-2,2.5e-2,1.25e-2,6.25e-3,3.125e-3,1e-4,1e-6";
  add_common(conv, common);
  conv->add_option("lhs", lhs)->required();
  conv->add_option("rhs", rhs)->required();
  conv->add_option("--eps-grid", grid, "Comma-separated eps with L^2 = p(1 - eps)");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite;
  add_common(verify, common);
  verify->add_option("suite", suite, "ccr|cascade|xrelat|lemma2|corollary4|example6|lemma7|lemma10|intertwine|threshold|all")
      ->required();

  std::vector<std::string> argv;
  for (std::size_t i = args.size(); i-- > 1;) argv.emplace_back(args[i]);
  try {
    app.parse(std::move(argv));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*pair) return cmd_pair(common, lhs, rhs, lambda2, out);
    if (*gram) return cmd_gram(common, max_len, out);
    if (*conv) return cmd_convergence(common, lhs, rhs, grid, out);
    if (*verify) return cmd_verify(common, suite, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(std::span<const std::string_view> args) { return run(args, std::cout, std::cerr); }

}  // namespace fcs::cli
