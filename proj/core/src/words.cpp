#include "fcs/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fcs {

namespace {

void check_digits(unsigned p, const std::vector<Digit>& digits) {
  if (p < 2) throw std::invalid_argument("branching factor p must be >= 2");
  for (Digit d : digits) {
    if (d >= p) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for p=" + std::to_string(p));
    }
  }
}

std::string render_digits(unsigned p, const std::vector<Digit>& digits) {
  if (digits.empty()) return "e";
  std::string out;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (p > 10) {
      if (j > 0) out += '.';
      out += std::to_string(digits[j]);
    } else {
      out += static_cast<char>('0' + digits[j]);
    }
  }
  return out;
}

std::vector<Digit> parse_digits(unsigned p, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty word literal (use 'e' for the empty word)");
  if (text == "e") return {};
  std::vector<Digit> digits;
  if (text.find('.') != std::string_view::npos || p > 10) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t stop = std::min(text.find('.', start), text.size());
      const std::string_view part = text.substr(start, stop - start);
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw std::invalid_argument("bad word literal '" + std::string(text) + "'");
      }
      digits.push_back(static_cast<Digit>(std::stoul(std::string(part))));
      start = stop + 1;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad word literal '" + std::string(text) + "'");
      }
      digits.push_back(static_cast<Digit>(c - '0'));
    }
  }
  check_digits(p, digits);
  return digits;
}

}  // namespace

Word::Word(unsigned p, std::vector<Digit> digits) : p_(p), digits_(std::move(digits)) { check_digits(p_, digits_); }

Word Word::from_index(unsigned p, std::size_t length, std::uint64_t index) {
  std::vector<Digit> digits(length);
  for (std::size_t j = 0; j < length; ++j) {
    digits[j] = static_cast<Digit>(index % p);
    index /= p;
  }
  if (index != 0) throw std::out_of_range("Word::from_index: index exceeds p^length");
  return Word(p, std::move(digits));
}

std::uint64_t checked_power(unsigned p, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) throw std::overflow_error("p^k exceeds 64 bits");
    r *= p;
  }
  return r;
}

std::uint64_t Word::to_padic_integer() const {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (value > (max - *it) / p_) throw std::overflow_error("p-adic value of " + to_string() + " exceeds 64 bits");
    value = value * p_ + *it;
  }
  return value;
}

Word Word::prefix(std::size_t m) const {
  if (m > digits_.size()) {
    throw std::out_of_range("Word::prefix: m=" + std::to_string(m) + " exceeds length " + std::to_string(length()));
  }
  return Word(p_, std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(m)));
}

Word Word::appended(Digit d) const {
  if (d >= p_) throw std::invalid_argument("Word::appended: digit out of range");
  Word out = *this;
  out.digits_.push_back(d);
  return out;
}

std::vector<Word> Word::children() const {
  std::vector<Word> out;
  out.reserve(p_);
  for (Digit d = 0; d < p_; ++d) out.push_back(appended(d));
  return out;
}

bool Word::is_prefix_of(const Word& other) const {
  return p_ == other.p_ && length() <= other.length() &&
         std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.digits_.begin(), a.digits_.end(), b.digits_.begin(),
                                                b.digits_.end());
}

std::string Word::to_string() const { return render_digits(p_, digits_); }

bool ShortlexOrder::operator()(const Word& a, const Word& b) const {
  if (a.p() != b.p()) return a.p() < b.p();
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& x = a.digits();
  const auto& y = b.digits();
  for (std::size_t j = x.size(); j-- > 0;) {
    if (x[j] != y[j]) return x[j] < y[j];
  }
  return false;
}

std::size_t common_prefix_len(const Word& u, const Word& v) {
  if (u.p() != v.p()) throw std::invalid_argument("common_prefix_len: p mismatch");
  const std::size_t n = std::min(u.length(), v.length());
  std::size_t c = 0;
  while (c < n && u.digits()[c] == v.digits()[c]) ++c;
  return c;
}

Word parse_word(unsigned p, std::string_view text) { return Word(p, parse_digits(p, text)); }

PAdicPoint::PAdicPoint(unsigned p, std::vector<Digit> digits) : p_(p), digits_(std::move(digits)) {
  check_digits(p_, digits_);
  if (digits_.empty()) throw std::invalid_argument("PAdicPoint: resolution must be >= 1");
}

Word PAdicPoint::truncation(std::size_t k) const {
  if (k > digits_.size()) {
    throw std::out_of_range("PAdicPoint::truncation: k=" + std::to_string(k) + " exceeds resolution " +
                            std::to_string(resolution()));
  }
  return Word(p_, std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::string PAdicPoint::to_string() const { return render_digits(p_, digits_); }

PAdicPoint parse_point(unsigned p, std::string_view text) {
  if (text == "e") throw std::invalid_argument("PAdicPoint: resolution must be >= 1");
  return PAdicPoint(p, parse_digits(p, text));
}

bool ball_contains(const Disk& d, const PAdicPoint& x) {
  if (d.p() != x.p()) throw std::invalid_argument("ball_contains: p mismatch");
  const std::size_t k = d.radius_exponent();
  if (x.resolution() < k) {
    throw std::invalid_argument("ball_contains: point resolution " + std::to_string(x.resolution()) +
                                " below disk radius exponent " + std::to_string(k));
  }
  return std::equal(d.center().digits().begin(), d.center().digits().end(), x.digits().begin());
}

}  // namespace fcs
