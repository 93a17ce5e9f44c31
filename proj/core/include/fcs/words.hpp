#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fcs {

using Digit = std::uint32_t;

/// Finite digit string I = i_0 ... i_{k-1} over {0, ..., p-1}.
///
/// A Word is at once a Fock-space multi-index, the p-adic integer
/// sum_j i_j p^j, and the center of the disk of radius p^{-k}.
/// Digits are stored least significant first (i_0 first).
class Word {
 public:
  /// Throws std::invalid_argument if p < 2 or a digit is >= p.
  Word(unsigned p, std::vector<Digit> digits = {});
  /// Word of the given length whose p-adic value is `index`.
  static Word from_index(unsigned p, std::size_t length, std::uint64_t index);

  unsigned p() const { return p_; }
  std::size_t length() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit digit(std::size_t j) const { return digits_.at(j); }
  const std::vector<Digit>& digits() const { return digits_; }

  /// sum_j i_j p^j; throws std::overflow_error if the value exceeds 64 bits.
  std::uint64_t to_padic_integer() const;
  /// First m digits; throws std::out_of_range if m > length.
  Word prefix(std::size_t m) const;
  /// This word with digit d appended as the new last digit.
  Word appended(Digit d) const;
  /// The p words w.0, ..., w.(p-1).
  std::vector<Word> children() const;
  bool is_prefix_of(const Word& other) const;

  /// Lexicographic on the digit sequence, so a prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

  /// e for the empty word, concatenated digits for p <= 10, dot-separated otherwise.
  std::string to_string() const;

 private:
  unsigned p_;
  std::vector<Digit> digits_;
};

/// Orders words by length, then by p-adic value. This is the index order
/// used by dense level arrays and by every rendered table.
struct ShortlexOrder {
  bool operator()(const Word& a, const Word& b) const;
};

/// Largest c with prefix(u, c) == prefix(v, c). Throws on p mismatch.
std::size_t common_prefix_len(const Word& u, const Word& v);

/// Parses a word literal (`011`, `e`, or `1.10.3` for p > 10).
Word parse_word(unsigned p, std::string_view text);

/// First D digits of a p-adic integer.
class PAdicPoint {
 public:
  /// Throws std::invalid_argument for empty digits or digits >= p.
  PAdicPoint(unsigned p, std::vector<Digit> digits);

  unsigned p() const { return p_; }
  std::size_t resolution() const { return digits_.size(); }
  const std::vector<Digit>& digits() const { return digits_; }
  /// I_k = i_0 ... i_{k-1}; throws std::out_of_range if k > resolution.
  Word truncation(std::size_t k) const;

  friend bool operator==(const PAdicPoint& a, const PAdicPoint& b) = default;
  std::string to_string() const;

 private:
  unsigned p_;
  std::vector<Digit> digits_;
};

PAdicPoint parse_point(unsigned p, std::string_view text);

/// Disk D(center, p^{-k}) with k = center length.
class Disk {
 public:
  explicit Disk(Word center) : center_(std::move(center)) {}
  const Word& center() const { return center_; }
  std::size_t radius_exponent() const { return center_.length(); }
  unsigned p() const { return center_.p(); }

 private:
  Word center_;
};

/// True iff the first k digits of x equal the center. Throws
/// std::invalid_argument when the resolution of x is below k or p differs.
bool ball_contains(const Disk& d, const PAdicPoint& x);

/// p^k, throwing std::overflow_error past 64 bits.
std::uint64_t checked_power(unsigned p, std::size_t k);

}  // namespace fcs
