#include "unit_support.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fcs/random.hpp"

using namespace fcs;
using fcs::testing::w;

TEST_CASE("to_padic_integer sums digits least significant first") {
  CHECK(Word(2, {0, 1}).to_padic_integer() == 2);
  CHECK(Word(3, {}).to_padic_integer() == 0);
  CHECK(Word(5, {4, 0, 3}).to_padic_integer() == 79);
}

TEST_CASE("from_index inverts to_padic_integer") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (std::size_t len = 0; len <= 4; ++len) {
      const auto n = checked_power(p, len);
      for (std::uint64_t i = 0; i < n; ++i) {
        const Word x = Word::from_index(p, len, i);
        CHECK(x.length() == len);
        CHECK(x.to_padic_integer() == i);
      }
    }
  }
  CHECK_THROWS_AS(Word::from_index(2, 2, 4), std::out_of_range);
}

TEST_CASE("to_padic_integer overflow") {
  CHECK(Word(2, std::vector<Digit>(64, 1)).to_padic_integer() == ~std::uint64_t{0});
  std::vector<Digit> high(64, 0);
  high.push_back(1);
  CHECK_THROWS_AS(Word(2, high).to_padic_integer(), std::overflow_error);
  CHECK(Word(2, std::vector<Digit>(70, 0)).to_padic_integer() == 0);
  CHECK_THROWS_AS(Word(3, std::vector<Digit>(41, 2)).to_padic_integer(), std::overflow_error);
  CHECK(Word(3, std::vector<Digit>(40, 2)).to_padic_integer() == checked_power(3, 40) - 1);
  CHECK(Word(2, std::vector<Digit>(63, 1)).to_padic_integer() == (std::uint64_t{1} << 63) - 1);
}

TEST_CASE("word construction rejects bad digits") {
  CHECK_THROWS_AS(Word(2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Word(1, {}), std::invalid_argument);
}

TEST_CASE("prefix") {
  const Word x(2, {0, 1, 1});
  CHECK(x.prefix(2) == Word(2, {0, 1}));
  CHECK(x.prefix(0) == Word(2, {}));
  CHECK(x.prefix(3) == x);
  CHECK_THROWS_AS(x.prefix(4), std::out_of_range);
}

TEST_CASE("children") {
  CHECK(Word(2, {}).children() == std::vector<Word>{Word(2, {0}), Word(2, {1})});
  CHECK(Word(2, {1}).children() == std::vector<Word>{Word(2, {1, 0}), Word(2, {1, 1})});
  CHECK(Word(3, {2}).children() == std::vector<Word>{Word(3, {2, 0}), Word(3, {2, 1}), Word(3, {2, 2})});
}

TEST_CASE("children partition the next level by p-adic value") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (const Word& x : fcs::testing::all_words(p, 2)) {
      std::set<std::uint64_t> seen;
      for (const Word& c : x.children()) {
        CHECK(c.prefix(x.length()) == x);
        // appending a last digit d adds d p^|x|
        CHECK((c.to_padic_integer() - x.to_padic_integer()) % checked_power(p, x.length()) == 0);
        seen.insert(c.to_padic_integer());
      }
      CHECK(seen.size() == p);
    }
  }
}

TEST_CASE("common_prefix_len") {
  CHECK(common_prefix_len(Word(2, {0, 1, 1}), Word(2, {0, 1, 0})) == 2);
  CHECK(common_prefix_len(Word(2, {1}), Word(2, {0})) == 0);
  CHECK(common_prefix_len(Word(2, {0, 1}), Word(2, {0, 1})) == 2);
  CHECK(common_prefix_len(Word(2, {0}), Word(2, {0, 1, 1})) == 1);
  CHECK_THROWS_AS(common_prefix_len(Word(2, {0}), Word(3, {0})), std::invalid_argument);
}

TEST_CASE("common_prefix_len against a digit-by-digit oracle") {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = random_word(3, static_cast<std::size_t>(rng.below(6)), rng);
    const Word v = random_word(3, static_cast<std::size_t>(rng.below(6)), rng);
    std::size_t c = 0;
    while (c < std::min(u.length(), v.length()) && u.digit(c) == v.digit(c)) ++c;
    CHECK(common_prefix_len(u, v) == c);
    CHECK(u.prefix(c) == v.prefix(c));
  }
}

TEST_CASE("ball_contains") {
  const PAdicPoint x(2, {0, 1, 1, 1});
  CHECK(ball_contains(Disk(Word(2, {0})), x));
  CHECK_FALSE(ball_contains(Disk(Word(2, {1})), x));
  CHECK(ball_contains(Disk(Word(2, {})), x));
  CHECK(ball_contains(Disk(Word(2, {})), PAdicPoint(2, {1})));
  CHECK_THROWS_AS(ball_contains(Disk(Word(2, {0, 1, 1, 1, 0})), x), std::invalid_argument);
}

TEST_CASE("ball_contains agrees with the truncation") {
  SeededRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const PAdicPoint x = random_point(5, 6, rng);
    const Word c = random_word(5, static_cast<std::size_t>(rng.below(4)), rng);
    CHECK(ball_contains(Disk(c), x) == (x.truncation(c.length()) == c));
  }
}

TEST_CASE("word literals") {
  CHECK(w(2, "011") == Word(2, {0, 1, 1}));
  CHECK(w(2, "e") == Word(2, {}));
  CHECK_THROWS_AS(parse_word(2, ""), std::invalid_argument);
  CHECK(Word(2, {}).to_string() == "e");
  CHECK(Word(3, {2, 0}).to_string() == "20");
  CHECK(Word(11, {10, 3}).to_string() == "10.3");
  CHECK(parse_word(11, "10.3") == Word(11, {10, 3}));
  CHECK_THROWS_AS(parse_word(2, "012"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(2, "0a"), std::invalid_argument);
}

TEST_CASE("point literals and truncation") {
  const PAdicPoint x = parse_point(2, "0111");
  CHECK(x.resolution() == 4);
  CHECK(x.truncation(0) == Word(2, {}));
  CHECK(x.truncation(2) == Word(2, {0, 1}));
  CHECK_THROWS_AS(x.truncation(5), std::out_of_range);
  CHECK(x.to_string() == "0111");
  CHECK_THROWS_AS(PAdicPoint(2, {}), std::invalid_argument);
}

TEST_CASE("shortlex order") {
  ShortlexOrder less;
  CHECK(less(w(2, "e"), w(2, "1")));
  CHECK(less(w(2, "1"), w(2, "00")));
  CHECK(less(w(2, "10"), w(2, "01")));  // 10 has value 1, 01 has value 2
  CHECK_FALSE(less(w(2, "01"), w(2, "01")));
  auto words = fcs::testing::all_words(2, 2);
  std::vector<std::string> names;
  for (const Word& x : words) names.push_back(x.to_string());
  CHECK(names == std::vector<std::string>{"e", "0", "1", "00", "10", "01", "11"});
}

TEST_CASE("lexicographic order puts prefixes first") {
  CHECK(w(2, "0") < w(2, "01"));
  CHECK(w(2, "01") < w(2, "1"));
  CHECK(w(2, "e") < w(2, "0"));
}

TEST_CASE("checked_power") {
  CHECK(checked_power(3, 4) == 81);
  CHECK(checked_power(2, 63) == std::uint64_t{1} << 63);
  CHECK_THROWS_AS(checked_power(2, 64), std::overflow_error);
}

TEST_CASE("to_padic_integer is a bijection onto 0..p^k-1 and siblings split after the parent") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (int k = 0; k <= 3; ++k) {
      std::set<std::uint64_t> image;
      // enumerate words digit by digit rather than through from_index
      std::vector<Word> level{Word(p, {})};
      for (int j = 0; j < k; ++j) {
        std::vector<Word> next;
        for (const Word& x : level) {
          for (Digit d = 0; d < p; ++d) next.push_back(x.appended(d));
        }
        level = std::move(next);
      }
      for (const Word& x : level) image.insert(x.to_padic_integer());
      CHECK(image.size() == level.size());
      CHECK(*image.begin() == 0);
      CHECK(*image.rbegin() == checked_power(p, static_cast<std::size_t>(k)) - 1);
    }
    for (const Word& x : fcs::testing::all_words(p, 2)) {
      const auto kids = x.children();
      for (std::size_t a = 0; a < kids.size(); ++a) {
        CHECK(common_prefix_len(kids[a], x) >= x.length());
        for (std::size_t b = a + 1; b < kids.size(); ++b) CHECK(common_prefix_len(kids[a], kids[b]) == x.length());
      }
    }
  }
}
