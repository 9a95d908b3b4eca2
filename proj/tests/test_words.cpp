#include <doctest.h>

#include "hopfelim/error.hpp"
#include "hopfelim/random.hpp"
#include "hopfelim/words.hpp"
#include "oracles.hpp"

using namespace hopfelim;

namespace {

oracle::Letters letters_of(const Word& w) { return oracle::Letters(w.begin(), w.end()); }

AlphabetPtr graded(const std::vector<int>& degrees) {
  std::vector<LetterInfo> letters;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    LetterInfo info;
    info.symbol = "u" + std::to_string(i);
    info.part = Part::U;
    info.degree = degrees[i];
    letters.push_back(info);
  }
  return std::make_shared<const Alphabet>(std::move(letters));
}

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet::plain({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet::plain({""}), Error);
  CHECK_THROWS_AS(Alphabet::mixed({"v"}, {"v"}), Error);
  const AlphabetPtr m = Alphabet::mixed({"v1", "v2"}, {"s"});
  CHECK(m->part(0) == Part::V);
  CHECK(m->part(2) == Part::W);
  CHECK(*m->find("v2") == 1);
  CHECK(!m->find("x"));
}

TEST_CASE("reading words by longest match") {
  const AlphabetPtr a = Alphabet::plain({"a", "ab", "b"});
  CHECK(a->word("aba") == Word{1, 0});
  CHECK(a->word("a * b") == Word{0, 2});
  CHECK(a->word("").empty());
  CHECK_THROWS_AS(a->word("c"), Error);
  CHECK(a->symbols(Word{1, 2}) == std::vector<std::string>{"ab", "b"});
}

TEST_CASE("is_lyndon examples") {
  const AlphabetPtr a = Alphabet::plain({"a", "b"});
  CHECK(is_lyndon(a->word("a")));
  CHECK(is_lyndon(a->word("ab")));
  CHECK(!is_lyndon(a->word("ba")));
  CHECK(!is_lyndon(a->word("aa")));
  CHECK_THROWS_AS(is_lyndon(Word{}), Error);
}

TEST_CASE("is_lyndon agrees with the rotation oracle on all short words") {
  const AlphabetPtr a = Alphabet::plain({"a", "b", "c"});
  for (const Word& w : all_words(all_letters(*a), 6)) {
    if (w.empty()) continue;
    CHECK(is_lyndon(w) == oracle::is_lyndon(letters_of(w)));
  }
}

TEST_CASE("lyndon_words examples") {
  const AlphabetPtr ab = Alphabet::plain({"a", "b"});
  CHECK(lyndon_words(*ab, 2) == std::vector<Word>{ab->word("a"), ab->word("b"), ab->word("ab")});
  CHECK(lyndon_words(*ab, 3) ==
        std::vector<Word>{ab->word("a"), ab->word("b"), ab->word("ab"), ab->word("aab"), ab->word("abb")});
  const AlphabetPtr single = Alphabet::plain({"a"});
  CHECK(lyndon_words(*single, 4) == std::vector<Word>{single->word("a")});
}

TEST_CASE("lyndon_words equals the filtered enumeration") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> syms;
    for (int i = 0; i < k; ++i) syms.push_back(std::string(1, static_cast<char>('a' + i)));
    const AlphabetPtr a = Alphabet::plain(syms);
    const int max = k == 3 ? 6 : 8;
    std::vector<Word> expected;
    for (int n = 1; n <= max; ++n) {
      std::vector<Word> layer;
      for (const auto& w : oracle::words_of_length(static_cast<std::uint32_t>(k), n)) {
        if (oracle::is_lyndon(w)) layer.push_back(Word(std::vector<LetterId>(w.begin(), w.end())));
      }
      std::sort(layer.begin(), layer.end());
      expected.insert(expected.end(), layer.begin(), layer.end());
    }
    CHECK(lyndon_words(*a, max) == expected);
  }
}

TEST_CASE("graded lyndon_words equals the filtered enumeration") {
  const AlphabetPtr a = graded({1, 2, 2, 3});
  std::vector<Word> expected;
  for (int n = 1; n <= 7; ++n) {
    std::vector<Word> layer;
    for (const auto& w : oracle::graded_words({1, 2, 2, 3}, n)) {
      if (oracle::is_lyndon(w)) layer.push_back(Word(std::vector<LetterId>(w.begin(), w.end())));
    }
    std::sort(layer.begin(), layer.end());
    expected.insert(expected.end(), layer.begin(), layer.end());
  }
  CHECK(lyndon_words(*a, 7) == expected);
}

TEST_CASE("standard_factorization examples") {
  const AlphabetPtr a = Alphabet::plain({"a", "b"});
  CHECK(standard_factorization(a->word("ab")) == std::pair{a->word("a"), a->word("b")});
  CHECK(standard_factorization(a->word("aab")) == std::pair{a->word("a"), a->word("ab")});
  CHECK(standard_factorization(a->word("aabab")) == std::pair{a->word("aab"), a->word("ab")});
  CHECK_THROWS_AS(standard_factorization(a->word("a")), Error);
  CHECK_THROWS_AS(standard_factorization(a->word("ba")), Error);
}

TEST_CASE("standard_factorization keeps the longest Lyndon suffix") {
  const AlphabetPtr a = Alphabet::plain({"a", "b", "c"});
  for (const Word& w : lyndon_words(*a, 7)) {
    if (w.size() < 2) continue;
    const auto [u, v] = standard_factorization(w);
    const auto [ou, ov] = oracle::longest_suffix_split(letters_of(w));
    CHECK(letters_of(u) == ou);
    CHECK(letters_of(v) == ov);
    CHECK(is_lyndon(u));
    CHECK(is_lyndon(v));
    CHECK(u < v);
    CHECK(u + v == w);
  }
}

TEST_CASE("witt_dimension examples") {
  CHECK(witt_dimension(2, 1) == 2);
  CHECK(witt_dimension(2, 3) == 2);
  CHECK(witt_dimension(2, 5) == 6);
  CHECK(witt_dimension(1, 1) == 1);
  CHECK(witt_dimension(1, 2) == 0);
}

TEST_CASE("witt_dimension matches brute-force counts") {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 8; ++n) CHECK(witt_dimension(static_cast<int>(k), n) == oracle::lyndon_count(k, n));
  }
}

TEST_CASE("graded_lyndon_count examples") {
  const AlphabetPtr ab = Alphabet::plain({"a", "b"});
  CHECK(graded_lyndon_count(*ab, 4) == 3);
  // Only u0 u1 has degree 3 over {u0:1, u1:2}; a degree-3 letter adds one more.
  CHECK(graded_lyndon_count(*graded({1, 2}), 3) == 1);
  CHECK(graded_lyndon_count(*graded({1, 2, 3}), 3) == 2);
  CHECK(graded_lyndon_count(*graded({1, 1, 2, 3}), 1) == 2);
}

TEST_CASE("graded_lyndon_count matches enumeration") {
  const std::vector<int> degrees = {1, 1, 2, 2, 3};
  const AlphabetPtr a = graded(degrees);
  for (int n = 1; n <= 7; ++n) CHECK(graded_lyndon_count(*a, n) == oracle::graded_lyndon_count(degrees, n));
}

TEST_CASE("Lyndon degrees factor the word generating function") {
  const int order = 8;
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> syms;
    for (int i = 0; i < k; ++i) syms.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<int> degrees;
    for (const Word& w : lyndon_words(*Alphabet::plain(syms), order)) degrees.push_back(static_cast<int>(w.size()));
    const auto series = oracle::pbw_series(degrees, order);
    Rational power(1);
    for (int n = 0; n <= order; ++n) {
      CHECK(series[static_cast<std::size_t>(n)] == power);
      power *= Rational(k);
    }
  }
}
