#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hopfelim {

using LetterId = std::uint32_t;

// Which generating space a letter belongs to. The numeric order is also the
// required order of letters inside an alphabet.
enum class Part : std::uint8_t { V = 0, W = 1, U = 2 };

/// A finite sequence of letters; the empty word is the unit.
///
/// Words compare lexicographically by letter id with a proper prefix smaller
/// than its extensions, which is the order Lyndon theory needs.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<LetterId> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<LetterId> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  LetterId operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const LetterId> letters() const { return letters_; }

  void push_back(LetterId l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  Word& append(const Word& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }

  Word sub(std::size_t pos, std::size_t len = std::string_view::npos) const;
  Word reversed() const;

  friend Word operator+(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<LetterId> letters_;
};

using WordPair = std::pair<Word, Word>;

struct LetterInfo {
  std::string symbol;
  Part part = Part::W;
  int degree = 1;
  // Set for U-letters only: the defining W-word and V-letter, as ids in
  // the mixed alphabet the U-letter was derived from.
  Word alpha;
  LetterId v = 0;

  friend bool operator==(const LetterInfo&, const LetterInfo&) = default;
};

/// Ordered generator set. Letter order is list order; V-letters come before
/// W-letters, which come before U-letters.
class Alphabet {
 public:
  explicit Alphabet(std::vector<LetterInfo> letters);

  // A plain alphabet of degree-1 letters, e.g. {a, b} for tests of T(W).
  static std::shared_ptr<const Alphabet> plain(const std::vector<std::string>& symbols);
  static std::shared_ptr<const Alphabet> mixed(const std::vector<std::string>& v_symbols,
                                               const std::vector<std::string>& w_symbols);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const LetterInfo& letter(LetterId id) const { return letters_.at(id); }
  const std::vector<LetterInfo>& letters() const { return letters_; }
  Part part(LetterId id) const { return letters_.at(id).part; }
  std::optional<LetterId> find(std::string_view symbol) const;

  int degree(LetterId id) const { return letters_.at(id).degree; }
  int degree(const Word& w) const;
  // Per-letter occurrence counts, indexed by letter id.
  std::vector<int> multidegree(const Word& w) const;
  bool all_degree_one() const { return all_degree_one_; }
  bool contains(const Word& w) const;

  // Reads a word by greedy longest-match of letter symbols; spaces and '*'
  // are ignored as separators. Throws InvalidArgument on unknown input.
  Word word(std::string_view text) const;
  std::vector<std::string> symbols(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<LetterInfo> letters_;
  std::unordered_map<std::string, LetterId> by_symbol_;
  std::size_t longest_symbol_ = 0;
  bool all_degree_one_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// True iff w is strictly smaller than each of its proper rotations.
/// Throws EmptyWord on the empty word.
bool is_lyndon(const Word& w);

/// All Lyndon words of total degree <= max_degree, ordered by degree and
/// then lexicographically.
std::vector<Word> lyndon_words(const Alphabet& alphabet, int max_degree);

/// w = u v with v the longest proper Lyndon suffix.
/// Throws NotFactorizable unless w is Lyndon of length >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Number of Lyndon words of length n on k letters (Witt's formula).
std::int64_t witt_dimension(int k, int n);

/// Number of Lyndon words of total degree exactly n over a graded alphabet.
std::int64_t graded_lyndon_count(const Alphabet& alphabet, int n);

}  // namespace hopfelim
