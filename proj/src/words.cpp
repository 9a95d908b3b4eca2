#include "hopfelim/words.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include <gmpxx.h>

#include "hopfelim/error.hpp"

namespace hopfelim {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::NotFactorizable: return "NotFactorizable";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::NotInHopfSubalgebra: return "NotInHopfSubalgebra";
    case ErrorKind::NotALieElement: return "NotALieElement";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<LetterId>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::reversed() const { return Word(std::vector<LetterId>(letters_.rbegin(), letters_.rend())); }

Alphabet::Alphabet(std::vector<LetterInfo> letters) : letters_(std::move(letters)) {
  if (letters_.size() > std::numeric_limits<LetterId>::max()) {
    throw Error(ErrorKind::InvalidArgument, "alphabet too large");
  }
  Part previous = Part::V;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (l.symbol.empty()) throw Error(ErrorKind::InvalidArgument, "empty letter symbol");
    if (l.part < previous) {
      throw Error(ErrorKind::InvalidArgument, "letters must be ordered V, then W, then U");
    }
    previous = l.part;
    if (l.degree < 1) throw Error(ErrorKind::InvalidArgument, "letter degree must be positive");
    if (l.part != Part::U && l.degree != 1) {
      throw Error(ErrorKind::InvalidArgument, "V- and W-letters have degree 1");
    }
    if (!by_symbol_.emplace(l.symbol, static_cast<LetterId>(i)).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate letter symbol '" + l.symbol + "'");
    }
    longest_symbol_ = std::max(longest_symbol_, l.symbol.size());
    all_degree_one_ = all_degree_one_ && l.degree == 1;
  }
}

AlphabetPtr Alphabet::plain(const std::vector<std::string>& symbols) {
  std::vector<LetterInfo> letters;
  for (const auto& s : symbols) letters.push_back({s, Part::W, 1, {}, 0});
  return std::make_shared<const Alphabet>(std::move(letters));
}

AlphabetPtr Alphabet::mixed(const std::vector<std::string>& v_symbols,
                            const std::vector<std::string>& w_symbols) {
  std::vector<LetterInfo> letters;
  for (const auto& s : v_symbols) letters.push_back({s, Part::V, 1, {}, 0});
  for (const auto& s : w_symbols) letters.push_back({s, Part::W, 1, {}, 0});
  return std::make_shared<const Alphabet>(std::move(letters));
}

std::optional<LetterId> Alphabet::find(std::string_view symbol) const {
  auto it = by_symbol_.find(std::string(symbol));
  if (it == by_symbol_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::degree(const Word& w) const {
  if (all_degree_one_) return static_cast<int>(w.size());
  int d = 0;
  for (LetterId l : w) d += degree(l);
  return d;
}

std::vector<int> Alphabet::multidegree(const Word& w) const {
  std::vector<int> counts(letters_.size(), 0);
  for (LetterId l : w) ++counts.at(l);
  return counts;
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](LetterId l) { return l < letters_.size(); });
}

Word Alphabet::word(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '*') {
      ++pos;
      continue;
    }
    bool matched = false;
    for (std::size_t len = std::min(longest_symbol_, text.size() - pos); len > 0; --len) {
      if (auto id = find(text.substr(pos, len))) {
        w.push_back(*id);
        pos += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorKind::InvalidArgument,
                  "no letter matches '" + std::string(text.substr(pos)) + "'");
    }
  }
  return w;
}

std::vector<std::string> Alphabet::symbols(const Word& w) const {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (LetterId l : w) out.push_back(letter(l).symbol);
  return out;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool is_lyndon(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw Error(ErrorKind::EmptyWord, "Lyndon test on the empty word");
  auto letters = w.letters();
  for (std::size_t r = 1; r < n; ++r) {
    // Compare w with its rotation starting at r.
    for (std::size_t i = 0; i < n; ++i) {
      LetterId a = letters[i];
      LetterId b = letters[(r + i) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // rotation equals w
    }
  }
  return true;
}

namespace {

// Duval's algorithm: Lyndon words of length <= n over k letters, in
// lexicographic order.
std::vector<Word> duval(LetterId k, std::size_t n) {
  std::vector<Word> out;
  if (k == 0 || n == 0) return out;
  std::vector<LetterId> w{0};
  while (!w.empty()) {
    out.emplace_back(w);
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

// Depth-first enumeration of words with total degree <= max_degree whose
// letters are all >= their first letter (a necessary condition for Lyndon).
void enumerate_graded(const Alphabet& a, int max_degree,
                      const std::function<void(const Word&, int)>& visit) {
  Word current;
  std::function<void(int)> rec = [&](int deg) {
    visit(current, deg);
    const LetterId first = current.empty() ? 0 : current[0];
    for (LetterId l = first; l < a.size(); ++l) {
      const int d = a.degree(l);
      if (deg + d > max_degree) continue;
      current.push_back(l);
      rec(deg + d);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Word> lyndon_words(const Alphabet& alphabet, int max_degree) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "max_degree must be >= 1");
  std::vector<Word> out;
  if (alphabet.all_degree_one()) {
    out = duval(static_cast<LetterId>(alphabet.size()), static_cast<std::size_t>(max_degree));
  } else {
    enumerate_graded(alphabet, max_degree, [&](const Word& w, int) {
      if (!w.empty() && is_lyndon(w)) out.push_back(w);
    });
  }
  std::stable_sort(out.begin(), out.end(), [&](const Word& x, const Word& y) {
    const int dx = alphabet.degree(x), dy = alphabet.degree(y);
    return dx != dy ? dx < dy : x < y;
  });
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w)) {
    throw Error(ErrorKind::NotFactorizable, "standard factorization needs a Lyndon word of length >= 2");
  }
  // For a Lyndon word the longest proper Lyndon suffix is its
  // lexicographically smallest proper suffix.
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(i), w.end(),
                                     w.begin() + static_cast<std::ptrdiff_t>(best), w.end())) {
      best = i;
    }
  }
  return {w.sub(0, best), w.sub(best)};
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::int64_t witt_dimension(int k, int n) {
  if (k < 0 || n < 1) throw Error(ErrorKind::InvalidArgument, "witt_dimension needs k >= 0, n >= 1");
  mpz_class sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n / d));
    sum += mobius(d) * power;
  }
  sum /= n;
  if (!sum.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "Witt dimension overflows int64");
  return sum.get_si();
}

std::int64_t graded_lyndon_count(const Alphabet& alphabet, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "graded_lyndon_count needs n >= 1");
  std::int64_t count = 0;
  enumerate_graded(alphabet, n, [&](const Word& w, int deg) {
    if (deg == n && is_lyndon(w)) ++count;
  });
  return count;
}

}  // namespace hopfelim
