#pragma once

#include <vector>

#include "hopfelim/exec.hpp"
#include "hopfelim/lincomb.hpp"
#include "hopfelim/rational.hpp"
#include "hopfelim/words.hpp"

namespace hopfelim {

/// Element of the tensor algebra T(A) over a fixed alphabet A: a sparse
/// combination of words. The unit is the empty word.
class TensorElement {
 public:
  explicit TensorElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  TensorElement(AlphabetPtr alphabet, LinComb<Word> body);

  static TensorElement one(AlphabetPtr alphabet) { return scalar(std::move(alphabet), 1); }
  static TensorElement scalar(AlphabetPtr alphabet, const Rational& c);
  static TensorElement letter(AlphabetPtr alphabet, LetterId id, const Rational& c = 1);
  static TensorElement word(AlphabetPtr alphabet, Word w, const Rational& c = 1);
  // The word is read with Alphabet::word.
  static TensorElement word(AlphabetPtr alphabet, std::string_view text, const Rational& c = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const LinComb<Word>& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  std::size_t size() const { return body_.size(); }
  auto begin() const { return body_.begin(); }
  auto end() const { return body_.end(); }
  Rational coefficient(const Word& w) const { return body_.coefficient(w); }
  int max_degree() const;

  void add(const Word& w, const Rational& c) { body_.add(w, c); }
  void add(Word&& w, const Rational& c) { body_.add(std::move(w), c); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& c) {
    body_ *= c;
    return *this;
  }

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator-(TensorElement a) { return a *= Rational(-1); }
  friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return same_alphabet(a.alphabet_, b.alphabet_) && a.body_ == b.body_;
  }

 private:
  AlphabetPtr alphabet_;
  LinComb<Word> body_;
};

/// Element of T(A) (x) T(A), as a combination of word pairs. Products are
/// taken slot-wise without graded signs.
class TensorPair {
 public:
  explicit TensorPair(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  TensorPair(AlphabetPtr alphabet, LinComb<WordPair> body)
      : alphabet_(std::move(alphabet)), body_(std::move(body)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const LinComb<WordPair>& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  std::size_t size() const { return body_.size(); }
  auto begin() const { return body_.begin(); }
  auto end() const { return body_.end(); }

  void add(const WordPair& p, const Rational& c) { body_.add(p, c); }
  void add(WordPair&& p, const Rational& c) { body_.add(std::move(p), c); }

  TensorPair& operator+=(const TensorPair& o);
  TensorPair& operator-=(const TensorPair& o);
  friend TensorPair operator+(TensorPair a, const TensorPair& b) { return a += b; }
  friend TensorPair operator-(TensorPair a, const TensorPair& b) { return a -= b; }
  friend TensorPair operator*(const TensorPair& a, const TensorPair& b);
  friend bool operator==(const TensorPair& a, const TensorPair& b) {
    return same_alphabet(a.alphabet_, b.alphabet_) && a.body_ == b.body_;
  }

 private:
  AlphabetPtr alphabet_;
  LinComb<WordPair> body_;
};

// x (x) y for elements of T(A).
TensorPair tensor(const TensorElement& x, const TensorElement& y);

// Throws AlphabetMismatch unless both alphabets agree.
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

TensorElement concat_product(const TensorElement& x, const TensorElement& y,
                             Exec exec = Exec::parallel);

/// Unshuffle coproduct: each letter is primitive and the map is extended
/// multiplicatively.
TensorPair coproduct(const TensorElement& x, Exec exec = Exec::parallel);

Rational counit(const TensorElement& x);

/// S(l1...ln) = (-1)^n ln...l1.
TensorElement antipode(const TensorElement& x);

// n-fold diagonal: a combination of (n+1)-tuples of words.
using WordTuple = std::vector<Word>;
LinComb<WordTuple> n_fold_diagonal(const TensorElement& x, int n);

/// Adjoint action h . c = sum h_(1) c S(h_(2)). The element h must lie in
/// the Hopf subalgebra generated by the W-letters (NotInHopfSubalgebra
/// otherwise).
TensorElement adjoint_action(const TensorElement& h, const TensorElement& c,
                             Exec exec = Exec::parallel);

// True iff every support word uses only W-letters.
bool in_hopf_subalgebra(const TensorElement& h);

// The multiplication map M : T(A) (x) T(A) -> T(A).
TensorElement multiply_slots(const TensorPair& p);

}  // namespace hopfelim
